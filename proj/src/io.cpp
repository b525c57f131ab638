#include "logdr/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace logdr {

using nlohmann::json;

Arrangement ArrangementFile::to_arrangement() const {
    return Arrangement::validate(variables.size(), hyperplanes, labels);
}

ArrangementFile parse_arrangement_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ValidationError("arrangement file must be a JSON object");

    ArrangementFile f;
    if (!doc.contains("variables") || !doc["variables"].is_array())
        throw ValidationError("missing 'variables' array");
    for (const auto& v : doc["variables"]) f.variables.push_back(v.get<std::string>());

    if (!doc.contains("hyperplanes") || !doc["hyperplanes"].is_array())
        throw ValidationError("missing 'hyperplanes' array");
    for (const auto& row : doc["hyperplanes"]) {
        std::vector<Rational> coeffs;
        for (const auto& c : row) {
            if (c.is_number_integer())
                coeffs.push_back(Rational(c.get<long>()));
            else
                coeffs.push_back(Rational::parse(c.get<std::string>()));
        }
        if (coeffs.size() != f.variables.size())
            throw ValidationError("hyperplane coefficient count does not match variable count");
        f.hyperplanes.push_back(std::move(coeffs));
    }

    if (doc.contains("labels"))
        for (const auto& l : doc["labels"]) f.labels.push_back(l.get<std::string>());

    if (doc.contains("weights")) {
        std::vector<std::string> ws;
        for (const auto& w : doc["weights"]) {
            if (w.is_number_integer()) ws.push_back(std::to_string(w.get<long>()));
            else ws.push_back(w.get<std::string>());
        }
        if (ws.size() != f.hyperplanes.size())
            throw ValidationError("weight count does not match hyperplane count");
        f.weights = WeightVector::parse(ws);
    }

    if (doc.contains("factorization")) {
        std::vector<std::vector<std::size_t>> blocks;
        for (const auto& blk : doc["factorization"]) {
            std::vector<std::size_t> b;
            for (const auto& idx : blk) {
                long i = idx.get<long>();
                if (i < 1 || i > static_cast<long>(f.hyperplanes.size()))
                    throw ValidationError("factorization index out of range (1-based)");
                b.push_back(static_cast<std::size_t>(i - 1));
            }
            blocks.push_back(std::move(b));
        }
        f.factorization = std::move(blocks);
    }
    return f;
}

ArrangementFile load_arrangement_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_arrangement_json(ss.str());
}

}  // namespace logdr
