#ifndef LOGDR_IO_HPP
#define LOGDR_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include "logdr/arrangement.hpp"
#include "logdr/bsideals.hpp"
#include "logdr/weights.hpp"

namespace logdr {

// On-disk description of an arrangement. Rationals are strings ("p/q" or
// "p"); factorization blocks are 1-based hyperplane indices.
struct ArrangementFile {
    std::vector<std::string> variables;
    std::vector<std::vector<Rational>> hyperplanes;
    std::vector<std::string> labels;                       // optional
    std::optional<WeightVector> weights;                   // optional
    std::optional<std::vector<std::vector<std::size_t>>> factorization;  // 0-based

    Arrangement to_arrangement() const;
};

ArrangementFile parse_arrangement_json(const std::string& text);
ArrangementFile load_arrangement_file(const std::string& path);

}  // namespace logdr

#endif
