#include "logdr/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "logdr/bsideals.hpp"
#include "logdr/derham.hpp"
#include "logdr/io.hpp"

namespace logdr {

namespace {

using ordered_json = nlohmann::ordered_json;

struct GlobalOpts {
    bool jsonOut = false;
    long maxDegree = -1;  // < 0: no bound
    unsigned long seed = 0;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

WeightVector parse_weights_csv(const std::string& csv) {
    return WeightVector::parse(split(csv, ','));
}

// "1,2;3,4,5" -> blocks of 1-based indices
std::vector<std::vector<std::size_t>> parse_factorization_arg(const std::string& s, std::size_t d) {
    std::vector<std::vector<std::size_t>> blocks;
    for (const auto& blk : split(s, ';')) {
        std::vector<std::size_t> b;
        for (const auto& tok : split(blk, ',')) {
            long i = std::stol(tok);
            if (i < 1 || i > static_cast<long>(d))
                throw ValidationError("factorization index out of range (1-based)");
            b.push_back(static_cast<std::size_t>(i - 1));
        }
        blocks.push_back(std::move(b));
    }
    return blocks;
}

std::string hset_str(const Arrangement& A, const std::vector<std::size_t>& hset) {
    std::string s = "{";
    for (std::size_t i = 0; i < hset.size(); ++i) {
        if (i) s += ",";
        s += A.labels()[hset[i]];
    }
    return s + "}";
}

std::string poincare_str(const std::vector<mpz_class>& coeffs) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t r = 0; r < coeffs.size(); ++r) {
        if (coeffs[r] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (r == 0 || coeffs[r] != 1) os << coeffs[r].get_str();
        if (r >= 1) os << (r == 0 || coeffs[r] == 1 ? "" : "*") << "t";
        if (r >= 2) os << "^" << r;
    }
    if (first) os << "0";
    return os.str();
}

void check_degree_guard(const GlobalOpts& g, long numeratorDegree) {
    if (g.maxDegree >= 0 && numeratorDegree > g.maxDegree)
        throw ValidationError("numerator degree " + std::to_string(numeratorDegree) +
                              " exceeds --max-degree " + std::to_string(g.maxDegree));
}

std::vector<std::size_t> sorted_flat_ids(const Lattice& L) {
    std::vector<std::size_t> ids(L.size());
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i;
    std::sort(ids.begin(), ids.end(), [&](std::size_t a, std::size_t b) {
        const Flat &fa = L.flat(a), &fb = L.flat(b);
        if (fa.rank != fb.rank) return fa.rank < fb.rank;
        return fa.hset < fb.hset;
    });
    return ids;
}

int run_lattice(const GlobalOpts& g, const std::string& file, std::ostream& out) {
    ArrangementFile af = load_arrangement_file(file);
    Arrangement A = af.to_arrangement();
    Lattice L = flats(A);
    PoincareData pd = mobius_poincare(A, L);
    dense_flags(A, L);

    if (g.jsonOut) {
        ordered_json doc;
        doc["variables"] = af.variables;
        doc["hyperplaneCount"] = A.size();
        doc["rank"] = A.rank();
        doc["flats"] = ordered_json::array();
        for (std::size_t id : sorted_flat_ids(L)) {
            const Flat& F = L.flat(id);
            ordered_json jf;
            jf["hyperplanes"] = ordered_json::array();
            for (std::size_t k : F.hset) jf["hyperplanes"].push_back(A.labels()[k]);
            jf["rank"] = F.rank;
            jf["mobius"] = F.mobius;
            jf["dense"] = F.dense;
            doc["flats"].push_back(std::move(jf));
        }
        doc["poincare"] = ordered_json::array();
        for (const auto& c : pd.poincare) doc["poincare"].push_back(c.get_str());
        doc["osBetti"] = ordered_json::array();
        for (const auto& b : pd.betti) doc["osBetti"].push_back(b.get_str());
        out << doc.dump(2) << "\n";
        return 0;
    }

    out << "arrangement: " << A.nvars() << " variables, " << A.size() << " hyperplanes, rank "
        << A.rank() << "\n\n";
    out << std::left << std::setw(28) << "flat" << std::setw(6) << "rank" << std::setw(8)
        << "mobius" << "dense\n";
    for (std::size_t id : sorted_flat_ids(L)) {
        const Flat& F = L.flat(id);
        out << std::left << std::setw(28) << hset_str(A, F.hset) << std::setw(6) << F.rank
            << std::setw(8) << F.mobius << (F.rank == 0 ? "-" : (F.dense ? "yes" : "no")) << "\n";
    }
    out << "\npoincare polynomial: " << poincare_str(pd.poincare) << "\n";
    out << "os betti:";
    for (const auto& b : pd.betti) out << " " << b.get_str();
    out << "\n";
    return 0;
}

ordered_json conditions_json(const Arrangement& A, const Lattice& L, const ConditionReport& rep) {
    ordered_json jc;
    jc["ok"] = rep.ok;
    jc["flats"] = ordered_json::array();
    for (const auto& c : rep.flats) {
        ordered_json jf;
        jf["hyperplanes"] = ordered_json::array();
        for (std::size_t k : L.flat(c.flatId).hset) jf["hyperplanes"].push_back(A.labels()[k]);
        jf["residue"] = c.residue.str();
        jf["threshold"] = c.threshold;
        jf["ok"] = c.ok;
        jc["flats"].push_back(std::move(jf));
    }
    return jc;
}

int run_betti(const GlobalOpts& g, const std::string& file, const std::string& weightsCsv,
              bool haveGrade, long grade, bool doNormalize, std::ostream& out) {
    ArrangementFile af = load_arrangement_file(file);
    Arrangement A = af.to_arrangement();

    WeightVector lambda;
    if (!weightsCsv.empty()) lambda = parse_weights_csv(weightsCsv);
    else if (af.weights) lambda = *af.weights;
    else throw ValidationError("no weights given (use --weights or a 'weights' file entry)");
    if (lambda.size() != A.size())
        throw ValidationError("weight count does not match hyperplane count");

    Lattice L = flats(A);
    long z = 0;
    if (doNormalize) {
        Normalization nm = normalize(A, L, lambda);
        lambda = nm.shifted;
        z = nm.z;
    }

    BasisCache cache(A);
    Rational total = lambda.total();
    ConditionReport cond = check_conditions(A, L, lambda);

    ComplexReport rep;
    bool critical = total.is_integer() && (!haveGrade || Rational(-grade) == total);
    if (haveGrade) {
        check_degree_guard(g, grade + static_cast<long>(A.size()));
        rep = subcomplex_cohomology(cache, lambda, static_cast<int>(grade),
                                    cond.ok && critical);
    } else {
        if (total.is_integer())
            check_degree_guard(g, -total.numerator().get_si() + static_cast<long>(A.size()));
        rep = twisted_betti(cache, L, lambda).first;
    }

    if (g.jsonOut) {
        ordered_json doc;
        doc["lambda"] = ordered_json::array();
        for (const auto& w : lambda.entries()) doc["lambda"].push_back(w.str());
        if (doNormalize) doc["normalizationShift"] = z;
        doc["totalWeight"] = total.str();
        if (total.is_integer()) doc["criticalGrade"] = -total.numerator().get_si();
        doc["grade"] = rep.q;
        doc["conditions"] = conditions_json(A, L, cond);
        doc["dims"] = rep.dims;
        doc["imageRanks"] = rep.ranks;
        doc["betti"] = rep.betti;
        doc["certified"] = rep.certified;
        out << doc.dump(2) << "\n";
        return 0;
    }

    if (doNormalize) {
        out << "normalization shift z = " << z << ", weights:";
        for (const auto& w : lambda.entries()) out << " " << w.str();
        out << "\n";
    }
    out << "total weight: " << total.str() << "\n";
    out << "weight conditions: " << (cond.ok ? "PASS" : "FAIL") << "\n";
    for (const auto& c : cond.flats)
        out << "  " << std::left << std::setw(28) << hset_str(A, L.flat(c.flatId).hset)
            << "residue " << std::setw(8) << c.residue.str() << "threshold " << c.threshold
            << "  " << (c.ok ? "ok" : "FAIL") << "\n";
    if (!total.is_integer()) {
        out << "\ntotal weight is non-integral: twisted cohomology vanishes\n";
    }
    out << "\ngrade " << rep.q << " subcomplex:\n";
    out << "  j   dim   image-rank   betti\n";
    for (std::size_t j = 0; j < rep.dims.size(); ++j)
        out << "  " << std::left << std::setw(4) << j << std::setw(6) << rep.dims[j]
            << std::setw(13) << rep.ranks[j] << rep.betti[j] << "\n";
    out << "betti:";
    for (auto b : rep.betti) out << " " << b;
    out << "\ncertified: " << (rep.certified ? "yes" : "no") << "\n";
    return 0;
}

int run_hilbert(const GlobalOpts& g, const std::string& file, int j, const std::string& qRange,
                std::ostream& out) {
    ArrangementFile af = load_arrangement_file(file);
    Arrangement A = af.to_arrangement();
    if (j < 0 || j > static_cast<int>(A.nvars()))
        throw ValidationError("form degree out of range");

    auto dots = qRange.find("..");
    if (dots == std::string::npos)
        throw ValidationError("--q-range expects the form a..b");
    long qLo = std::stol(qRange.substr(0, dots));
    long qHi = std::stol(qRange.substr(dots + 2));
    if (qLo > qHi) throw ValidationError("--q-range: empty range");
    check_degree_guard(g, qHi + static_cast<long>(A.size()) - j);

    auto dims = hilbert_dims(A, j, static_cast<int>(qLo), static_cast<int>(qHi));

    if (g.jsonOut) {
        ordered_json doc;
        doc["j"] = j;
        doc["dims"] = ordered_json::array();
        for (auto [q, dim] : dims) {
            ordered_json e;
            e["q"] = q;
            e["dim"] = dim;
            doc["dims"].push_back(std::move(e));
        }
        out << doc.dump(2) << "\n";
        return 0;
    }

    out << "dim Omega^" << j << "(log A)_q\n";
    out << "  q     dim\n";
    for (auto [q, dim] : dims)
        out << "  " << std::left << std::setw(6) << q << dim << "\n";
    return 0;
}

int run_bs(const GlobalOpts& g, const std::string& file, const std::string& factArg,
           std::ostream& out) {
    ArrangementFile af = load_arrangement_file(file);
    Arrangement A = af.to_arrangement();
    Lattice L = flats(A);
    mobius_poincare(A, L);
    dense_flags(A, L);

    Factorization F = Factorization::trivial(A.size());
    if (!factArg.empty())
        F = Factorization(parse_factorization_arg(factArg, A.size()), A.size());
    else if (af.factorization)
        F = Factorization(*af.factorization, A.size());

    CandidateSet cs = candidates(A, L, F);
    UnivariateRoots ur = univariate_roots(A, L);
    Rational lo = Rational(-2) + Rational(1, static_cast<long>(A.size()));

    if (g.jsonOut) {
        ordered_json doc;
        doc["factorization"] = ordered_json::array();
        for (const auto& b : F.blocks()) {
            ordered_json jb = ordered_json::array();
            for (std::size_t k : b) jb.push_back(k + 1);
            doc["factorization"].push_back(std::move(jb));
        }
        if (cs.nonEssentialCenterWarning)
            doc["warning"] = "non-essential arrangement: generic bound used for the center edge";
        doc["components"] = ordered_json::array();
        for (const auto& c : cs.components) {
            ordered_json jc;
            jc["edge"] = ordered_json::array();
            for (std::size_t k : L.flat(c.flatId).hset) jc["edge"].push_back(A.labels()[k]);
            jc["rank"] = c.edgeRank;
            jc["dE"] = c.edgeDegree;
            ordered_json co = ordered_json::array();
            for (const auto& [k, dEk] : c.coeffs) {
                ordered_json e;
                e["block"] = k + 1;
                e["coeff"] = dEk;
                co.push_back(std::move(e));
            }
            jc["coeffs"] = std::move(co);
            jc["v"] = c.v;
            jc["constant"] = c.constant();
            doc["components"].push_back(std::move(jc));
        }
        ordered_json ju;
        ju["roots"] = ordered_json::array();
        for (const auto& r : ur.roots) ju["roots"].push_back(r.str());
        if (ur.intervalChecked) {
            ju["interval"] = "(" + lo.str() + ", 0)";
            ju["allInside"] = ur.intervalOk;
        }
        doc["univariate"] = std::move(ju);
        out << doc.dump(2) << "\n";
        return 0;
    }

    out << "factorization:";
    for (const auto& b : F.blocks()) {
        out << " (";
        for (std::size_t i = 0; i < b.size(); ++i) out << (i ? " " : "") << A.labels()[b[i]];
        out << ")";
    }
    out << "\n";
    if (cs.nonEssentialCenterWarning)
        out << "warning: non-essential arrangement; generic bound used for the center edge\n";
    out << "\ncandidate components (sum d_k s_k + rank + v = 0):\n";
    for (const auto& c : cs.components) {
        out << "  " << std::left << std::setw(28) << hset_str(A, L.flat(c.flatId).hset);
        bool first = true;
        for (const auto& [k, dEk] : c.coeffs) {
            if (!first) out << " + ";
            first = false;
            if (dEk != 1) out << dEk << "*";
            out << "s" << (k + 1);
        }
        out << " + " << c.constant() << " = 0\n";
    }
    out << "\nunivariate candidate roots:";
    for (const auto& r : ur.roots) out << " " << r.str();
    out << "\n";
    if (ur.intervalChecked)
        out << "interval (" << lo.str() << ", 0): "
            << (ur.intervalOk ? "all roots inside" : "VIOLATION") << "\n";
    return 0;
}

// --- verify ---------------------------------------------------------------

Polynomial random_poly(std::mt19937_64& rng, std::size_t n, int maxDeg) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> deg(0, maxDeg);
    Polynomial p(n);
    for (int t = 0; t < 4; ++t) {
        auto monos = monomials_of_degree(n, deg(rng));
        std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
        p.add_term(monos[pick(rng)], Rational(coeff(rng)));
    }
    return p;
}

PolyForm random_form(std::mt19937_64& rng, std::size_t n, int j) {
    PolyForm A(n, j);
    for (const auto& I : index_subsets(n, j)) A.add_term(I, random_poly(rng, n, 3));
    return A;
}

int run_verify(const GlobalOpts& g, const std::string& file, const std::string& weightsCsv,
               std::ostream& out) {
    ArrangementFile af = load_arrangement_file(file);
    Arrangement A = af.to_arrangement();
    const std::size_t n = A.nvars();

    WeightVector lambda = WeightVector::zero(A.size());
    if (!weightsCsv.empty()) lambda = parse_weights_csv(weightsCsv);
    else if (af.weights) lambda = *af.weights;
    if (lambda.size() != A.size())
        throw ValidationError("weight count does not match hyperplane count");

    Lattice L = flats(A);
    PoincareData pd = mobius_poincare(A, L);
    dense_flags(A, L);
    BasisCache cache(A);

    const int qLo = -3, qHi = 3;
    check_degree_guard(g, qHi + static_cast<long>(A.size()));

    std::vector<std::pair<std::string, bool>> checks;
    std::mt19937_64 rng(g.seed);

    {  // randomized exterior-algebra identities
        bool dd = true, ii = true, leibniz = true;
        for (int trial = 0; trial < 20; ++trial) {
            std::uniform_int_distribution<int> degPick(0, static_cast<int>(n));
            PolyForm form = random_form(rng, n, degPick(rng));
            dd = dd && exterior_derivative(exterior_derivative(form)).is_zero();
            ii = ii && euler_contract(euler_contract(form)).is_zero();
            Polynomial p = random_poly(rng, n, 3);
            PolyForm lhs = exterior_derivative(form.multiplied(p));
            PolyForm rhs = wedge(PolyForm::from_polynomial(p), exterior_derivative(form)) +
                           wedge(exterior_derivative(PolyForm::from_polynomial(p)), form);
            leibniz = leibniz && lhs == rhs;
        }
        checks.emplace_back("d^2 = 0 (randomized forms)", dd);
        checks.emplace_back("iota_E^2 = 0 (randomized forms)", ii);
        checks.emplace_back("Leibniz rule d(pA) = dp^A + p dA", leibniz);
    }

    Rational total = lambda.total();
    bool totalIntegral = total.is_integer();
    long qCrit = totalIntegral ? -total.numerator().get_si() : 0;

    {  // Lie homotopy identity across the window
        bool ok = true;
        for (int q = qLo; q <= qHi && ok; ++q)
            for (int j = 0; j <= static_cast<int>(n) && ok; ++j)
                ok = lie_identity_check(cache, lambda, j, q);
        checks.emplace_back("homotopy identity nabla iota + iota nabla = (q + sum lambda) Id",
                            ok);
    }

    {  // off-critical acyclicity
        bool ok = true;
        for (int q = qLo; q <= qHi && ok; ++q) {
            if (totalIntegral && q == qCrit) continue;
            ComplexReport rep = subcomplex_cohomology(cache, lambda, q);
            for (auto b : rep.betti) ok = ok && b == 0;
        }
        checks.emplace_back("off-critical grades acyclic", ok);
    }

    {  // untwisted oracle
        auto [rep, cond] = twisted_betti(cache, L, WeightVector::zero(A.size()));
        bool ok = cond.ok;
        for (std::size_t j = 0; j < rep.betti.size(); ++j)
            ok = ok && mpz_class(static_cast<long>(rep.betti[j])) == pd.betti[j];
        checks.emplace_back("betti at lambda = 0 equals Orlik-Solomon betti", ok);
    }

    {  // Euler alternating sum of graded dimensions
        bool ok = true;
        for (int q = qLo; q <= qHi; ++q) {
            long acc = 0;
            for (int j = 0; j <= static_cast<int>(n); ++j) {
                long dim = static_cast<long>(cache.basis(j, q).dimension());
                acc += (j % 2 == 0 ? dim : -dim);
            }
            ok = ok && acc == 0;
        }
        checks.emplace_back("Euler alternating dimension sum vanishes", ok);
    }

    bool all = true;
    for (const auto& [name, pass] : checks) all = all && pass;

    if (g.jsonOut) {
        ordered_json doc;
        doc["checks"] = ordered_json::array();
        for (const auto& [name, pass] : checks) {
            ordered_json jc;
            jc["name"] = name;
            jc["pass"] = pass;
            doc["checks"].push_back(std::move(jc));
        }
        doc["ok"] = all;
        out << doc.dump(2) << "\n";
    } else {
        for (const auto& [name, pass] : checks)
            out << (pass ? "PASS" : "FAIL") << "  " << name << "\n";
        out << (all ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
    }
    return all ? 0 : 2;
}

}  // namespace

int dispatch(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"twisted logarithmic de Rham cohomology of hyperplane arrangements"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    GlobalOpts g;
    app.add_flag("--json", g.jsonOut, "machine-readable JSON output");
    app.add_option("--max-degree", g.maxDegree, "abort if a numerator degree exceeds this bound");
    app.add_option("--seed", g.seed, "seed for randomized property checks");

    std::string file, weightsCsv, qRange = "0..4", factArg;
    int jDeg = 1;
    long grade = 0;
    bool doNormalize = false;

    CLI::App* latticeCmd = app.add_subcommand("lattice", "intersection lattice, Mobius, OS betti");
    latticeCmd->add_option("file", file)->required();

    CLI::App* bettiCmd = app.add_subcommand("betti", "twisted cohomology at the critical grade");
    bettiCmd->add_option("file", file)->required();
    bettiCmd->add_option("--weights", weightsCsv, "comma-separated rational weights");
    CLI::Option* gradeOpt = bettiCmd->add_option("--grade", grade, "compute at this grade instead");
    bettiCmd->add_flag("--normalize", doNormalize, "apply the integer weight shift first");

    CLI::App* hilbertCmd = app.add_subcommand("hilbert", "graded dimensions of Omega^j(log A)");
    hilbertCmd->add_option("file", file)->required();
    hilbertCmd->add_option("-j", jDeg, "form degree")->required();
    hilbertCmd->add_option("--q-range", qRange, "inclusive grade range a..b");

    CLI::App* bsCmd = app.add_subcommand("bs-candidates", "Bernstein-Sato candidate components");
    bsCmd->add_option("file", file)->required();
    bsCmd->add_option("--factorization", factArg, "blocks of 1-based indices, e.g. 1,2;3,4");

    CLI::App* verifyCmd = app.add_subcommand("verify", "run the built-in invariant suite");
    verifyCmd->add_option("file", file)->required();
    verifyCmd->add_option("--weights", weightsCsv, "comma-separated rational weights");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (latticeCmd->parsed()) return run_lattice(g, file, out);
        if (bettiCmd->parsed())
            return run_betti(g, file, weightsCsv, gradeOpt->count() > 0, grade, doNormalize, out);
        if (hilbertCmd->parsed()) return run_hilbert(g, file, jDeg, qRange, out);
        if (bsCmd->parsed()) return run_bs(g, file, factArg, out);
        if (verifyCmd->parsed()) return run_verify(g, file, weightsCsv, out);
        err << "error: no subcommand\n";
        return 1;
    } catch (const NonDivisible& e) {
        err << "internal invariant failure: " << e.what() << "\n";
        return 2;
    } catch (const Inconsistent& e) {
        err << "internal invariant failure: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        // includes ValidationError; must precede logic_error
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        err << "internal invariant failure: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace logdr
