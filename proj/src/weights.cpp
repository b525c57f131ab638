#include "logdr/weights.hpp"

namespace logdr {

WeightVector WeightVector::parse(const std::vector<std::string>& strs) {
    std::vector<Rational> entries;
    entries.reserve(strs.size());
    for (const auto& s : strs) entries.push_back(Rational::parse(s));
    return WeightVector(std::move(entries));
}

Rational WeightVector::total() const {
    Rational t;
    for (const auto& e : entries_) t += e;
    return t;
}

WeightVector WeightVector::shifted(long z) const {
    std::vector<Rational> e = entries_;
    for (auto& x : e) x -= Rational(z);
    return WeightVector(std::move(e));
}

Rational edge_residue(const Lattice& L, const WeightVector& lambda, std::size_t flatId) {
    Rational r;
    for (std::size_t k : L.flat(flatId).hset) r += lambda[k];
    return r;
}

ConditionReport check_conditions(const Arrangement& A, const Lattice& L,
                                 const WeightVector& lambda) {
    if (lambda.size() != A.size())
        throw ValidationError("weight count does not match hyperplane count");
    ConditionReport rep;
    for (const Flat& F : L.flats()) {
        if (F.rank == 0) continue;
        FlatCondition c;
        c.flatId = F.id;
        c.residue = edge_residue(L, lambda, F.id);
        c.threshold = std::min<long>(2, static_cast<long>(F.rank));
        c.ok = !(c.residue.is_integer() && c.residue >= Rational(c.threshold));
        rep.ok = rep.ok && c.ok;
        rep.flats.push_back(std::move(c));
    }
    return rep;
}

Normalization normalize(const Arrangement& A, const Lattice& L, const WeightVector& lambda) {
    // Residues drop by z*d_E per flat, so some shift always passes.
    for (long z = 0;; ++z) {
        WeightVector cand = lambda.shifted(z);
        if (check_conditions(A, L, cand).ok) return Normalization{std::move(cand), z};
    }
}

}  // namespace logdr
