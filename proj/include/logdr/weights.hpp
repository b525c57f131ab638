#ifndef LOGDR_WEIGHTS_HPP
#define LOGDR_WEIGHTS_HPP

#include <vector>

#include "logdr/arrangement.hpp"

namespace logdr {

// Rational weights, one per hyperplane.
class WeightVector {
public:
    WeightVector() = default;
    explicit WeightVector(std::vector<Rational> entries) : entries_(std::move(entries)) {}
    static WeightVector zero(std::size_t d) { return WeightVector(std::vector<Rational>(d)); }
    static WeightVector parse(const std::vector<std::string>& strs);

    std::size_t size() const { return entries_.size(); }
    const Rational& operator[](std::size_t k) const { return entries_[k]; }
    const std::vector<Rational>& entries() const { return entries_; }

    // iota_E(omega) = lambda_1 + ... + lambda_d
    Rational total() const;

    WeightVector shifted(long z) const;  // lambda - z*(1,...,1)

private:
    std::vector<Rational> entries_;
};

struct FlatCondition {
    std::size_t flatId;
    Rational residue;
    long threshold;  // min{2, rank}
    bool ok;
};

struct ConditionReport {
    std::vector<FlatCondition> flats;  // rank >= 1 flats only
    bool ok = true;
};

// Sum of weights over the hyperplanes containing the flat.
Rational edge_residue(const Lattice& L, const WeightVector& lambda, std::size_t flatId);

// The per-edge condition: residue not in Z_{>= min{2, rank(E)}}.
ConditionReport check_conditions(const Arrangement& A, const Lattice& L,
                                 const WeightVector& lambda);

struct Normalization {
    WeightVector shifted;
    long z = 0;
};

// Smallest integer z >= 0 with lambda - z*(1,...,1) passing the conditions.
Normalization normalize(const Arrangement& A, const Lattice& L, const WeightVector& lambda);

}  // namespace logdr

#endif
