#ifndef LOGDR_BSIDEALS_HPP
#define LOGDR_BSIDEALS_HPP

#include <map>

#include "logdr/arrangement.hpp"

namespace logdr {

// Partition of the hyperplane indices {0..d-1} into r non-empty blocks:
// f_k is the product of the linear forms in block k.
class Factorization {
public:
    explicit Factorization(std::vector<std::vector<std::size_t>> blocks, std::size_t d);
    static Factorization trivial(std::size_t d);
    static Factorization linears(std::size_t d);

    std::size_t block_count() const { return blocks_.size(); }
    const std::vector<std::vector<std::size_t>>& blocks() const { return blocks_; }
    bool is_linears() const;  // every block a singleton
    bool is_trivial() const { return blocks_.size() == 1; }

private:
    std::vector<std::vector<std::size_t>> blocks_;
    std::size_t d_;
};

// Affine hyperplane  sum_k d_{E,k} s_k + rank(E) + v = 0  in s-space.
struct CandidateComponent {
    std::size_t flatId = 0;
    std::map<std::size_t, std::size_t> coeffs;  // k -> d_{E,k}, nonzero only
    std::size_t edgeDegree = 0;                 // d_E
    std::size_t edgeRank = 0;                   // rank(E)
    long v = 0;
    long vMax = 0;  // Q_E
    long constant() const { return static_cast<long>(edgeRank) + v; }
};

struct CandidateSet {
    std::vector<CandidateComponent> components;
    // Set when the center-edge case "E = {0}" was requested for a
    // non-essential arrangement and the generic bound was used instead.
    bool nonEssentialCenterWarning = false;
};

// Candidate codimension-one components over every dense edge, for an
// arbitrary factorization. A superset claim only.
CandidateSet candidates(const Arrangement& A, const Lattice& L, const Factorization& F);

struct UnivariateRoots {
    std::vector<Rational> roots;  // sorted, distinct, each -(rank(E)+v)/d_E
    bool intervalChecked = false;  // only asserted for non-smooth arrangements
    bool intervalOk = false;       // all roots in (-2 + 1/d, 0)
    bool nonEssentialCenterWarning = false;
};

// Candidate roots of the Bernstein-Sato polynomial (trivial factorization).
UnivariateRoots univariate_roots(const Arrangement& A, const Lattice& L);

}  // namespace logdr

#endif
