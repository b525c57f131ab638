#ifndef LOGDR_DERHAM_HPP
#define LOGDR_DERHAM_HPP

#include "logdr/logforms.hpp"
#include "logdr/weights.hpp"

namespace logdr {

// Cohomology of the grade-q subcomplex of (Omega^*(log A), nabla_omega).
struct ComplexReport {
    int q = 0;
    WeightVector lambda;
    std::vector<std::size_t> dims;   // dim Omega^j(log A)_q, j = 0..n
    std::vector<std::size_t> ranks;  // rank of nabla_j : j -> j+1
    std::vector<std::size_t> betti;  // dim H^j = dim ker nabla_j - rank nabla_{j-1}
    bool certified = false;          // weight conditions passed
};

// Matrix of nabla_omega from the (j,q) basis to the (j+1,q) basis.
// Throws NonDivisible / Inconsistent only on internal invariant violations.
RatMatrix nabla_matrix(BasisCache& cache, const WeightVector& lambda, int j, int q);

// Matrix of the Euler contraction from the (j,q) basis to the (j-1,q) basis.
RatMatrix contraction_matrix(BasisCache& cache, int j, int q);

// Assembles all nabla matrices at grade q, checks nabla^2 = 0, and returns
// dims / image ranks / Betti numbers.
ComplexReport subcomplex_cohomology(BasisCache& cache, const WeightVector& lambda, int q,
                                    bool certified = false);

// Betti numbers of H^*(U, L_Exp(lambda)): the grade -sum(lambda) subcomplex
// when the total weight is an integer, all zeros otherwise. The report is
// flagged certified only when the weight conditions pass.
std::pair<ComplexReport, ConditionReport> twisted_betti(BasisCache& cache, const Lattice& L,
                                                        const WeightVector& lambda);

// Exact check of nabla iota + iota nabla = (q + sum(lambda)) * Id on the
// (j,q) basis.
bool lie_identity_check(BasisCache& cache, const WeightVector& lambda, int j, int q);

// Number of worker threads for independent (j,q) computations; reads
// LOGDERHAM_THREADS, defaulting to the hardware concurrency.
unsigned worker_threads();

}  // namespace logdr

#endif
