#include "logdr/derham.hpp"

#include <cstdlib>
#include <future>
#include <thread>

namespace logdr {

unsigned worker_threads() {
    if (const char* env = std::getenv("LOGDERHAM_THREADS")) {
        long v = std::atol(env);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

namespace {

// Prefetch the graded bases of grade q for j = 0..n, in parallel.
void warm_grade(BasisCache& cache, int q) {
    const int n = static_cast<int>(cache.arrangement().nvars());
    const unsigned threads = worker_threads();
    if (threads <= 1) {
        for (int j = 0; j <= n; ++j) cache.basis(j, q);
        return;
    }
    std::vector<std::future<void>> futs;
    for (int j = 0; j <= n; ++j)
        futs.push_back(std::async(std::launch::async, [&cache, j, q] { cache.basis(j, q); }));
    for (auto& f : futs) f.get();
}

// Numerator of f * nabla_omega(A/f) for a logarithmic numerator A:
//   dA + sum_k (lambda_k - 1) * (d l_k ^ A) / l_k
PolyForm nabla_numerator(const Arrangement& A, const WeightVector& lambda, const PolyForm& form) {
    PolyForm out = exterior_derivative(form);
    for (std::size_t k = 0; k < A.size(); ++k) {
        Rational c = lambda[k] - Rational(1);
        if (c.is_zero()) continue;
        const LinearForm& l = A.hyperplane(k);
        out = out + exact_div_form(wedge_dlinear(l, form), l).scaled(c);
    }
    return out;
}

}  // namespace

RatMatrix nabla_matrix(BasisCache& cache, const WeightVector& lambda, int j, int q) {
    const Arrangement& A = cache.arrangement();
    const int n = static_cast<int>(A.nvars());
    const GradedBasis& src = cache.basis(j, q);
    if (j == n) return RatMatrix(0, src.dimension());
    const GradedBasis& dst = cache.basis(j + 1, q);

    RatMatrix images(dst.monomialIndex.size(), src.dimension());
    for (std::size_t c = 0; c < src.dimension(); ++c) {
        RatVector v = dst.coordinates(nabla_numerator(A, lambda, src.elements[c]));
        for (std::size_t r = 0; r < v.size(); ++r) images.at(r, c) = v[r];
    }
    if (dst.monomialIndex.empty()) return RatMatrix(0, src.dimension());
    return solve_columns(dst.basis_matrix(), images);
}

RatMatrix contraction_matrix(BasisCache& cache, int j, int q) {
    const GradedBasis& src = cache.basis(j, q);
    if (j == 0) return RatMatrix(0, src.dimension());
    const GradedBasis& dst = cache.basis(j - 1, q);

    RatMatrix images(dst.monomialIndex.size(), src.dimension());
    for (std::size_t c = 0; c < src.dimension(); ++c) {
        RatVector v = dst.coordinates(euler_contract(src.elements[c]));
        for (std::size_t r = 0; r < v.size(); ++r) images.at(r, c) = v[r];
    }
    if (dst.monomialIndex.empty()) return RatMatrix(0, src.dimension());
    return solve_columns(dst.basis_matrix(), images);
}

ComplexReport subcomplex_cohomology(BasisCache& cache, const WeightVector& lambda, int q,
                                    bool certified) {
    const int n = static_cast<int>(cache.arrangement().nvars());
    warm_grade(cache, q);

    ComplexReport rep;
    rep.q = q;
    rep.lambda = lambda;
    rep.certified = certified;
    rep.dims.resize(n + 1);
    rep.ranks.resize(n + 1);
    rep.betti.resize(n + 1);

    std::vector<RatMatrix> M(n + 1);
    for (int j = 0; j <= n; ++j) {
        rep.dims[j] = cache.basis(j, q).dimension();
        M[j] = nabla_matrix(cache, lambda, j, q);
    }
    for (int j = 0; j + 1 <= n; ++j) {
        if (M[j + 1].cols() != M[j].rows()) throw std::logic_error("nabla chain size mismatch");
        if (!(M[j + 1] * M[j]).is_zero())
            throw std::logic_error("nabla^2 != 0: internal invariant violation");
    }
    for (int j = 0; j <= n; ++j) rep.ranks[j] = rank(M[j]);
    for (int j = 0; j <= n; ++j) {
        std::size_t kerDim = rep.dims[j] - rep.ranks[j];
        std::size_t imPrev = j > 0 ? rep.ranks[j - 1] : 0;
        if (kerDim < imPrev) throw std::logic_error("negative Betti number");
        rep.betti[j] = kerDim - imPrev;
    }
    return rep;
}

std::pair<ComplexReport, ConditionReport> twisted_betti(BasisCache& cache, const Lattice& L,
                                                        const WeightVector& lambda) {
    const Arrangement& A = cache.arrangement();
    const int n = static_cast<int>(A.nvars());
    ConditionReport cond = check_conditions(A, L, lambda);
    Rational total = lambda.total();
    if (!total.is_integer()) {
        // The critical grade -sum(lambda) is not an integer: the candidate
        // subcomplex is empty and the twisted cohomology vanishes.
        ComplexReport rep;
        rep.lambda = lambda;
        rep.certified = cond.ok;
        rep.dims.assign(n + 1, 0);
        rep.ranks.assign(n + 1, 0);
        rep.betti.assign(n + 1, 0);
        return {std::move(rep), std::move(cond)};
    }
    long q = -total.numerator().get_si();
    ComplexReport rep = subcomplex_cohomology(cache, lambda, static_cast<int>(q), cond.ok);
    return {std::move(rep), std::move(cond)};
}

bool lie_identity_check(BasisCache& cache, const WeightVector& lambda, int j, int q) {
    const int n = static_cast<int>(cache.arrangement().nvars());
    const GradedBasis& mid = cache.basis(j, q);
    const std::size_t dim = mid.dimension();

    RatMatrix acc(dim, dim);
    if (j < n)
        acc = acc + contraction_matrix(cache, j + 1, q) * nabla_matrix(cache, lambda, j, q);
    if (j > 0)
        acc = acc + nabla_matrix(cache, lambda, j - 1, q) * contraction_matrix(cache, j, q);
    Rational scale = Rational(q) + lambda.total();
    return acc == RatMatrix::identity(dim).scaled(scale);
}

}  // namespace logdr
