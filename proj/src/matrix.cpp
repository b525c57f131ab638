#include "logdr/matrix.hpp"

#include <utility>

namespace logdr {

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix I(n, n);
    for (std::size_t i = 0; i < n; ++i) I.at(i, i) = Rational(1);
    return I;
}

bool RatMatrix::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("RatMatrix: dimension mismatch in product");
    RatMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += aik * o.at(k, j);
        }
    return r;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("RatMatrix: dimension mismatch in sum");
    RatMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] + o.entries_[i];
    return r;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("RatMatrix: dimension mismatch in difference");
    RatMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] - o.entries_[i];
    return r;
}

RatMatrix RatMatrix::scaled(const Rational& c) const {
    RatMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] * c;
    return r;
}

RatVector apply(const RatMatrix& M, const RatVector& v) {
    if (v.size() != M.cols()) throw std::invalid_argument("apply: dimension mismatch");
    RatVector r(M.rows());
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j) r[i] += M.at(i, j) * v[j];
    return r;
}

namespace {

using ZMatrix = std::vector<std::vector<mpz_class>>;

// Row-wise denominator clearing; row scaling preserves rank, kernel and
// solution sets of [M | B].
ZMatrix cleared(const RatMatrix& M, const RatMatrix* B) {
    const std::size_t rows = M.rows();
    const std::size_t mcols = M.cols();
    const std::size_t bcols = B ? B->cols() : 0;
    ZMatrix a(rows, std::vector<mpz_class>(mcols + bcols));
    for (std::size_t i = 0; i < rows; ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < mcols; ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), M.at(i, j).denominator().get_mpz_t());
        for (std::size_t j = 0; j < bcols; ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), B->at(i, j).denominator().get_mpz_t());
        for (std::size_t j = 0; j < mcols; ++j)
            a[i][j] = M.at(i, j).numerator() * (l / M.at(i, j).denominator());
        for (std::size_t j = 0; j < bcols; ++j)
            a[i][mcols + j] = B->at(i, j).numerator() * (l / B->at(i, j).denominator());
    }
    return a;
}

struct Echelon {
    ZMatrix a;
    std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
};

// Fraction-free (Bareiss) elimination. Pivoting is deterministic: columns
// scanned left to right, first row with a nonzero entry used as pivot.
Echelon bareiss(ZMatrix a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    Echelon e;
    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        if (p != r) std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                mpz_class t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        e.pivots.emplace_back(r, c);
        ++r;
    }
    e.a = std::move(a);
    return e;
}

// Back-substitute one right-hand side over Q with free variables fixed to
// the supplied values; limit = number of solve columns (pivots past it mean
// inconsistency and must be screened by the caller).
RatVector back_substitute(const Echelon& e, std::size_t ncols, RatVector x,
                          const std::vector<mpq_class>& rhs) {
    for (std::size_t k = e.pivots.size(); k-- > 0;) {
        auto [pr, pc] = e.pivots[k];
        if (pc >= ncols) continue;
        mpq_class acc = rhs[pr];
        for (std::size_t j = pc + 1; j < ncols; ++j) {
            if (e.a[pr][j] == 0 || x[j].is_zero()) continue;
            acc -= mpq_class(e.a[pr][j]) * x[j].raw();
        }
        acc /= mpq_class(e.a[pr][pc]);
        acc.canonicalize();
        x[pc] = Rational(acc);
    }
    return x;
}

// Scale to integer entries with gcd 1 and positive first nonzero entry.
RatVector normalize_integer(const RatVector& v) {
    mpz_class l = 1;
    for (const auto& c : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.denominator().get_mpz_t());
    std::vector<mpz_class> w(v.size());
    mpz_class g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        w[i] = v[i].numerator() * (l / v[i].denominator());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), w[i].get_mpz_t());
    }
    if (g == 0) return v;
    int lead = 0;
    for (const auto& z : w)
        if (z != 0) {
            lead = sgn(z);
            break;
        }
    if (lead < 0) g = -g;
    RatVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rational(mpz_class(w[i] / g));
    return out;
}

}  // namespace

std::size_t rank(const RatMatrix& M) {
    return bareiss(cleared(M, nullptr)).pivots.size();
}

std::vector<RatVector> kernel_basis(const RatMatrix& M) {
    const std::size_t cols = M.cols();
    Echelon e = bareiss(cleared(M, nullptr));
    std::vector<bool> isPivot(cols, false);
    for (auto [r, c] : e.pivots) isPivot[c] = true;
    std::vector<RatVector> basis;
    std::vector<mpq_class> zero(M.rows(), 0);
    for (std::size_t fc = 0; fc < cols; ++fc) {
        if (isPivot[fc]) continue;
        RatVector x(cols);
        x[fc] = Rational(1);
        basis.push_back(normalize_integer(back_substitute(e, cols, std::move(x), zero)));
    }
    return basis;
}

std::optional<RatVector> solve(const RatMatrix& M, const RatVector& b) {
    if (b.size() != M.rows()) throw std::invalid_argument("solve: dimension mismatch");
    RatMatrix B(M.rows(), 1);
    for (std::size_t i = 0; i < b.size(); ++i) B.at(i, 0) = b[i];
    Echelon e = bareiss(cleared(M, &B));
    for (auto [r, c] : e.pivots)
        if (c >= M.cols()) return std::nullopt;
    std::vector<mpq_class> rhs(M.rows());
    for (std::size_t i = 0; i < M.rows(); ++i) rhs[i] = mpq_class(e.a[i][M.cols()]);
    return back_substitute(e, M.cols(), RatVector(M.cols()), rhs);
}

RatMatrix solve_columns(const RatMatrix& M, const RatMatrix& B) {
    if (B.rows() != M.rows()) throw std::invalid_argument("solve_columns: dimension mismatch");
    Echelon e = bareiss(cleared(M, &B));
    for (auto [r, c] : e.pivots)
        if (c >= M.cols())
            throw Inconsistent("solve_columns: right-hand side outside column span");
    RatMatrix X(M.cols(), B.cols());
    for (std::size_t k = 0; k < B.cols(); ++k) {
        std::vector<mpq_class> rhs(M.rows());
        for (std::size_t i = 0; i < M.rows(); ++i) rhs[i] = mpq_class(e.a[i][M.cols() + k]);
        RatVector x = back_substitute(e, M.cols(), RatVector(M.cols()), rhs);
        for (std::size_t i = 0; i < M.cols(); ++i) X.at(i, k) = x[i];
    }
    return X;
}

}  // namespace logdr
