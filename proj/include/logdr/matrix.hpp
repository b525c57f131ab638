#ifndef LOGDR_MATRIX_HPP
#define LOGDR_MATRIX_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "logdr/rational.hpp"

namespace logdr {

struct Inconsistent : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Dense rational matrix, row-major.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static RatMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    bool is_zero() const;

    RatMatrix operator*(const RatMatrix& o) const;
    RatMatrix operator+(const RatMatrix& o) const;
    RatMatrix operator-(const RatMatrix& o) const;
    RatMatrix scaled(const Rational& c) const;

    friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Rational> entries_;
};

using RatVector = std::vector<Rational>;

// Exact rank over Q (fraction-free Bareiss elimination on cleared integers).
std::size_t rank(const RatMatrix& M);

// Basis of the right kernel; vectors integer-normalized (gcd 1, first
// nonzero entry positive). Size = cols - rank.
std::vector<RatVector> kernel_basis(const RatMatrix& M);

// One particular solution of M x = b (free variables set to zero),
// or nullopt when the system is inconsistent.
std::optional<RatVector> solve(const RatMatrix& M, const RatVector& b);

// Simultaneous solve for every column of B; throws Inconsistent if any
// column lies outside the column span of M.
RatMatrix solve_columns(const RatMatrix& M, const RatMatrix& B);

RatVector apply(const RatMatrix& M, const RatVector& v);

}  // namespace logdr

#endif
