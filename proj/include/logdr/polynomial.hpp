#ifndef LOGDR_POLYNOMIAL_HPP
#define LOGDR_POLYNOMIAL_HPP

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "logdr/rational.hpp"

namespace logdr {

struct MismatchedArity : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Exponent tuple; length is the ambient variable count.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
        for (int e : exps_)
            if (e < 0) throw std::invalid_argument("Monomial: negative exponent");
    }
    static Monomial one(std::size_t nvars) { return Monomial(std::vector<int>(nvars, 0)); }
    static Monomial var(std::size_t nvars, std::size_t i, int power = 1);

    std::size_t nvars() const { return exps_.size(); }
    int exponent(std::size_t i) const { return exps_[i]; }
    const std::vector<int>& exponents() const { return exps_; }
    int degree() const;

    Monomial operator*(const Monomial& o) const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return a.exps_ != b.exps_; }

private:
    std::vector<int> exps_;
};

// Graded lexicographic order: total degree first, then lex on exponents.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// All degree-d monomials in nvars variables, in grlex order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, int degree);

// dim R_d for R a polynomial ring in nvars variables = C(d + nvars - 1, nvars - 1).
mpz_class poly_ring_dim(std::size_t nvars, int degree);
mpz_class binomial(long n, long k);

// Sparse exact polynomial: no zero coefficients stored.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, GrlexLess>;

    explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}
    Polynomial(std::size_t nvars, const Rational& c);  // constant

    static Polynomial monomial(std::size_t nvars, const Monomial& m,
                               const Rational& c = Rational(1));
    static Polynomial variable(std::size_t nvars, std::size_t i);

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    int degree() const;  // -1 for the zero polynomial
    Rational coefficient(const Monomial& m) const;

    void add_term(const Monomial& m, const Rational& c);

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial scaled(const Rational& c) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    // Partial derivative with respect to variable i.
    Polynomial diff(std::size_t i) const;

    std::string str(const std::vector<std::string>& varNames = {}) const;

private:
    void check_arity(const Polynomial& o) const {
        if (nvars_ != o.nvars_) throw MismatchedArity("Polynomial: mismatched nvars");
    }

    std::size_t nvars_;
    TermMap terms_;
};

// Homogeneous degree-1 form without constant term; the arrangement is central.
class LinearForm {
public:
    explicit LinearForm(std::vector<Rational> coeffs);

    std::size_t nvars() const { return coeffs_.size(); }
    const Rational& coefficient(std::size_t i) const { return coeffs_[i]; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    // Smallest index with nonzero coefficient (positive after arrangement
    // canonicalization).
    std::size_t pivot() const;

    Polynomial to_polynomial() const;

    friend bool operator==(const LinearForm& a, const LinearForm& b) {
        return a.coeffs_ == b.coeffs_;
    }

    std::string str(const std::vector<std::string>& varNames = {}) const;

private:
    std::vector<Rational> coeffs_;
};

struct NonDivisible : std::runtime_error {
    Polynomial remainder;
    NonDivisible(const std::string& what, Polynomial rem)
        : std::runtime_error(what), remainder(std::move(rem)) {}
};

// Substitute the pivot variable of l into p; result is 0 iff l divides p.
Polynomial reduce_mod_linear(const Polynomial& p, const LinearForm& l);

// Exact quotient p / l; throws NonDivisible carrying the reduction residue.
Polynomial exact_div_linear(const Polynomial& p, const LinearForm& l);

}  // namespace logdr

#endif
