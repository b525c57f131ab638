#ifndef LOGDR_POLYFORM_HPP
#define LOGDR_POLYFORM_HPP

#include <map>
#include <vector>

#include "logdr/polynomial.hpp"

namespace logdr {

using IndexSet = std::vector<std::size_t>;  // strictly increasing

// Differential j-form with polynomial coefficients:  sum_I a_I dx_I.
// A 0-form is a bare polynomial (single empty index set).
class PolyForm {
public:
    using CoeffMap = std::map<IndexSet, Polynomial>;

    PolyForm(std::size_t nvars, int formDegree);
    static PolyForm from_polynomial(const Polynomial& p);  // 0-form
    static PolyForm term(std::size_t nvars, IndexSet I, const Polynomial& coeff);

    std::size_t nvars() const { return nvars_; }
    int form_degree() const { return degree_; }
    bool is_zero() const { return coeffs_.empty(); }
    const CoeffMap& coefficients() const { return coeffs_; }
    Polynomial coefficient(const IndexSet& I) const;

    void add_term(const IndexSet& I, const Polynomial& coeff);

    PolyForm operator+(const PolyForm& o) const;
    PolyForm operator-(const PolyForm& o) const;
    PolyForm operator-() const;
    PolyForm scaled(const Rational& c) const;
    PolyForm multiplied(const Polynomial& p) const;

    friend bool operator==(const PolyForm& a, const PolyForm& b) {
        return a.nvars_ == b.nvars_ && a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
    }

    std::string str(const std::vector<std::string>& varNames = {}) const;

private:
    std::size_t nvars_;
    int degree_;
    CoeffMap coeffs_;
};

// d(A) = sum_I da_I ^ dx_I.
PolyForm exterior_derivative(const PolyForm& A);

// A ^ B; wedges past the top degree are the zero form.
PolyForm wedge(const PolyForm& A, const PolyForm& B);

// Contraction along the Euler vector field  E = sum_i x_i d/dx_i.
PolyForm euler_contract(const PolyForm& A);

// dl ^ A for a linear form l (the per-hyperplane logarithmicity probe).
PolyForm wedge_dlinear(const LinearForm& l, const PolyForm& A);

// Reduce every coefficient of A mod l. Zero iff every coefficient is divisible.
PolyForm reduce_form_mod_linear(const PolyForm& A, const LinearForm& l);

// Divide every coefficient of A exactly by l; throws NonDivisible.
PolyForm exact_div_form(const PolyForm& A, const LinearForm& l);

// All j-element subsets of {0..n-1} in lexicographic order.
std::vector<IndexSet> index_subsets(std::size_t n, int j);

}  // namespace logdr

#endif
