#include "logdr/polyform.hpp"

#include <algorithm>
#include <sstream>

namespace logdr {

PolyForm::PolyForm(std::size_t nvars, int formDegree) : nvars_(nvars), degree_(formDegree) {
    if (formDegree < 0 || formDegree > static_cast<int>(nvars))
        throw std::invalid_argument("PolyForm: form degree out of range");
}

PolyForm PolyForm::from_polynomial(const Polynomial& p) {
    PolyForm A(p.nvars(), 0);
    A.add_term({}, p);
    return A;
}

PolyForm PolyForm::term(std::size_t nvars, IndexSet I, const Polynomial& coeff) {
    PolyForm A(nvars, static_cast<int>(I.size()));
    A.add_term(I, coeff);
    return A;
}

Polynomial PolyForm::coefficient(const IndexSet& I) const {
    auto it = coeffs_.find(I);
    return it == coeffs_.end() ? Polynomial(nvars_) : it->second;
}

void PolyForm::add_term(const IndexSet& I, const Polynomial& coeff) {
    if (static_cast<int>(I.size()) != degree_)
        throw std::invalid_argument("PolyForm::add_term: wrong index size");
    if (!std::is_sorted(I.begin(), I.end()) ||
        std::adjacent_find(I.begin(), I.end()) != I.end())
        throw std::invalid_argument("PolyForm::add_term: index set not strictly increasing");
    if (!I.empty() && I.back() >= nvars_)
        throw std::invalid_argument("PolyForm::add_term: index out of range");
    if (coeff.nvars() != nvars_) throw MismatchedArity("PolyForm::add_term: mismatched nvars");
    if (coeff.is_zero()) return;
    auto [it, inserted] = coeffs_.emplace(I, coeff);
    if (!inserted) {
        it->second = it->second + coeff;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

PolyForm PolyForm::operator+(const PolyForm& o) const {
    if (nvars_ != o.nvars_ || degree_ != o.degree_)
        throw std::invalid_argument("PolyForm: incompatible sum");
    PolyForm r = *this;
    for (const auto& [I, c] : o.coeffs_) r.add_term(I, c);
    return r;
}

PolyForm PolyForm::operator-(const PolyForm& o) const { return *this + (-o); }

PolyForm PolyForm::operator-() const { return scaled(Rational(-1)); }

PolyForm PolyForm::scaled(const Rational& c) const {
    PolyForm r(nvars_, degree_);
    if (c.is_zero()) return r;
    for (const auto& [I, p] : coeffs_) r.add_term(I, p.scaled(c));
    return r;
}

PolyForm PolyForm::multiplied(const Polynomial& p) const {
    PolyForm r(nvars_, degree_);
    for (const auto& [I, c] : coeffs_) r.add_term(I, c * p);
    return r;
}

std::string PolyForm::str(const std::vector<std::string>& varNames) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [I, c] : coeffs_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str(varNames) << ")";
        for (std::size_t i : I) {
            os << " d";
            if (i < varNames.size()) os << varNames[i];
            else os << "x" << (i + 1);
        }
    }
    return os.str();
}

// sign of inserting index i into sorted I: (-1)^{#elements of I below i}
static int insertion_sign(const IndexSet& I, std::size_t i) {
    auto below = std::lower_bound(I.begin(), I.end(), i) - I.begin();
    return (below % 2 == 0) ? 1 : -1;
}

PolyForm exterior_derivative(const PolyForm& A) {
    const std::size_t n = A.nvars();
    const int j = A.form_degree();
    if (j == static_cast<int>(n)) return PolyForm(n, 0);  // Omega^{n+1} = 0
    PolyForm r(n, j + 1);
    for (const auto& [I, a] : A.coefficients()) {
        for (std::size_t i = 0; i < n; ++i) {
            if (std::binary_search(I.begin(), I.end(), i)) continue;
            Polynomial da = a.diff(i);
            if (da.is_zero()) continue;
            IndexSet J = I;
            J.insert(std::upper_bound(J.begin(), J.end(), i), i);
            r.add_term(J, da.scaled(Rational(insertion_sign(I, i))));
        }
    }
    return r;
}

PolyForm wedge(const PolyForm& A, const PolyForm& B) {
    if (A.nvars() != B.nvars()) throw MismatchedArity("wedge: mismatched nvars");
    const std::size_t n = A.nvars();
    const int deg = A.form_degree() + B.form_degree();
    if (deg > static_cast<int>(n)) return PolyForm(n, 0);  // Omega^{n+1} = 0
    PolyForm r(n, deg);
    for (const auto& [I, a] : A.coefficients()) {
        for (const auto& [J, b] : B.coefficients()) {
            // dx_I ^ dx_J: zero on overlap, else sign counts transpositions
            IndexSet merged;
            merged.reserve(I.size() + J.size());
            bool overlap = false;
            long inversions = 0;
            for (std::size_t jj : J) {
                if (std::binary_search(I.begin(), I.end(), jj)) {
                    overlap = true;
                    break;
                }
                inversions += I.end() - std::upper_bound(I.begin(), I.end(), jj);
            }
            if (overlap) continue;
            std::merge(I.begin(), I.end(), J.begin(), J.end(), std::back_inserter(merged));
            Polynomial c = a * b;
            if (inversions % 2 != 0) c = -c;
            r.add_term(merged, c);
        }
    }
    return r;
}

PolyForm euler_contract(const PolyForm& A) {
    const std::size_t n = A.nvars();
    const int j = A.form_degree();
    if (j == 0) return PolyForm(n, 0);
    PolyForm r(n, j - 1);
    for (const auto& [I, a] : A.coefficients()) {
        for (std::size_t t = 0; t < I.size(); ++t) {
            IndexSet J;
            J.reserve(I.size() - 1);
            for (std::size_t s = 0; s < I.size(); ++s)
                if (s != t) J.push_back(I[s]);
            Polynomial c = a * Polynomial::variable(n, I[t]);
            if (t % 2 != 0) c = -c;
            r.add_term(J, c);
        }
    }
    return r;
}

PolyForm wedge_dlinear(const LinearForm& l, const PolyForm& A) {
    const std::size_t n = A.nvars();
    PolyForm dl(n, 1);
    for (std::size_t i = 0; i < n; ++i)
        if (!l.coefficient(i).is_zero())
            dl.add_term({i}, Polynomial(n, l.coefficient(i)));
    return wedge(dl, A);
}

PolyForm reduce_form_mod_linear(const PolyForm& A, const LinearForm& l) {
    PolyForm r(A.nvars(), A.form_degree());
    for (const auto& [I, c] : A.coefficients()) r.add_term(I, reduce_mod_linear(c, l));
    return r;
}

PolyForm exact_div_form(const PolyForm& A, const LinearForm& l) {
    PolyForm r(A.nvars(), A.form_degree());
    for (const auto& [I, c] : A.coefficients()) r.add_term(I, exact_div_linear(c, l));
    return r;
}

std::vector<IndexSet> index_subsets(std::size_t n, int j) {
    std::vector<IndexSet> out;
    if (j < 0 || j > static_cast<int>(n)) return out;
    IndexSet cur;
    // lexicographic enumeration
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (static_cast<int>(cur.size()) == j) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < n; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace logdr
