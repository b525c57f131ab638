#include "logdr/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace logdr {

Monomial Monomial::var(std::size_t nvars, std::size_t i, int power) {
    std::vector<int> e(nvars, 0);
    e.at(i) = power;
    return Monomial(std::move(e));
}

int Monomial::degree() const {
    int d = 0;
    for (int e : exps_) d += e;
    return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
    if (exps_.size() != o.exps_.size()) throw MismatchedArity("Monomial: mismatched nvars");
    std::vector<int> e(exps_.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = exps_[i] + o.exps_[i];
    return Monomial(std::move(e));
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.exponents() < b.exponents();
}

static void enumerate_degree(std::size_t nvars, int degree, std::size_t pos,
                             std::vector<int>& cur, std::vector<Monomial>& out) {
    if (pos + 1 == nvars) {
        cur[pos] = degree;
        out.emplace_back(cur);
        return;
    }
    for (int e = 0; e <= degree; ++e) {
        cur[pos] = e;
        enumerate_degree(nvars, degree - e, pos + 1, cur, out);
    }
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, int degree) {
    std::vector<Monomial> out;
    if (degree < 0 || nvars == 0) {
        if (degree == 0 && nvars == 0) out.push_back(Monomial(std::vector<int>{}));
        return out;
    }
    std::vector<int> cur(nvars, 0);
    enumerate_degree(nvars, degree, 0, cur, out);
    std::sort(out.begin(), out.end(), GrlexLess{});
    return out;
}

mpz_class binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

mpz_class poly_ring_dim(std::size_t nvars, int degree) {
    if (degree < 0) return 0;
    if (nvars == 0) return degree == 0 ? 1 : 0;
    return binomial(degree + static_cast<long>(nvars) - 1, static_cast<long>(nvars) - 1);
}

Polynomial::Polynomial(std::size_t nvars, const Rational& c) : nvars_(nvars) {
    add_term(Monomial::one(nvars), c);
}

Polynomial Polynomial::monomial(std::size_t nvars, const Monomial& m, const Rational& c) {
    if (m.nvars() != nvars) throw MismatchedArity("Polynomial::monomial: mismatched nvars");
    Polynomial p(nvars);
    p.add_term(m, c);
    return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i) {
    return monomial(nvars, Monomial::var(nvars, i));
}

int Polynomial::degree() const {
    if (terms_.empty()) return -1;
    return terms_.rbegin()->first.degree();
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (m.nvars() != nvars_) throw MismatchedArity("Polynomial::add_term: mismatched nvars");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_arity(o);
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    check_arity(o);
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_arity(o);
    Polynomial r(nvars_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Polynomial Polynomial::operator-() const { return scaled(Rational(-1)); }

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial r(nvars_);
    if (c.is_zero()) return r;
    for (const auto& [m, cm] : terms_) r.add_term(m, cm * c);
    return r;
}

Polynomial Polynomial::diff(std::size_t i) const {
    Polynomial r(nvars_);
    for (const auto& [m, c] : terms_) {
        int e = m.exponent(i);
        if (e == 0) continue;
        std::vector<int> exps = m.exponents();
        exps[i] -= 1;
        r.add_term(Monomial(std::move(exps)), c * Rational(e));
    }
    return r;
}

std::string Polynomial::str(const std::vector<std::string>& varNames) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // print highest-degree terms first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        if (!first) os << (c.sign() > 0 ? " + " : " - ");
        else if (c.sign() < 0) os << "-";
        first = false;
        Rational ac = c.sign() < 0 ? -c : c;
        bool wroteCoeff = false;
        if (ac != Rational(1) || m.degree() == 0) {
            os << ac.str();
            wroteCoeff = true;
        }
        for (std::size_t i = 0; i < m.nvars(); ++i) {
            int e = m.exponent(i);
            if (e == 0) continue;
            if (wroteCoeff) os << "*";
            wroteCoeff = true;
            if (i < varNames.size()) os << varNames[i];
            else os << "x" << (i + 1);
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

LinearForm::LinearForm(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    bool nonzero = false;
    for (const auto& c : coeffs_) nonzero = nonzero || !c.is_zero();
    if (!nonzero) throw std::invalid_argument("LinearForm: identically zero");
}

std::size_t LinearForm::pivot() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) return i;
    throw std::logic_error("LinearForm::pivot: zero form");
}

Polynomial LinearForm::to_polynomial() const {
    Polynomial p(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        p.add_term(Monomial::var(coeffs_.size(), i), coeffs_[i]);
    return p;
}

std::string LinearForm::str(const std::vector<std::string>& varNames) const {
    return to_polynomial().str(varNames);
}

Polynomial reduce_mod_linear(const Polynomial& p, const LinearForm& l) {
    if (p.nvars() != l.nvars()) throw MismatchedArity("reduce_mod_linear: mismatched nvars");
    const std::size_t n = p.nvars();
    const std::size_t piv = l.pivot();
    const Rational cp = l.coefficient(piv);

    // x_piv  ->  -(1/cp) * sum_{i != piv} c_i x_i
    Polynomial subst(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (i == piv) continue;
        const Rational& ci = l.coefficient(i);
        if (ci.is_zero()) continue;
        subst.add_term(Monomial::var(n, i), -(ci / cp));
    }

    std::vector<Polynomial> powers;  // powers[k] = subst^k
    powers.push_back(Polynomial(n, Rational(1)));

    Polynomial r(n);
    for (const auto& [m, c] : p.terms()) {
        int e = m.exponent(piv);
        while (static_cast<int>(powers.size()) <= e)
            powers.push_back(powers.back() * subst);
        std::vector<int> rest = m.exponents();
        rest[piv] = 0;
        r = r + powers[e].scaled(c) * Polynomial::monomial(n, Monomial(std::move(rest)));
    }
    return r;
}

Polynomial exact_div_linear(const Polynomial& p, const LinearForm& l) {
    if (p.nvars() != l.nvars()) throw MismatchedArity("exact_div_linear: mismatched nvars");
    const std::size_t n = p.nvars();

    // leading variable of l under grlex
    std::size_t lead = 0;
    while (l.coefficient(lead).is_zero()) ++lead;
    const Rational clead = l.coefficient(lead);

    Polynomial q(n);
    Polynomial r = p;
    while (!r.is_zero()) {
        const auto& [lm, lc] = *r.terms().rbegin();
        if (lm.exponent(lead) == 0)
            throw NonDivisible("exact_div_linear: not divisible", reduce_mod_linear(p, l));
        std::vector<int> exps = lm.exponents();
        exps[lead] -= 1;
        Polynomial u = Polynomial::monomial(n, Monomial(std::move(exps)), lc / clead);
        q = q + u;
        r = r - l.to_polynomial() * u;
    }
    return q;
}

}  // namespace logdr
