#include "logdr/rational.hpp"

namespace logdr {

Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("Rational::parse: empty string");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            mpz_class num(s);
            return Rational(num);
        }
        mpz_class num(s.substr(0, slash));
        mpz_class den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("Rational::parse: zero denominator");
        mpq_class q(num, den);
        q.canonicalize();
        return Rational(q);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("Rational::parse: malformed rational '" + s + "'");
    }
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

}  // namespace logdr
