#ifndef LOGDR_TEST_HELPERS_HPP
#define LOGDR_TEST_HELPERS_HPP

#include <random>

#include "logdr/arrangement.hpp"
#include "logdr/polyform.hpp"
#include "logdr/weights.hpp"

namespace logdr::testing {

inline std::vector<Rational> rat_row(std::vector<long> v) {
    std::vector<Rational> r;
    for (long x : v) r.emplace_back(x);
    return r;
}

inline Arrangement make(std::size_t nvars, std::vector<std::vector<long>> rows) {
    std::vector<std::vector<Rational>> forms;
    for (auto& r : rows) forms.push_back(rat_row(r));
    return Arrangement::validate(nvars, forms);
}

inline Arrangement single_line() { return make(1, {{1}}); }
inline Arrangement boolean2() { return make(2, {{1, 0}, {0, 1}}); }
inline Arrangement boolean3() { return make(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}); }
inline Arrangement three_lines() { return make(2, {{1, 0}, {0, 1}, {1, 1}}); }
inline Arrangement four_lines() { return make(2, {{1, 0}, {0, 1}, {1, 1}, {1, -1}}); }
inline Arrangement braid3() { return make(3, {{1, -1, 0}, {1, 0, -1}, {0, 1, -1}}); }

// f = yz(x+y)(x-y)(x+z)(x-z)(y+z)(y-z)
inline Arrangement deleted_b3() {
    return make(3, {{0, 1, 0},
                    {0, 0, 1},
                    {1, 1, 0},
                    {1, -1, 0},
                    {1, 0, 1},
                    {1, 0, -1},
                    {0, 1, 1},
                    {0, 1, -1}});
}

// Half-integer weights on the rank-2 subarrangement {y, z, y+z, y-z},
// quarter weights on the rest. This pairing reproduces the published
// Betti numbers (the factor-order pairing does not).
inline WeightVector deleted_b3_weights() {
    return WeightVector::parse({"1/2", "1/2", "1/4", "1/4", "1/4", "1/4", "-1/2", "-1/2"});
}

inline Polynomial random_poly(std::mt19937_64& rng, std::size_t n, int maxDeg, int terms = 4) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> deg(0, maxDeg);
    Polynomial p(n);
    for (int t = 0; t < terms; ++t) {
        auto monos = monomials_of_degree(n, deg(rng));
        std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
        p.add_term(monos[pick(rng)], Rational(coeff(rng)));
    }
    return p;
}

inline PolyForm random_form(std::mt19937_64& rng, std::size_t n, int j, int maxDeg = 3) {
    PolyForm A(n, j);
    for (const auto& I : index_subsets(n, j)) A.add_term(I, random_poly(rng, n, maxDeg));
    return A;
}

}  // namespace logdr::testing

#endif
