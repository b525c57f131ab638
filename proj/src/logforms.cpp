#include "logdr/logforms.hpp"

#include <algorithm>

namespace logdr {

RatVector GradedBasis::coordinates(const PolyForm& A) const {
    std::map<std::pair<IndexSet, std::vector<int>>, std::size_t> pos;
    for (std::size_t i = 0; i < monomialIndex.size(); ++i)
        pos.emplace(std::make_pair(monomialIndex[i].first, monomialIndex[i].second.exponents()),
                    i);
    RatVector v(monomialIndex.size());
    for (const auto& [I, p] : A.coefficients()) {
        for (const auto& [m, c] : p.terms()) {
            auto it = pos.find({I, m.exponents()});
            if (it == pos.end())
                throw std::invalid_argument("GradedBasis::coordinates: term outside index");
            v[it->second] = c;
        }
    }
    return v;
}

RatMatrix GradedBasis::basis_matrix() const {
    RatMatrix B(monomialIndex.size(), basisVectors.size());
    for (std::size_t c = 0; c < basisVectors.size(); ++c)
        for (std::size_t r = 0; r < monomialIndex.size(); ++r) B.at(r, c) = basisVectors[c][r];
    return B;
}

GradedBasis graded_basis(const Arrangement& A, int j, int q) {
    const std::size_t n = A.nvars();
    const int d = static_cast<int>(A.size());
    if (j < 0 || j > static_cast<int>(n))
        throw std::invalid_argument("graded_basis: form degree out of range");

    GradedBasis gb;
    gb.j = j;
    gb.q = q;
    gb.numeratorDegree = q + d - j;
    if (gb.numeratorDegree < 0) return gb;

    const auto subsets = index_subsets(n, j);
    const auto monos = monomials_of_degree(n, gb.numeratorDegree);
    for (const auto& I : subsets)
        for (const auto& m : monos) gb.monomialIndex.emplace_back(I, m);
    const std::size_t ncols = gb.monomialIndex.size();
    if (ncols == 0) return gb;

    // Stack, per hyperplane, the rows of "reduce(d l_k ^ x^m dx_I, l_k) = 0".
    std::vector<std::map<std::pair<IndexSet, std::vector<int>>, std::size_t>> rowMaps(A.size());

    struct Triplet {
        std::size_t row, col;
        Rational value;
    };
    std::vector<Triplet> triplets;
    std::size_t totalRows = 0;

    for (std::size_t k = 0; k < A.size(); ++k) {
        const LinearForm& l = A.hyperplane(k);
        auto& rowMap = rowMaps[k];
        for (std::size_t c = 0; c < ncols; ++c) {
            const auto& [I, m] = gb.monomialIndex[c];
            PolyForm unit = PolyForm::term(n, I, Polynomial::monomial(n, m));
            PolyForm w = reduce_form_mod_linear(wedge_dlinear(l, unit), l);
            for (const auto& [J, p] : w.coefficients()) {
                for (const auto& [mono, coeff] : p.terms()) {
                    auto key = std::make_pair(J, mono.exponents());
                    auto it = rowMap.find(key);
                    std::size_t row;
                    if (it == rowMap.end()) {
                        row = totalRows++;
                        rowMap.emplace(std::move(key), row);
                    } else {
                        row = it->second;
                    }
                    triplets.push_back({row, c, coeff});
                }
            }
        }
    }

    RatMatrix C(totalRows, ncols);
    for (const auto& t : triplets) C.at(t.row, t.col) += t.value;

    gb.basisVectors = kernel_basis(C);
    gb.elements.reserve(gb.basisVectors.size());
    for (const auto& v : gb.basisVectors) {
        PolyForm el(n, j);
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i].is_zero()) continue;
            el.add_term(gb.monomialIndex[i].first,
                        Polynomial::monomial(n, gb.monomialIndex[i].second, v[i]));
        }
        gb.elements.push_back(std::move(el));
    }
    return gb;
}

std::vector<std::pair<int, std::size_t>> hilbert_dims(const Arrangement& A, int j, int qLo,
                                                      int qHi) {
    std::vector<std::pair<int, std::size_t>> out;
    for (int q = qLo; q <= qHi; ++q) out.emplace_back(q, graded_basis(A, j, q).dimension());
    return out;
}

const GradedBasis& BasisCache::basis(int j, int q) {
    const auto key = std::make_pair(j, q);
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
    }
    GradedBasis gb = graded_basis(A_, j, q);
    std::lock_guard<std::mutex> lock(mu_);
    return memo_.emplace(key, std::move(gb)).first->second;
}

}  // namespace logdr
