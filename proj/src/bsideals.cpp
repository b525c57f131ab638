#include "logdr/bsideals.hpp"

#include <algorithm>

namespace logdr {

Factorization::Factorization(std::vector<std::vector<std::size_t>> blocks, std::size_t d)
    : blocks_(std::move(blocks)), d_(d) {
    std::vector<bool> seen(d, false);
    std::size_t total = 0;
    for (auto& b : blocks_) {
        if (b.empty()) throw ValidationError("factorization: empty block");
        std::sort(b.begin(), b.end());
        for (std::size_t k : b) {
            if (k >= d) throw ValidationError("factorization: hyperplane index out of range");
            if (seen[k]) throw ValidationError("factorization: blocks not disjoint");
            seen[k] = true;
            ++total;
        }
    }
    if (total != d) throw ValidationError("factorization: blocks must cover all hyperplanes");
    if (blocks_.empty()) throw ValidationError("factorization: needs at least one block");
}

Factorization Factorization::trivial(std::size_t d) {
    std::vector<std::size_t> all(d);
    for (std::size_t k = 0; k < d; ++k) all[k] = k;
    return Factorization({all}, d);
}

Factorization Factorization::linears(std::size_t d) {
    std::vector<std::vector<std::size_t>> blocks(d);
    for (std::size_t k = 0; k < d; ++k) blocks[k] = {k};
    return Factorization(std::move(blocks), d);
}

bool Factorization::is_linears() const {
    for (const auto& b : blocks_)
        if (b.size() != 1) return false;
    return true;
}

CandidateSet candidates(const Arrangement& A, const Lattice& L, const Factorization& F) {
    const bool linears = F.is_linears();
    const bool essential = A.rank() == A.nvars();

    CandidateSet out;
    for (const Flat& E : L.flats()) {
        if (E.rank == 0 || !E.dense) continue;
        const long dE = static_cast<long>(E.hset.size());
        const long rk = static_cast<long>(E.rank);
        const bool isCenter = E.hset.size() == A.size() && E.rank == A.rank();

        // d_{E,k} = |J(E) intersect S_k|
        std::map<std::size_t, std::size_t> coeffs;
        for (std::size_t k = 0; k < F.block_count(); ++k) {
            const auto& S = F.blocks()[k];
            std::size_t cnt = 0;
            for (std::size_t h : S)
                if (std::binary_search(E.hset.begin(), E.hset.end(), h)) ++cnt;
            if (cnt > 0) coeffs.emplace(k, cnt);
        }

        long Q;
        if (linears || (isCenter && essential)) {
            Q = 2 * dE - rk - std::min<long>(2, rk);
        } else {
            if (isCenter && !essential) out.nonEssentialCenterWarning = true;
            Q = 2 * dE - rk - 1;
        }

        for (long v = 0; v <= Q; ++v) {
            CandidateComponent c;
            c.flatId = E.id;
            c.coeffs = coeffs;
            c.edgeDegree = static_cast<std::size_t>(dE);
            c.edgeRank = E.rank;
            c.v = v;
            c.vMax = Q;
            out.components.push_back(std::move(c));
        }
    }
    return out;
}

UnivariateRoots univariate_roots(const Arrangement& A, const Lattice& L) {
    CandidateSet cs = candidates(A, L, Factorization::trivial(A.size()));
    UnivariateRoots out;
    out.nonEssentialCenterWarning = cs.nonEssentialCenterWarning;
    for (const auto& c : cs.components) {
        Rational root = Rational(-(static_cast<long>(c.edgeRank) + c.v)) /
                        Rational(static_cast<long>(c.edgeDegree));
        out.roots.push_back(root);
    }
    std::sort(out.roots.begin(), out.roots.end());
    out.roots.erase(std::unique(out.roots.begin(), out.roots.end()), out.roots.end());

    const long d = static_cast<long>(A.size());
    if (d >= 2) {
        out.intervalChecked = true;
        Rational lo = Rational(-2) + Rational(1, d);
        out.intervalOk = true;
        for (const auto& r : out.roots)
            out.intervalOk = out.intervalOk && r > lo && r < Rational(0);
    }
    return out;
}

}  // namespace logdr
