#include "logdr/arrangement.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace logdr {

namespace {

// Integer coefficients, gcd 1, first nonzero coefficient positive.
std::vector<Rational> canonicalize_form(const std::vector<Rational>& raw) {
    mpz_class l = 1;
    for (const auto& c : raw) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.denominator().get_mpz_t());
    std::vector<mpz_class> w(raw.size());
    mpz_class g = 0;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        w[i] = raw[i].numerator() * (l / raw[i].denominator());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), w[i].get_mpz_t());
    }
    if (g == 0) throw ValidationError("zero linear form");
    for (const auto& z : w)
        if (z != 0) {
            if (sgn(z) < 0) g = -g;
            break;
        }
    std::vector<Rational> out(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) out[i] = Rational(mpz_class(w[i] / g));
    return out;
}

}  // namespace

Arrangement Arrangement::validate(std::size_t nvars,
                                  const std::vector<std::vector<Rational>>& rawForms,
                                  std::vector<std::string> labels) {
    if (nvars == 0) throw ValidationError("arrangement needs at least one variable");
    if (rawForms.empty()) throw ValidationError("empty arrangement");
    std::vector<LinearForm> forms;
    forms.reserve(rawForms.size());
    for (const auto& raw : rawForms) {
        if (raw.size() != nvars)
            throw ValidationError("hyperplane coefficient count does not match variable count");
        forms.emplace_back(canonicalize_form(raw));
    }
    for (std::size_t i = 0; i < forms.size(); ++i)
        for (std::size_t j = i + 1; j < forms.size(); ++j)
            if (forms[i] == forms[j])
                throw ValidationError("arrangement not reduced: hyperplanes " + std::to_string(i) +
                                      " and " + std::to_string(j) + " are proportional");
    if (!labels.empty() && labels.size() != forms.size())
        throw ValidationError("label count does not match hyperplane count");
    if (labels.empty())
        for (std::size_t i = 0; i < forms.size(); ++i) labels.push_back("H" + std::to_string(i + 1));
    return Arrangement(nvars, std::move(forms), std::move(labels));
}

Polynomial Arrangement::defining_polynomial() const {
    Polynomial f(nvars_, Rational(1));
    for (const auto& l : forms_) f = f * l.to_polynomial();
    return f;
}

std::size_t Arrangement::normal_rank(const std::vector<std::size_t>& subset) const {
    RatMatrix M(subset.size(), nvars_);
    for (std::size_t i = 0; i < subset.size(); ++i)
        for (std::size_t j = 0; j < nvars_; ++j) M.at(i, j) = forms_[subset[i]].coefficient(j);
    return ::logdr::rank(M);
}

std::size_t Arrangement::rank() const {
    std::vector<std::size_t> all(size());
    std::iota(all.begin(), all.end(), 0);
    return normal_rank(all);
}

std::size_t Lattice::find(const std::vector<std::size_t>& hset) const {
    for (const auto& f : flats_)
        if (f.hset == hset) return f.id;
    return npos;
}

Lattice flats(const Arrangement& A) {
    const std::size_t d = A.size();

    auto closure = [&](std::vector<std::size_t> S) {
        std::size_t r = A.normal_rank(S);
        std::vector<std::size_t> C;
        for (std::size_t k = 0; k < d; ++k) {
            if (std::binary_search(S.begin(), S.end(), k)) {
                C.push_back(k);
                continue;
            }
            std::vector<std::size_t> T = S;
            T.push_back(k);
            if (A.normal_rank(T) == r) C.push_back(k);
        }
        std::sort(C.begin(), C.end());
        return std::make_pair(C, r);
    };

    Lattice L;
    std::map<std::vector<std::size_t>, std::size_t> seen;
    std::deque<std::size_t> queue;

    auto emit = [&](std::vector<std::size_t> hset, std::size_t r) {
        auto it = seen.find(hset);
        if (it != seen.end()) return it->second;
        Flat f;
        f.id = L.flats().size();
        f.hset = std::move(hset);
        f.rank = r;
        seen.emplace(f.hset, f.id);
        queue.push_back(f.id);
        L.flats().push_back(std::move(f));
        return L.flats().back().id;
    };

    auto [bottom, r0] = closure({});
    emit(std::move(bottom), r0);
    while (!queue.empty()) {
        std::size_t id = queue.front();
        queue.pop_front();
        std::vector<std::size_t> base = L.flat(id).hset;
        for (std::size_t h = 0; h < d; ++h) {
            if (std::binary_search(base.begin(), base.end(), h)) continue;
            std::vector<std::size_t> S = base;
            S.insert(std::upper_bound(S.begin(), S.end(), h), h);
            auto [C, r] = closure(std::move(S));
            emit(std::move(C), r);
        }
    }
    return L;
}

PoincareData mobius_poincare(const Arrangement& A, Lattice& L) {
    const std::size_t n = A.nvars();
    std::vector<std::size_t> order(L.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return L.flat(a).hset.size() < L.flat(b).hset.size();
    });

    PoincareData out;
    out.mobius.assign(L.size(), 0);
    for (std::size_t id : order) {
        const Flat& F = L.flat(id);
        if (F.hset.empty()) {
            out.mobius[id] = 1;
            continue;
        }
        long acc = 0;
        for (const Flat& G : L.flats()) {
            if (G.id == F.id) continue;
            if (std::includes(F.hset.begin(), F.hset.end(), G.hset.begin(), G.hset.end()))
                acc += out.mobius[G.id];
        }
        out.mobius[id] = -acc;
    }
    for (Flat& F : L.flats()) F.mobius = out.mobius[F.id];

    out.poincare.assign(n + 1, 0);
    for (const Flat& F : L.flats())
        out.poincare[F.rank] += mpz_class(out.mobius[F.id]) * (F.rank % 2 == 0 ? 1 : -1);
    out.betti = out.poincare;
    return out;
}

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

void dense_flags(const Arrangement& A, Lattice& L) {
    for (Flat& F : L.flats()) {
        if (F.rank == 0) {
            F.dense = false;
            continue;
        }
        const auto& els = F.hset;
        const std::size_t m = els.size();
        if (m == 1) {
            F.dense = true;
            continue;
        }

        // greedy basis of the normals
        std::vector<std::size_t> basisPos;
        std::vector<std::size_t> cur;
        for (std::size_t p = 0; p < m; ++p) {
            cur.push_back(els[p]);
            if (A.normal_rank(cur) == cur.size()) basisPos.push_back(p);
            else cur.pop_back();
        }

        RatMatrix B(A.nvars(), basisPos.size());
        for (std::size_t c = 0; c < basisPos.size(); ++c)
            for (std::size_t r = 0; r < A.nvars(); ++r)
                B.at(r, c) = A.hyperplane(els[basisPos[c]]).coefficient(r);

        UnionFind uf(m);
        std::vector<bool> isBasis(m, false);
        for (std::size_t p : basisPos) isBasis[p] = true;
        for (std::size_t p = 0; p < m; ++p) {
            if (isBasis[p]) continue;
            RatVector rhs(A.nvars());
            for (std::size_t r = 0; r < A.nvars(); ++r)
                rhs[r] = A.hyperplane(els[p]).coefficient(r);
            auto sol = solve(B, rhs);
            if (!sol) throw std::logic_error("dense_flags: element outside basis span");
            // fundamental circuit of els[p]: itself plus its dependency support
            for (std::size_t c = 0; c < sol->size(); ++c)
                if (!(*sol)[c].is_zero()) uf.unite(p, basisPos[c]);
        }
        std::size_t root = uf.find(0);
        bool connected = true;
        for (std::size_t p = 1; p < m; ++p) connected = connected && uf.find(p) == root;
        F.dense = connected;
    }
}

bool dense_by_bipartition(const Arrangement& A, const std::vector<std::size_t>& hset) {
    const std::size_t m = hset.size();
    if (m == 0) return false;
    if (m == 1) return true;
    const std::size_t full = A.normal_rank(hset);
    for (std::size_t mask = 1; mask + 1 < (1u << m); ++mask) {
        std::vector<std::size_t> S, T;
        for (std::size_t p = 0; p < m; ++p)
            ((mask >> p) & 1 ? S : T).push_back(hset[p]);
        if (A.normal_rank(S) + A.normal_rank(T) == full) return false;
    }
    return true;
}

}  // namespace logdr
