#ifndef LOGDR_ARRANGEMENT_HPP
#define LOGDR_ARRANGEMENT_HPP

#include <string>
#include <vector>

#include "logdr/matrix.hpp"
#include "logdr/polynomial.hpp"

namespace logdr {

struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Central, reduced arrangement: d pairwise non-proportional linear forms.
// Forms are canonicalized: integer coefficients, gcd 1, first nonzero
// coefficient positive.
class Arrangement {
public:
    static Arrangement validate(std::size_t nvars,
                                const std::vector<std::vector<Rational>>& rawForms,
                                std::vector<std::string> labels = {});

    std::size_t nvars() const { return nvars_; }
    std::size_t size() const { return forms_.size(); }  // d
    const LinearForm& hyperplane(std::size_t k) const { return forms_[k]; }
    const std::vector<LinearForm>& hyperplanes() const { return forms_; }
    const std::vector<std::string>& labels() const { return labels_; }

    // Product of the defining linear forms.
    Polynomial defining_polynomial() const;

    // Rank of the normals of the hyperplanes indexed by subset.
    std::size_t normal_rank(const std::vector<std::size_t>& subset) const;
    std::size_t rank() const;  // rank of the full arrangement

private:
    Arrangement(std::size_t nvars, std::vector<LinearForm> forms, std::vector<std::string> labels)
        : nvars_(nvars), forms_(std::move(forms)), labels_(std::move(labels)) {}

    std::size_t nvars_;
    std::vector<LinearForm> forms_;
    std::vector<std::string> labels_;
};

struct Flat {
    std::size_t id = 0;
    std::vector<std::size_t> hset;  // sorted, closed under span-closure
    std::size_t rank = 0;
    long mobius = 0;
    bool dense = false;
};

// Intersection lattice, ordered by inclusion of hyperplane sets.
class Lattice {
public:
    const std::vector<Flat>& flats() const { return flats_; }
    std::vector<Flat>& flats() { return flats_; }
    const Flat& flat(std::size_t id) const { return flats_[id]; }
    std::size_t size() const { return flats_.size(); }

    // id of the flat with the given closed hyperplane set, or npos.
    std::size_t find(const std::vector<std::size_t>& hset) const;
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    friend Lattice flats(const Arrangement& A);
    std::vector<Flat> flats_;
};

// All closure-flats of A, with ranks, by breadth-first closure generation.
Lattice flats(const Arrangement& A);

struct PoincareData {
    std::vector<long> mobius;       // per flat id
    std::vector<mpz_class> poincare;  // coefficients of pi(A, t)
    std::vector<mpz_class> betti;     // OS Betti numbers b_0..b_n
};

// Mobius recursion, Poincare polynomial, Orlik-Solomon Betti numbers.
// Also stores mobius values into L.
PoincareData mobius_poincare(const Arrangement& A, Lattice& L);

// Marks each flat of rank >= 1 dense iff the vector matroid on its normals
// is connected (fundamental-circuit component method).
void dense_flags(const Arrangement& A, Lattice& L);

// Exhaustive oracle: no proper bipartition (S, S^c) of the flat's
// hyperplanes with rank(S) + rank(S^c) = rank(flat).
bool dense_by_bipartition(const Arrangement& A, const std::vector<std::size_t>& hset);

}  // namespace logdr

#endif
