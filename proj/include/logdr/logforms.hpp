#ifndef LOGDR_LOGFORMS_HPP
#define LOGDR_LOGFORMS_HPP

#include <map>
#include <mutex>
#include <utility>

#include "logdr/arrangement.hpp"
#include "logdr/matrix.hpp"
#include "logdr/polyform.hpp"

namespace logdr {

// Explicit basis of the graded piece Omega^j(log A)_q, presented by the
// numerators A of eta = A / f. The numerator degree is m = q + d - j.
struct GradedBasis {
    int j = 0;
    int q = 0;
    int numeratorDegree = -1;
    std::vector<std::pair<IndexSet, Monomial>> monomialIndex;
    std::vector<RatVector> basisVectors;  // coordinates over monomialIndex
    std::vector<PolyForm> elements;       // the numerators themselves

    std::size_t dimension() const { return basisVectors.size(); }

    // Coordinates of a numerator over monomialIndex. Throws if the form
    // has a term outside the index (wrong degree).
    RatVector coordinates(const PolyForm& A) const;

    // Matrix whose columns are the basis vectors.
    RatMatrix basis_matrix() const;
};

// Basis of Omega^j(log A)_q: unknowns are the coefficients of the
// numerator; each hyperplane k contributes the constraints
// "d l_k ^ A = 0 mod l_k".
GradedBasis graded_basis(const Arrangement& A, int j, int q);

// Graded dimensions of Omega^j(log A)_q over an inclusive q range.
std::vector<std::pair<int, std::size_t>> hilbert_dims(const Arrangement& A, int j, int qLo,
                                                      int qHi);

// Memoizing store of graded bases for one arrangement. Distinct (j, q)
// pieces are independent; computation may run concurrently.
class BasisCache {
public:
    explicit BasisCache(Arrangement A) : A_(std::move(A)) {}

    const Arrangement& arrangement() const { return A_; }
    const GradedBasis& basis(int j, int q);

private:
    Arrangement A_;
    std::mutex mu_;
    std::map<std::pair<int, int>, GradedBasis> memo_;
};

}  // namespace logdr

#endif
