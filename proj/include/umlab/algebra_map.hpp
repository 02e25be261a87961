#pragma once
#include "umlab/presentation.hpp"
#include "umlab/rows.hpp"

namespace umlab {

// The homomorphism from a universal presentation into a coefficient ring,
// determined by a normalized bundle (pairing exactly t^k): x_i_j maps to
// the t^j coefficient of row[i], y_i_j to the t^j coefficient of
// complement[i].
struct AlgebraMap {
    int r = 0, k = 0, n = 0; // source presentation data
    LocalBase target;
    std::map<std::string, BaseElem> images;
};

// Builds and verifies the map: every row/complement entry must lie in
// R[t] with degree <= pres.n, the pairing polynomials must evaluate to 0
// (index != k, up to index 2n where they vanish identically) and to 1 at
// index k. NotNormalized on any violation.
AlgebraMap universal_map(const RingPresentation& pres, const RowBundle& bundle);

// Result of carrying a generator bundle (Laurent entries, pairing a unit
// monomial) into R[t]: scale the complement by the inverse of the witness
// unit, then multiply each vector by the least power of t that clears its
// denominators. The output pairing is exactly t^k and unit_witness records
// it; maxdeg bounds every entry degree, and k <= 2*maxdeg whenever k > 0.
struct NormalizedBundle {
    RowBundle bundle;
    int k = 0;
    int maxdeg = 0;
};
NormalizedBundle normalize_for_map(const RowBundle& b);

// Image of a polynomial on the presentation's variables under the map.
BaseElem evaluate(const AlgebraMap& m, const MvPoly& f);

// Smallest n such that every generator with second index > n maps to 0
// (0 for the zero map): the stage of the chain the map factors through.
int stabilization_index(const AlgebraMap& m);

} // namespace umlab
