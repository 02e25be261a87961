#pragma once
#include "umlab/laurent.hpp"

namespace umlab {

// f is a Weierstrass polynomial over the local base: monic in R[t] with every
// coefficient below the leading one in the maximal ideal. NotLocalBase for Z.
bool weierstrass_test(const LaurentPoly& f);

// Inverse of f in R[t]/(g) for monic g of degree n >= 1: builds the n x n
// multiplication-by-f matrix over the base and solves exactly. NotInvertible
// when the matrix determinant is not a unit of the base. Result has degree
// < n and satisfies u*f == 1 mod g.
LaurentPoly invert_mod_monic(const LaurentPoly& f, const LaurentPoly& g);

// For f with unit constant coefficient and Weierstrass g: the exact pair
// (u, v) with u*f + v*g == 1. u comes from invert_mod_monic, v by exact
// division of 1 - u*f by the monic g.
// Errors: NotWeierstrass, NonUnitConstantTerm.
std::pair<LaurentPoly, LaurentPoly> top_bottom_bezout(const LaurentPoly& f,
                                                      const LaurentPoly& g);

} // namespace umlab
