#pragma once
#include "umlab/groebner.hpp"
#include "umlab/rows.hpp"

namespace umlab {

// Unimodular row over a polynomial ring that is congruent to (1, 0, .., 0)
// modulo a designated ideal; the congruence is certified by normal forms
// against a basis of the ideal.
struct IdealRow {
    std::vector<MvPoly> row;
    std::vector<MvPoly> complement; // sum(row[i] * complement[i]) == 1
    std::vector<MvPoly> ideal_gens;
};

// Checks sum(row . complement) == 1 (NotUnimodular) and the congruence
// pattern mod the ideal (NotInIdealForm).
void verify_ideal_row(const IdealRow& r,
                      size_t pair_budget = kDefaultPairBudget);

// Given row a with any complement c (sum a_i c_i == 1) and a ≡ (1,0,..,0)
// mod I, produces a complement b with sum a_i b_i == 1, b_j a multiple of
// a_j, and b ≡ (1,0,..,0) mod I. Built by expanding (sum a_i c_i)^(r+2)
// and absorbing a forced square a_j^2 in every term (pigeonhole on the
// exponents).
std::vector<MvPoly> shrink_to_ideal_row(const std::vector<MvPoly>& row,
                                        const std::vector<MvPoly>& complement,
                                        const std::vector<MvPoly>& ideal_gens,
                                        size_t pair_budget = kDefaultPairBudget);

// Denominator descent for rows over Q[t] whose coefficients only have
// denominators supported on s: substitutes t -> s^k t with the smallest k
// making every row and complement entry integral, and returns the
// integral bundle over the integers together with k.
struct DescentResult {
    RowBundle descended; // base Integers, row a_i(t) = b_i(s^k t)
    long s = 1;
    int k = 0;
};
DescentResult roitman_descend(const RowBundle& b, long s);

// The inverse substitution t -> s^(-k) t applied entrywise, landing back
// over the rationals; a completion of the descended row maps to a
// completion of the original row.
LaurentMat roitman_lift_matrix(const LaurentMat& m, long s, int k);

} // namespace umlab
