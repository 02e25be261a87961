#pragma once
#include "umlab/mvpoly.hpp"

namespace umlab {

// Finite presentation of one stage of the universal coefficient rings:
// polynomial ring on interleaved variables x_i_j, y_i_j (0 <= i <= r,
// 0 <= j <= n, every variable of grade 1) modulo the convolution relations
// p_l = sum_i sum_j x_i_j * y_i_(l-j) for 0 <= l <= n, l != k, each a
// homogeneous quadric.
struct RingPresentation {
    LocalBase base;
    int r = 0, k = 0, n = 0;
    std::vector<std::string> vars;
    std::vector<int> grades;           // grade of vars[i]
    std::vector<MvPoly> relations;     // the p_l kept, ascending l
    std::vector<int> relation_degrees; // the l values, same order
    std::vector<MvPoly> inverted;      // localized presentations list p_k here
};

RingPresentation build_presentation(int r, int k, int n, LocalBase base);

// p_l over the presentation's variable list (any l >= 0; zero polynomial
// once l exceeds 2n).
MvPoly pairing_poly(const RingPresentation& pres, int ell);

// x_0_j / y_0_j as polynomials (the a_j / b_j of the chain construction).
MvPoly a_var(const RingPresentation& pres, int j);
MvPoly b_var(const RingPresentation& pres, int j);

// Verifies every relation is homogeneous for the stored grades; throws
// NonHomogeneous naming the first offender.
void grading_check(const RingPresentation& pres);

// One cell of the auxiliary-algebra grid: the quotient by the relations
// p_n, .., (skip k), .., p_ell together with x_0_0, .., x_0_i (i = -1
// keeps no x-relations; ell = n+1 keeps no p-relations).
struct ChainCell {
    int ell = 0, i = -1;
    std::vector<MvPoly> relations;
    std::vector<int> relation_degrees; // l of each p-relation, descending
};
ChainCell chain_cell(const RingPresentation& pres, int ell, int i);

// Full grid for -1 <= i <= min(ell, n) <= ell <= n+1.
std::vector<ChainCell> cchain_build(const RingPresentation& pres);

// Triangular localization data for the cell (ell, i): element a = x_0_i,
// adjoined variables t_m (a selection of y_0_*), and relations f_m with
// f_m = a * t_m - g_m(t_0, .., t_(m-1)), verified by exact inspection.
struct LocalizationData {
    int ell = 0, i = 0;
    MvPoly a;                       // x_0_i
    std::vector<MvPoly> t;          // t_m as polynomials
    std::vector<int> t_idx;         // index j of b_j chosen as t_m
    std::vector<MvPoly> f;          // f_m
    std::vector<int> f_idx;         // index l of p_l chosen as f_m
    std::vector<std::string> T;     // remaining ambient variables
};
LocalizationData select_localization_data(const RingPresentation& pres, int ell, int i);

} // namespace umlab
