#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "check_err.hpp"
#include "umlab/algebra_map.hpp"
#include "umlab/presentation.hpp"

using namespace umlab;

namespace {
const LocalBase Q = LocalBase::Q();

MvPoly gen_var(const RingPresentation& p, const std::string& name) {
    return mv_var(p.base, p.vars, name);
}
} // namespace

TEST_CASE("presentation shape for r=2, k=1, n=2") {
    RingPresentation p = build_presentation(2, 1, 2, Q);
    CHECK(p.vars.size() == 18); // 2 * (r+1) * (n+1)
    // Standard grading: every variable has grade 1, every relation is a quadric.
    CHECK(p.grades == std::vector<int>(18, 1));
    for (const MvPoly& rel : p.relations) CHECK(rel.homogeneous_degree() == 2);
    // Relations keep every degree but k.
    CHECK(p.relation_degrees == std::vector<int>{0, 2});
    REQUIRE(p.relations.size() == 2);
    CHECK(p.inverted.empty());
    CHECK(std::find(p.vars.begin(), p.vars.end(), "x_2_2") != p.vars.end());
    CHECK(std::find(p.vars.begin(), p.vars.end(), "y_0_0") != p.vars.end());
    CHECK_NOTHROW(grading_check(p));
    CHECK_ERR(build_presentation(1, 0, 1, Q), ErrCode::BadInput);
}

TEST_CASE("pairing polynomials are the convolutions") {
    RingPresentation p = build_presentation(2, 0, 1, Q);
    // l = 0: one product per strand.
    MvPoly p0 = pairing_poly(p, 0);
    CHECK(p0 == gen_var(p, "x_0_0") * gen_var(p, "y_0_0") +
                    gen_var(p, "x_1_0") * gen_var(p, "y_1_0") +
                    gen_var(p, "x_2_0") * gen_var(p, "y_2_0"));
    // l = 1: both cross convolutions of each strand.
    MvPoly p1 = pairing_poly(p, 1);
    CHECK(p1.terms.size() == 6);
    MvPoly cross0 = gen_var(p, "x_0_0") * gen_var(p, "y_0_1") +
                    gen_var(p, "x_0_1") * gen_var(p, "y_0_0");
    for (auto& [e, c] : cross0.terms) CHECK(p1.coeff(e) == BaseElem(1));
    // l = 2 = 2n: top convolution; larger l vanishes identically.
    MvPoly p2 = pairing_poly(p, 2);
    CHECK(p2 == gen_var(p, "x_0_1") * gen_var(p, "y_0_1") +
                    gen_var(p, "x_1_1") * gen_var(p, "y_1_1") +
                    gen_var(p, "x_2_1") * gen_var(p, "y_2_1"));
    CHECK(pairing_poly(p, 3).is_zero());
    CHECK(pairing_poly(p, 7).is_zero());
    // The stored relations are exactly the pairing polynomials of their
    // recorded degrees.
    RingPresentation q = build_presentation(2, 1, 2, Q);
    for (size_t m = 0; m < q.relations.size(); ++m)
        CHECK(q.relations[m] == pairing_poly(q, q.relation_degrees[m]));
}

TEST_CASE("a and b accessors name the first strand") {
    RingPresentation p = build_presentation(2, 1, 2, Q);
    CHECK(a_var(p, 0) == gen_var(p, "x_0_0"));
    CHECK(a_var(p, 2) == gen_var(p, "x_0_2"));
    CHECK(b_var(p, 1) == gen_var(p, "y_0_1"));
}

TEST_CASE("grading check flags mixed-degree relations") {
    RingPresentation p = build_presentation(2, 0, 1, Q);
    p.relations[0] = p.relations[0] + gen_var(p, "x_0_1"); // degree 1 into degree 2
    CHECK_ERR(grading_check(p), ErrCode::NonHomogeneous);
}

TEST_CASE("chain cells pick the advertised relation slices") {
    RingPresentation p = build_presentation(2, 1, 2, Q);
    // (ell = n+1, i = -1): nothing at all.
    ChainCell empty = chain_cell(p, 3, -1);
    CHECK(empty.relations.empty());
    // (ell = 2, i = -1): p_2 only.
    ChainCell top = chain_cell(p, 2, -1);
    CHECK(top.relation_degrees == std::vector<int>{2});
    CHECK(top.relations[0] == pairing_poly(p, 2));
    // (ell = 0, i = 0): p_2, p_0 (skipping k = 1) plus x_0_0.
    ChainCell full = chain_cell(p, 0, 0);
    CHECK(full.relation_degrees == std::vector<int>{2, 0});
    REQUIRE(full.relations.size() == 3);
    CHECK(full.relations[2] == a_var(p, 0));
    // Bounds.
    CHECK_ERR(chain_cell(p, -1, -1), ErrCode::BadInput);
    CHECK_ERR(chain_cell(p, 4, -1), ErrCode::BadInput);
    CHECK_ERR(chain_cell(p, 1, 2), ErrCode::BadInput); // i > min(ell, n)
    CHECK_ERR(chain_cell(p, 2, 3), ErrCode::BadInput);
}

TEST_CASE("the full grid has the right cell count") {
    RingPresentation p2 = build_presentation(2, 1, 2, Q);
    CHECK(cchain_build(p2).size() == 13);
    RingPresentation p1 = build_presentation(2, 0, 1, Q);
    // ell=2: i in {-1,0,1}; ell=1: {-1,0,1}; ell=0: {-1,0} -> 8 cells.
    CHECK(cchain_build(p1).size() == 8);
}

TEST_CASE("localization data for the long frozen instance") {
    RingPresentation p = build_presentation(2, 3, 6, Q);
    LocalizationData d = select_localization_data(p, 2, 2);
    // The killed variables x_0_0, x_0_1 shrink the ambient list; entries
    // live on the shrunk list, so compare by name.
    CHECK(d.a == mv_var(Q, d.a.vars, "x_0_2"));
    CHECK(d.t_idx == std::vector<int>{0, 2, 3, 4});
    CHECK(d.f_idx == std::vector<int>{2, 4, 5, 6});
    REQUIRE(d.t.size() == 4);
    for (size_t m = 0; m < d.t.size(); ++m)
        CHECK(d.t[m] == mv_var(Q, d.t[m].vars, "y_0_" + std::to_string(d.t_idx[m])));
    REQUIRE(d.f.size() == 4);
    // Each relation carries the pivot monomial a * t_m with coefficient 1,
    // and its remainder avoids the later adjoined variables (triangular).
    for (size_t m = 0; m < d.f.size(); ++m) {
        MvPoly probe = d.a * d.t[m];
        REQUIRE(probe.terms.size() == 1);
        CHECK(d.f[m].coeff(probe.terms.begin()->first) == BaseElem(1));
        CHECK(d.f[m].homogeneous_degree() == 2);
    }
    // The ambient list drops the adjoined variables and the killed ones.
    for (int idx : d.t_idx) {
        std::string name = "y_0_" + std::to_string(idx);
        CHECK(std::find(d.T.begin(), d.T.end(), name) == d.T.end());
    }
    CHECK(std::find(d.T.begin(), d.T.end(), "x_0_0") == d.T.end());
    CHECK(std::find(d.T.begin(), d.T.end(), "x_0_2") != d.T.end());

    CHECK_ERR(select_localization_data(p, 7, 0), ErrCode::BadInput);
    CHECK_ERR(select_localization_data(p, 2, 3), ErrCode::BadInput);
}

TEST_CASE("localization data for the short instance") {
    RingPresentation p = build_presentation(2, 0, 2, Q);
    LocalizationData d = select_localization_data(p, 1, 1);
    CHECK(d.a == mv_var(Q, d.a.vars, "x_0_1"));
    CHECK(d.t_idx == std::vector<int>{0, 1});
    CHECK(d.f_idx == std::vector<int>{1, 2});
}

TEST_CASE("universal map of a polynomial bundle") {
    RowBundle b;
    b.base = Q;
    b.row = {lp_monomial(Q, BaseElem(1), 1), lp_const(Q, 1), lp_zero(Q)};
    b.complement = {lp_zero(Q), lp_const(Q, 1), lp_zero(Q)};
    b.unit_witness = lp_const(Q, 1);
    RingPresentation p = build_presentation(2, 0, 1, Q);
    AlgebraMap m = universal_map(p, b);
    CHECK(m.r == 2);
    CHECK(m.k == 0);
    CHECK(m.n == 1);
    CHECK(m.images.at("x_0_1") == BaseElem(1));
    CHECK(m.images.at("x_1_0") == BaseElem(1));
    CHECK(m.images.at("y_1_0") == BaseElem(1));
    int nonzero = 0;
    for (auto& [name, val] : m.images) nonzero += (val != 0);
    CHECK(nonzero == 3);
    CHECK(stabilization_index(m) == 1);
    // Relations die under the map; the pairing at k evaluates to 1.
    for (const MvPoly& rel : p.relations) CHECK(evaluate(m, rel) == BaseElem(0));
    CHECK(evaluate(m, pairing_poly(p, 0)) == BaseElem(1));
}

TEST_CASE("universal map rejects what it cannot express") {
    RingPresentation p = build_presentation(2, 0, 1, Q);
    RowBundle b;
    b.base = Q;
    b.row = {lp_monomial(Q, BaseElem(1), 2), lp_const(Q, 1), lp_zero(Q)};
    b.complement = {lp_zero(Q), lp_const(Q, 1), lp_zero(Q)};
    b.unit_witness = lp_const(Q, 1);
    CHECK_ERR(universal_map(p, b), ErrCode::NotNormalized); // degree 2 > n
    b.row[0] = lp_monomial(Q, BaseElem(1), -1);
    CHECK_ERR(universal_map(p, b), ErrCode::NotNormalized); // Laurent entry
    b.row[0] = lp_monomial(Q, BaseElem(1), 1);
    RingPresentation wrong_k = build_presentation(2, 1, 1, Q);
    CHECK_ERR(universal_map(wrong_k, b), ErrCode::NotNormalized); // pairing is t^0
}

TEST_CASE("normalization carries generated bundles into the map's domain") {
    for (uint64_t seed : {11u, 12u, 13u, 14u}) {
        for (const LocalBase& base : {LocalBase::Q(), LocalBase::Fp(5), LocalBase::Zp(3)}) {
            auto [b, wit] = gen_example(2, base, seed, 5);
            NormalizedBundle nb = normalize_for_map(b);
            // Pairing is exactly t^k now.
            LaurentPoly pair = lp_zero(base);
            for (size_t i = 0; i < nb.bundle.row.size(); ++i)
                pair = pair + nb.bundle.row[i] * nb.bundle.complement[i];
            CHECK(pair == lp_monomial(base, BaseElem(1), nb.k));
            if (nb.k > 0) CHECK(nb.k <= 2 * nb.maxdeg);
            int n = std::max(nb.maxdeg, 1);
            RingPresentation p = build_presentation(2, nb.k, n, base);
            AlgebraMap m = universal_map(p, nb.bundle);
            CHECK(stabilization_index(m) <= nb.maxdeg);
        }
    }
}
