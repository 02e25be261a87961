#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "check_err.hpp"
#include "umlab/groebner.hpp"
#include "umlab/ideal_rows.hpp"

using namespace umlab;

namespace {

const LocalBase Q = LocalBase::Q();
const std::vector<std::string> U = {"u"};

// Polynomial in u with the given coefficients of u^0, u^1, ..
MvPoly upoly(std::initializer_list<long> coeffs) {
    MvPoly p(Q, U);
    int e = 0;
    for (long c : coeffs) {
        p.add_term(ExpVec{e}, BaseElem(c));
        ++e;
    }
    return p;
}

MvPoly dot(const std::vector<MvPoly>& a, const std::vector<MvPoly>& b) {
    MvPoly s = mv_zero(Q, U);
    for (size_t i = 0; i < a.size(); ++i) s = s + a[i] * b[i];
    return s;
}

} // namespace

TEST_CASE("ideal-row verification accepts the pattern and rejects the rest") {
    std::vector<MvPoly> gens = {upoly({0, 1})}; // the ideal (u)
    IdealRow good;
    good.row = {upoly({1, 1}), upoly({0, 1}), upoly({0})};
    good.complement = {upoly({1, -1}), upoly({0, 1}), upoly({0})};
    good.ideal_gens = gens;
    REQUIRE(dot(good.row, good.complement) == upoly({1}));
    CHECK_NOTHROW(verify_ideal_row(good));

    IdealRow bad_sum = good;
    bad_sum.complement[2] = upoly({5});
    bad_sum.row[2] = upoly({0, 0, 3});
    CHECK_ERR(verify_ideal_row(bad_sum), ErrCode::NotUnimodular);

    IdealRow bad_pattern;
    bad_pattern.row = {upoly({0, 1}), upoly({1}), upoly({0})};
    bad_pattern.complement = {upoly({0}), upoly({1}), upoly({0})};
    bad_pattern.ideal_gens = gens;
    REQUIRE(dot(bad_pattern.row, bad_pattern.complement) == upoly({1}));
    CHECK_ERR(verify_ideal_row(bad_pattern), ErrCode::NotInIdealForm);
}

TEST_CASE("shrinking the standard row returns the standard complement") {
    std::vector<MvPoly> gens = {upoly({0, 1})};
    std::vector<MvPoly> a = {upoly({1}), upoly({0}), upoly({0})};
    std::vector<MvPoly> b = shrink_to_ideal_row(a, a, gens);
    CHECK(b[0] == upoly({1}));
    CHECK(b[1].is_zero());
    CHECK(b[2].is_zero());
}

TEST_CASE("shrinking produces a complement congruent to the pattern") {
    std::vector<MvPoly> gens = {upoly({0, 1})};
    // a = (1+u, u, 0) with hand-built complement (1-u, u, 0).
    std::vector<MvPoly> a = {upoly({1, 1}), upoly({0, 1}), upoly({0})};
    std::vector<MvPoly> c = {upoly({1, -1}), upoly({0, 1}), upoly({0})};
    REQUIRE(dot(a, c) == upoly({1}));

    std::vector<MvPoly> b = shrink_to_ideal_row(a, c, gens);
    CHECK(dot(a, b) == upoly({1}));

    GBContext ctx{Q, U, MonomialOrder{MonomialOrder::DegRevLex}};
    GroebnerBasis gb = buchberger(gens, ctx);
    CHECK(normal_form(b[0] - upoly({1}), gb).is_zero());
    CHECK(normal_form(b[1], gb).is_zero());
    CHECK(normal_form(b[2], gb).is_zero());
    // Each output entry is a multiple of the matching input entry.
    GroebnerBasis gba1 = buchberger({a[1]}, ctx);
    CHECK(normal_form(b[1], gba1).is_zero());
}

TEST_CASE("shrinking demands the congruence on the input row") {
    std::vector<MvPoly> gens = {upoly({0, 1})};
    std::vector<MvPoly> a = {upoly({0, 1}), upoly({1}), upoly({0})};
    std::vector<MvPoly> c = {upoly({0}), upoly({1}), upoly({0})};
    CHECK_ERR(shrink_to_ideal_row(a, c, gens), ErrCode::NotInIdealForm);

    std::vector<MvPoly> a2 = {upoly({1, 1}), upoly({0, 1}), upoly({0})};
    std::vector<MvPoly> c_bad = {upoly({1}), upoly({1}), upoly({0})};
    CHECK_ERR(shrink_to_ideal_row(a2, c_bad, gens), ErrCode::NotUnimodular);
}

namespace {

RowBundle qbundle(std::vector<LaurentPoly> row, std::vector<LaurentPoly> comp) {
    RowBundle b;
    b.base = Q;
    b.row = std::move(row);
    b.complement = std::move(comp);
    b.unit_witness = lp_const(Q, 1);
    return b;
}

} // namespace

TEST_CASE("denominator descent: frozen three-entry instance at s = 2") {
    // row (1 + t/2, t/4, t), complement (1 - t/2, t, 0).
    RowBundle b = qbundle(
        {lp_const(Q, 1) + lp_monomial(Q, BaseElem(1) / 2, 1), lp_monomial(Q, BaseElem(1) / 4, 1),
         lp_monomial(Q, BaseElem(1), 1)},
        {lp_const(Q, 1) + lp_monomial(Q, BaseElem(-1) / 2, 1), lp_monomial(Q, BaseElem(1), 1),
         lp_zero(Q)});
    DescentResult d = roitman_descend(b, 2);
    CHECK(d.k == 2);
    CHECK(d.s == 2);
    LocalBase Z = LocalBase::Z();
    CHECK(d.descended.row[0] == lp_make(Z, {{0, 1}, {1, 2}}));
    CHECK(d.descended.row[1] == lp_monomial(Z, BaseElem(1), 1));
    CHECK(d.descended.row[2] == lp_monomial(Z, BaseElem(4), 1));
    CHECK(d.descended.complement[0] == lp_make(Z, {{0, 1}, {1, -2}}));
    CHECK(d.descended.complement[1] == lp_monomial(Z, BaseElem(4), 1));
    CHECK(d.descended.complement[2].is_zero());
    // Constant terms survive the substitution untouched.
    for (size_t i = 0; i < b.row.size(); ++i)
        CHECK(d.descended.row[i].coeff(0) == b.row[i].coeff(0));
}

TEST_CASE("denominator descent: integral input needs no substitution") {
    RowBundle b = qbundle({lp_make(Q, {{0, 1}, {1, 2}}), lp_monomial(Q, BaseElem(1), 1)},
                          {lp_make(Q, {{0, 1}, {1, -2}}), lp_monomial(Q, BaseElem(4), 1)});
    DescentResult d = roitman_descend(b, 2);
    CHECK(d.k == 0);
    CHECK(d.descended.row[0] == lp_make(LocalBase::Z(), {{0, 1}, {1, 2}}));
    CHECK(d.descended.complement[1] == lp_monomial(LocalBase::Z(), BaseElem(4), 1));
}

TEST_CASE("denominator descent rejects foreign denominators") {
    // (1 + t/3)(1 - t/3) + t * (t/9) == 1.
    RowBundle b = qbundle({lp_const(Q, 1) + lp_monomial(Q, BaseElem(1) / 3, 1),
                           lp_monomial(Q, BaseElem(1), 1)},
                          {lp_const(Q, 1) + lp_monomial(Q, BaseElem(-1) / 3, 1),
                           lp_monomial(Q, BaseElem(1) / 9, 1)});
    CHECK_ERR(roitman_descend(b, 2), ErrCode::NotLocalizedAtS);
    // The same denominators are fine when s actually reaches them.
    DescentResult d = roitman_descend(b, 3);
    CHECK(d.k == 2);
}

TEST_CASE("denominator descent rejects undescendable constant terms") {
    // Complement constant term 1/2 can never be cleared by t -> c t.
    RowBundle b = qbundle({lp_const(Q, 1), lp_monomial(Q, BaseElem(2), 1)},
                          {lp_const(Q, 1) + lp_monomial(Q, BaseElem(-1), 1),
                           lp_const(Q, BaseElem(1) / 2)});
    // pairing: 1*(1 - t) + 2t*(1/2) == 1.
    CHECK_ERR(roitman_descend(b, 2), ErrCode::NotLocalizedAtS);
}

TEST_CASE("denominator descent: the row itself must match the pattern") {
    RowBundle b = qbundle({lp_monomial(Q, BaseElem(1), 1), lp_const(Q, 1)},
                          {lp_zero(Q), lp_const(Q, 1)});
    CHECK_ERR(roitman_descend(b, 2), ErrCode::BadInput);
    RowBundle laurent = qbundle({lp_const(Q, 1), lp_monomial(Q, BaseElem(1), -1)},
                                {lp_const(Q, 1), lp_zero(Q)});
    CHECK_ERR(roitman_descend(laurent, 2), ErrCode::BadInput);
}

TEST_CASE("descent then matrix lift restores the original row") {
    // Length-two instance so the completion is available in closed form.
    RowBundle b = qbundle({lp_const(Q, 1) + lp_monomial(Q, BaseElem(1) / 2, 1),
                           lp_monomial(Q, BaseElem(1) / 4, 1)},
                          {lp_const(Q, 1) + lp_monomial(Q, BaseElem(-1) / 2, 1),
                           lp_monomial(Q, BaseElem(1), 1)});
    DescentResult d = roitman_descend(b, 2);
    CHECK(d.k == 2);

    LaurentMat m = complete_length2(d.descended);
    CHECK(mat_det(m) == lp_const(LocalBase::Z(), 1));

    LaurentMat lifted = roitman_lift_matrix(m, d.s, d.k);
    CHECK(lifted.at(0, 0) == b.row[0]);
    CHECK(lifted.at(1, 0) == b.row[1]);
    CHECK(mat_det(lifted) == lp_const(Q, 1));

    // A zero exponent only changes the base back to the rationals.
    LaurentMat same = roitman_lift_matrix(m, 2, 0);
    LaurentPoly rebased(Q);
    for (const auto& [e, cf] : d.descended.row[0].coeffs) rebased.set(e, cf);
    CHECK(same.at(0, 0) == rebased);
}
