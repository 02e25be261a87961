#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "check_err.hpp"
#include "umlab/json_io.hpp"

using namespace umlab;

namespace {
const LocalBase Q = LocalBase::Q();
}

TEST_CASE("base serialization round trip") {
    for (const LocalBase& b :
         {LocalBase::Q(), LocalBase::Fp(5), LocalBase::Zp(3), LocalBase::Z()}) {
        Json j = base_to_json(b);
        CHECK(base_from_json(j) == b);
    }
    CHECK(base_to_json(LocalBase::Q())["kind"] == "Q");
    CHECK(base_to_json(LocalBase::Zp(3))["p"] == 3);
    Json bad = {{"kind", "X"}};
    CHECK_ERR(base_from_json(bad), ErrCode::BadInput);
}

TEST_CASE("laurent polynomial serialization") {
    LocalBase Z2 = LocalBase::Zp(2);
    LaurentPoly f = lp_make(Z2, {{-2, 3}, {0, 1}, {5, -7}});
    Json j = lp_to_json(f);
    CHECK(lp_from_json(j, Z2) == f);
    // Fractions survive.
    LaurentPoly g = lp_monomial(Q, BaseElem(22) / 7, -1);
    CHECK(lp_from_json(lp_to_json(g), Q) == g);
    CHECK(lp_to_json(g)["-1"] == "22/7");
    // Zero polynomial is the empty object.
    CHECK(lp_to_json(lp_zero(Q)).empty());
    CHECK(lp_from_json(Json::object(), Q).is_zero());
    // Garbage exponents and non-elements are rejected.
    Json bad_exp = {{"x", "1"}};
    CHECK_ERR(lp_from_json(bad_exp, Q), ErrCode::BadInput);
    Json bad_coeff = {{"0", "1/2"}};
    CHECK_ERR(lp_from_json(bad_coeff, Z2), ErrCode::BadInput);
}

TEST_CASE("series serialization keeps the precision window") {
    TruncSeries s(Q, 6);
    s.set(-1, BaseElem(1) / 3);
    s.set(2, BaseElem(4));
    Json j = series_to_json(s);
    TruncSeries back = series_from_json(j);
    CHECK(back.base == s.base);
    CHECK(back.precision == s.precision);
    CHECK(back.coeffs == s.coeffs);
}

TEST_CASE("matrix serialization round trip") {
    LaurentMat m(Q, 2, 2);
    m.at(0, 0) = lp_monomial(Q, BaseElem(1), 1);
    m.at(0, 1) = lp_const(Q, -1);
    m.at(1, 0) = lp_make(Q, {{0, 1}, {1, -1}});
    m.at(1, 1) = lp_const(Q, 1);
    Json j = mat_to_json(m);
    LaurentMat back = mat_from_json(j, Q);
    CHECK(back.rows == 2);
    CHECK(back.cols == 2);
    for (int i = 0; i < 2; ++i)
        for (int k = 0; k < 2; ++k) CHECK(back.at(i, k) == m.at(i, k));
}

TEST_CASE("bundle serialization keeps generation metadata") {
    auto [b, wit] = gen_example(2, LocalBase::Zp(3), 99, 4);
    Json j = bundle_to_json(b);
    RowBundle back = bundle_from_json(j);
    CHECK(back.base == b.base);
    CHECK(back.row == b.row);
    CHECK(back.complement == b.complement);
    CHECK(back.unit_witness == b.unit_witness);
    REQUIRE(back.gen.has_value());
    CHECK(back.gen->seed == 99);
    CHECK(back.gen->steps == 4);
    CHECK(j["gen"]["seed"] == "99");
    // Bundles without metadata stay without it.
    RowBundle plain = b;
    plain.gen.reset();
    CHECK(!bundle_from_json(bundle_to_json(plain)).gen.has_value());
}

TEST_CASE("reduction result serialization round trip") {
    auto [b, wit] = gen_example(2, Q, 7, 3);
    ReductionResult res = weierstrass_reduce(b, 32);
    verify_reduction(res);
    Json j = reduction_result_to_json(res);
    ReductionResult back = reduction_result_from_json(j);
    CHECK(back.k == res.k);
    CHECK(back.ell == res.ell);
    CHECK(back.precision == res.precision);
    CHECK(back.row == res.row);
    CHECK(back.certificate.cofactors == res.certificate.cofactors);
    CHECK(back.certificate.target_exponent == res.certificate.target_exponent);
    CHECK(back.witness.det_witness == res.witness.det_witness);
    REQUIRE(back.witness.provenance.size() == res.witness.provenance.size());
    // The round-tripped result still verifies.
    CHECK_NOTHROW(verify_reduction(back));
    // And serializes to identical bytes.
    CHECK(dump_canonical(reduction_result_to_json(back)) == dump_canonical(j));
}

TEST_CASE("multivariate polynomial serialization") {
    MvPoly p(Q, {"x", "y"});
    p.add_term({2, 0}, BaseElem(1) / 2);
    p.add_term({0, 1}, BaseElem(-3));
    Json j = mv_to_json(p);
    CHECK(mv_from_json(j, Q) == p);
    CHECK(j["vars"] == Json::array({"x", "y"}));
}

TEST_CASE("presentation serialization shape") {
    RingPresentation pres = build_presentation(2, 1, 2, Q);
    Json j = presentation_to_json(pres);
    CHECK(j["meta"]["r"] == 2);
    CHECK(j["meta"]["k"] == 1);
    CHECK(j["meta"]["n"] == 2);
    CHECK(j["vars"].size() == 18);
    CHECK(j["vars"][0]["grade"] == 1);
    CHECK(j["relations"].size() == 2);
    CHECK(j["inverted"].empty());
}

TEST_CASE("canonical dumps are stable and newline-terminated") {
    Json j = {{"b", 1}, {"a", 2}};
    std::string s = dump_canonical(j);
    CHECK(s.back() == '\n');
    // ordered_json preserves insertion order rather than sorting.
    CHECK(s.find("\"b\"") < s.find("\"a\""));
    CHECK(dump_canonical(j) == s);
}

TEST_CASE("file I/O failures are BadInput") {
    CHECK_ERR(load_json_file("/nonexistent/nope.json"), ErrCode::BadInput);
    std::string path = "umlab_test_malformed.json";
    {
        std::ofstream out(path);
        out << "{ not json";
    }
    CHECK_ERR(load_json_file(path), ErrCode::BadInput);
    std::remove(path.c_str());

    path = "umlab_test_roundtrip.json";
    Json j = {{"k", "v"}};
    write_json_file(path, j);
    CHECK(load_json_file(path) == j);
    std::remove(path.c_str());
}

TEST_CASE("malformed artifacts are rejected") {
    Json j = bundle_to_json(gen_example(2, Q, 1, 1).first);
    Json missing = j;
    missing.erase("row");
    CHECK_ERR(bundle_from_json(missing), ErrCode::BadInput);
    Json bad_coeff = j;
    bad_coeff["unit_witness"] = Json{{"0", "zzz"}};
    CHECK_ERR(bundle_from_json(bad_coeff), ErrCode::BadInput);
}
