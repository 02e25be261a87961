#pragma once
#include <map>
#include <optional>
#include "umlab/laurent.hpp"

namespace umlab {

// Truncated Laurent series: the element is known modulo t^precision.
// Invariants: every stored exponent is < precision, no stored coefficient is
// zero. The declared valuation is the least stored exponent; when the known
// window is all zero nothing is stored and the valuation is Unknown (only
// ">= precision" is known).
struct TruncSeries {
    LocalBase base;
    int precision = 0;
    std::map<int, BaseElem> coeffs;

    TruncSeries() = default;
    TruncSeries(LocalBase b, int P) : base(b), precision(P) {}

    std::optional<int> valuation() const {
        if (coeffs.empty()) return std::nullopt;
        return coeffs.begin()->first;
    }
    BaseElem coeff(int e) const {
        if (e >= precision)
            fail(ErrCode::PrecisionLoss, "coeff: exponent beyond known precision");
        auto it = coeffs.find(e);
        return it == coeffs.end() ? BaseElem(0) : it->second;
    }
    void set(int e, const BaseElem& c) {
        if (e >= precision) return; // beyond the window: unknown, drop
        BaseElem cc = base.canon(c);
        if (cc == 0)
            coeffs.erase(e);
        else
            coeffs[e] = cc;
    }

    bool operator==(const TruncSeries& o) const {
        return base == o.base && precision == o.precision && coeffs == o.coeffs;
    }
};

// Lossless embedding: requires P > deg(a) so no known coefficient is cut off.
TruncSeries series_from_laurent(const LaurentPoly& a, int P);

TruncSeries series_add(const TruncSeries& a, const TruncSeries& b);
TruncSeries series_sub(const TruncSeries& a, const TruncSeries& b);
// Result precision: min(P_a + val(b), P_b + val(a)), Unknown valuations
// treated as >= the operand's precision.
TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b);
TruncSeries series_neg(const TruncSeries& a);
TruncSeries series_scale(const TruncSeries& a, const BaseElem& c);
TruncSeries series_shift(const TruncSeries& a, int k); // multiply by t^k

// Inverse of t^v * u with u(0) a unit: result valuation -v, precision
// P - 2v. NotAUnit if the lowest known coefficient is not a unit,
// PrecisionLoss if the valuation is Unknown.
TruncSeries series_invert(const TruncSeries& a);

// Exact truncation: sum of all terms with exponent <= k, as a Laurent
// polynomial. PrecisionLoss unless k < precision.
LaurentPoly truncate_at(const TruncSeries& a, int k);

// Coefficientwise residue map into the residue field (same precision).
TruncSeries residue_reduce(const TruncSeries& a);
LaurentPoly residue_reduce(const LaurentPoly& a);
// Canonical section of the residue map, coefficientwise; residue o lift = id.
TruncSeries coefficient_lift(const TruncSeries& a, LocalBase target);
LaurentPoly coefficient_lift(const LaurentPoly& a, LocalBase target);

std::string series_to_string(const TruncSeries& a);

} // namespace umlab
