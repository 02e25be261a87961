#pragma once
#include <map>
#include <optional>
#include <vector>
#include "umlab/base.hpp"

namespace umlab {

// Exact Laurent polynomial in one variable t over a LocalBase.
// Invariant: coeffs holds no zero values, every value is base-canonical.
struct LaurentPoly {
    LocalBase base;
    std::map<int, BaseElem> coeffs;

    LaurentPoly() = default;
    explicit LaurentPoly(LocalBase b) : base(b) {}

    bool is_zero() const { return coeffs.empty(); }
    std::optional<int> val() const {
        if (coeffs.empty()) return std::nullopt;
        return coeffs.begin()->first;
    }
    std::optional<int> deg() const {
        if (coeffs.empty()) return std::nullopt;
        return coeffs.rbegin()->first;
    }
    BaseElem coeff(int e) const {
        auto it = coeffs.find(e);
        return it == coeffs.end() ? BaseElem(0) : it->second;
    }
    void set(int e, const BaseElem& c) {
        BaseElem cc = base.canon(c);
        if (cc == 0)
            coeffs.erase(e);
        else
            coeffs[e] = cc;
    }

    bool operator==(const LaurentPoly& o) const {
        return base == o.base && coeffs == o.coeffs;
    }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }
};

LaurentPoly lp_zero(LocalBase b);
LaurentPoly lp_const(LocalBase b, const BaseElem& c);
LaurentPoly lp_monomial(LocalBase b, const BaseElem& c, int e);
// terms given as (exponent, coefficient) pairs; repeated exponents add up
LaurentPoly lp_make(LocalBase b, std::initializer_list<std::pair<int, long>> terms);

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator-(const LaurentPoly& a);

LaurentPoly lp_scale(const LaurentPoly& a, const BaseElem& c);
LaurentPoly lp_shift(const LaurentPoly& a, int k);       // multiply by t^k
LaurentPoly lp_truncate_le(const LaurentPoly& a, int k); // keep exponents <= k
LaurentPoly lp_subst_scale(const LaurentPoly& a, const BaseElem& c); // t -> c*t, c a unit

// Unit of R[t, t^-1]: a single term u*t^j with u a unit of the base.
// Sound because every admitted base is a domain.
bool lp_is_unit(const LaurentPoly& a);
// Unit of R((t)) for local R: lowest coefficient is a unit of the base.
bool lp_is_series_unit(const LaurentPoly& a);

// Exact division by t^k; BadInput if some exponent would go below the floor
// implied by divisibility (i.e. a is not divisible, which for t^k means any
// term at all survives -- t^k always divides in the Laurent ring, so this is
// just a shift; kept for readability at call sites).
LaurentPoly lp_div_tpow(const LaurentPoly& a, int k);

// Exact division by a monic polynomial g (val >= 0, leading coefficient 1).
// NotInvertible if the division leaves a remainder.
LaurentPoly lp_div_exact_monic(const LaurentPoly& a, const LaurentPoly& g);

// Remainder of f modulo monic g, f and g in R[t] (val >= 0). Ring operations
// only: the leading coefficient 1 never forces a fraction.
LaurentPoly lp_mod_monic(const LaurentPoly& f, const LaurentPoly& g);

std::string lp_to_string(const LaurentPoly& a);

} // namespace umlab
