#pragma once
#include <gmpxx.h>
#include <string>
#include "umlab/error.hpp"

namespace umlab {

// Exact rational payload. Which values are admissible, and which are units,
// is decided by the LocalBase carried alongside by every container type.
// mpq_class keeps fractions reduced with positive denominator, so Q and
// Z_(p) elements are canonical by construction; F_p elements are kept as
// integers in [0, p-1] by LocalBase::canon.
using BaseElem = mpq_class;

enum class BaseKind { RationalField, PrimeField, IntegersLocalizedAt, Integers };

struct LocalBase {
    BaseKind kind = BaseKind::RationalField;
    unsigned long p = 0; // prime, for PrimeField / IntegersLocalizedAt

    static LocalBase Q() { return {BaseKind::RationalField, 0}; }
    static LocalBase Fp(unsigned long p_) { return {BaseKind::PrimeField, p_}; }
    static LocalBase Zp(unsigned long p_) { return {BaseKind::IntegersLocalizedAt, p_}; }
    static LocalBase Z() { return {BaseKind::Integers, 0}; }

    bool operator==(const LocalBase& o) const { return kind == o.kind && p == o.p; }
    bool operator!=(const LocalBase& o) const { return !(*this == o); }

    // Z is the one non-local base; everything with a maximal-ideal contract
    // rejects it up front.
    bool is_local() const { return kind != BaseKind::Integers; }
    bool is_field() const {
        return kind == BaseKind::RationalField || kind == BaseKind::PrimeField;
    }

    void require_local(const char* who) const;

    LocalBase residue_field() const; // Q -> Q, F_p -> F_p, Z_(p) -> F_p

    // Membership and canonical form. canon() rejects values outside the ring
    // (denominator divisible by p in Z_(p), non-integers in Z) and reduces
    // F_p values into [0, p-1].
    bool is_element(const BaseElem& v) const;
    BaseElem canon(const BaseElem& v) const;

    bool is_unit(const BaseElem& v) const;
    bool in_max_ideal(const BaseElem& v) const; // = !is_unit, for local bases

    BaseElem add(const BaseElem& a, const BaseElem& b) const;
    BaseElem sub(const BaseElem& a, const BaseElem& b) const;
    BaseElem mul(const BaseElem& a, const BaseElem& b) const;
    BaseElem neg(const BaseElem& a) const;
    BaseElem inv(const BaseElem& a) const;  // NotAUnit if a is not a unit
    BaseElem div(const BaseElem& a, const BaseElem& b) const;

    // Coefficientwise residue map into residue_field(), and its canonical
    // section back (F_p lifts to the integer representative in [0, p-1]).
    BaseElem residue(const BaseElem& v) const;
    BaseElem lift(const BaseElem& v) const;

    BaseElem from_long(long n) const { return canon(BaseElem(n)); }
    // Accepts "n" or "n/d" in decimal.
    BaseElem parse(const std::string& s) const;
    std::string to_string(const BaseElem& v) const;

    std::string describe() const; // "Q", "F5", "Z(3)", "Z"
};

// CLI/JSON spelling: "Q" | "Z" | "F<p>" | "Z(<p>)".
LocalBase parse_base(const std::string& s);

} // namespace umlab
