#include "umlab/base.hpp"

namespace umlab {

const char* err_name(ErrCode c) {
    switch (c) {
        case ErrCode::NotLocalBase: return "NotLocalBase";
        case ErrCode::NotInvertible: return "NotInvertible";
        case ErrCode::NotWeierstrass: return "NotWeierstrass";
        case ErrCode::NonUnitConstantTerm: return "NonUnitConstantTerm";
        case ErrCode::PrecisionLoss: return "PrecisionLoss";
        case ErrCode::NotAUnit: return "NotAUnit";
        case ErrCode::NotUnimodular: return "NotUnimodular";
        case ErrCode::DegenerateRow: return "DegenerateRow";
        case ErrCode::NotInIdealForm: return "NotInIdealForm";
        case ErrCode::NotLocalizedAtS: return "NotLocalizedAtS";
        case ErrCode::NotNormalized: return "NotNormalized";
        case ErrCode::NonHomogeneous: return "NonHomogeneous";
        case ErrCode::TriangularityViolation: return "TriangularityViolation";
        case ErrCode::OracleTimeout: return "OracleTimeout";
        case ErrCode::BadInput: return "BadInput";
    }
    return "Unknown";
}

void LocalBase::require_local(const char* who) const {
    if (!is_local())
        fail(ErrCode::NotLocalBase, std::string(who) + ": base Z is not local");
}

LocalBase LocalBase::residue_field() const {
    switch (kind) {
        case BaseKind::RationalField: return Q();      // m = (0)
        case BaseKind::PrimeField: return Fp(p);       // m = (0)
        case BaseKind::IntegersLocalizedAt: return Fp(p);
        case BaseKind::Integers: break;
    }
    fail(ErrCode::NotLocalBase, "residue_field: base Z is not local");
}

bool LocalBase::is_element(const BaseElem& v) const {
    switch (kind) {
        case BaseKind::RationalField: return true;
        case BaseKind::PrimeField: return v.get_den() == 1 && v >= 0 && v < (long)p;
        case BaseKind::IntegersLocalizedAt: {
            mpz_class den = v.get_den();
            return mpz_divisible_ui_p(den.get_mpz_t(), p) == 0;
        }
        case BaseKind::Integers: return v.get_den() == 1;
    }
    return false;
}

BaseElem LocalBase::canon(const BaseElem& v) const {
    switch (kind) {
        case BaseKind::RationalField: return v;
        case BaseKind::PrimeField: {
            if (v.get_den() != 1) {
                // fold the denominator in via its inverse mod p
                mpz_class den = v.get_den();
                mpz_class dinv;
                mpz_class pz(p);
                if (!mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t()))
                    fail(ErrCode::BadInput, "canon: denominator not invertible mod p");
                mpz_class num = v.get_num() * dinv;
                mpz_class r;
                mpz_mod(r.get_mpz_t(), num.get_mpz_t(), pz.get_mpz_t());
                return BaseElem(r);
            }
            mpz_class r, pz(p);
            mpz_class num = v.get_num();
            mpz_mod(r.get_mpz_t(), num.get_mpz_t(), pz.get_mpz_t());
            return BaseElem(r);
        }
        case BaseKind::IntegersLocalizedAt: {
            if (!is_element(v))
                fail(ErrCode::BadInput,
                     "canon: denominator divisible by " + std::to_string(p) +
                         " is not in Z_(" + std::to_string(p) + ")");
            return v;
        }
        case BaseKind::Integers:
            if (v.get_den() != 1) fail(ErrCode::BadInput, "canon: not an integer");
            return v;
    }
    return v;
}

bool LocalBase::is_unit(const BaseElem& v) const {
    switch (kind) {
        case BaseKind::RationalField: return v != 0;
        case BaseKind::PrimeField: return canon(v) != 0;
        case BaseKind::IntegersLocalizedAt: {
            if (v == 0) return false;
            mpz_class num = v.get_num();
            return mpz_divisible_ui_p(num.get_mpz_t(), p) == 0;
        }
        case BaseKind::Integers: return v == 1 || v == -1;
    }
    return false;
}

bool LocalBase::in_max_ideal(const BaseElem& v) const {
    require_local("in_max_ideal");
    return !is_unit(v);
}

BaseElem LocalBase::add(const BaseElem& a, const BaseElem& b) const {
    return kind == BaseKind::PrimeField ? canon(a + b) : BaseElem(a + b);
}
BaseElem LocalBase::sub(const BaseElem& a, const BaseElem& b) const {
    return kind == BaseKind::PrimeField ? canon(a - b) : BaseElem(a - b);
}
BaseElem LocalBase::mul(const BaseElem& a, const BaseElem& b) const {
    return kind == BaseKind::PrimeField ? canon(a * b) : BaseElem(a * b);
}
BaseElem LocalBase::neg(const BaseElem& a) const {
    return kind == BaseKind::PrimeField ? canon(-a) : BaseElem(-a);
}

BaseElem LocalBase::inv(const BaseElem& a) const {
    if (!is_unit(a)) fail(ErrCode::NotAUnit, "inv: " + to_string(a) + " is not a unit");
    if (kind == BaseKind::PrimeField) {
        mpz_class ai, pz(p);
        mpz_class num = canon(a).get_num();
        mpz_invert(ai.get_mpz_t(), num.get_mpz_t(), pz.get_mpz_t());
        return canon(BaseElem(ai));
    }
    return BaseElem(1 / a);
}

BaseElem LocalBase::div(const BaseElem& a, const BaseElem& b) const { return mul(a, inv(b)); }

BaseElem LocalBase::residue(const BaseElem& v) const {
    require_local("residue");
    switch (kind) {
        case BaseKind::RationalField: return v;
        case BaseKind::PrimeField: return canon(v);
        case BaseKind::IntegersLocalizedAt: return residue_field().canon(v);
        default: return v;
    }
}

BaseElem LocalBase::lift(const BaseElem& v) const {
    require_local("lift");
    // the section F_p -> {0..p-1} is residue_field().canon followed by an
    // identity inclusion, so canonicalizing in the residue field is enough
    return residue_field().canon(v);
}

BaseElem LocalBase::parse(const std::string& s) const {
    if (s.empty()) fail(ErrCode::BadInput, "parse: empty coefficient");
    try {
        BaseElem v(s);
        v.canonicalize();
        return canon(v);
    } catch (const std::invalid_argument&) {
        fail(ErrCode::BadInput, "parse: bad coefficient '" + s + "'");
    }
}

std::string LocalBase::to_string(const BaseElem& v) const {
    return v.get_str(); // "n" or "n/d", GMP canonical
}

std::string LocalBase::describe() const {
    switch (kind) {
        case BaseKind::RationalField: return "Q";
        case BaseKind::PrimeField: return "F" + std::to_string(p);
        case BaseKind::IntegersLocalizedAt: return "Z(" + std::to_string(p) + ")";
        case BaseKind::Integers: return "Z";
    }
    return "?";
}

static bool parse_prime(const std::string& s, unsigned long& out) {
    if (s.empty()) return false;
    for (char c : s)
        if (!isdigit((unsigned char)c)) return false;
    unsigned long v = std::stoul(s);
    if (v < 2) return false;
    // primality by trial division; bases are small named primes
    for (unsigned long d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    out = v;
    return true;
}

LocalBase parse_base(const std::string& s) {
    unsigned long p = 0;
    if (s == "Q") return LocalBase::Q();
    if (s == "Z") return LocalBase::Z();
    if (s.size() >= 2 && s[0] == 'F' && parse_prime(s.substr(1), p)) return LocalBase::Fp(p);
    if (s.size() >= 4 && s.rfind("Z(", 0) == 0 && s.back() == ')' &&
        parse_prime(s.substr(2, s.size() - 3), p))
        return LocalBase::Zp(p);
    fail(ErrCode::BadInput, "parse_base: expected Q, Z, F<p> or Z(<p>), got '" + s + "'");
}

} // namespace umlab
