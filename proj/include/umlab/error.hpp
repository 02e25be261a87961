#pragma once
#include <stdexcept>
#include <string>

namespace umlab {

// Failure taxonomy for the whole library. Every throw carries a code so the
// CLI can map outcomes to exit codes without parsing messages.
enum class ErrCode {
    NotLocalBase,
    NotInvertible,
    NotWeierstrass,
    NonUnitConstantTerm,
    PrecisionLoss,
    NotAUnit,
    NotUnimodular,
    DegenerateRow,
    NotInIdealForm,
    NotLocalizedAtS,
    NotNormalized,
    NonHomogeneous,
    TriangularityViolation,
    OracleTimeout,
    BadInput,
};

struct Error : std::runtime_error {
    ErrCode code;
    Error(ErrCode c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

[[noreturn]] inline void fail(ErrCode c, const std::string& msg) { throw Error(c, msg); }

const char* err_name(ErrCode c);

} // namespace umlab
