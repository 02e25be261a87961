#pragma once
#include <cstdint>
#include <optional>
#include "umlab/matrix.hpp"
#include "umlab/series.hpp"

namespace umlab {

// Unimodular row with its certificate: row and complement are exact Laurent
// polynomial vectors with sum(row[i] * complement[i]) == unit_witness, and
// unit_witness is u * t^j with u a unit of the base.
struct GenInfo {
    uint64_t seed = 0;
    int steps = 0;
};

struct RowBundle {
    LocalBase base;
    std::vector<LaurentPoly> row;
    std::vector<LaurentPoly> complement;
    LaurentPoly unit_witness;
    std::optional<GenInfo> gen;

    int r() const { return (int)row.size() - 1; }
};

// One factor of a GL transformation, kept so certificates can be replayed:
// Elementary = I + coeff * E_(j,i) (row j feeds column i), Shift = t^n * I,
// Correction = an explicitly stored matrix (the I + complement*diag(t*d)
// step of the reduction).
struct GLFactor {
    enum Type { Elementary, Shift, Correction };
    Type type = Elementary;
    int j = 0, i = 0;
    LaurentPoly coeff;               // Elementary
    int shift_n = 0;                 // Shift
    LaurentMat corr;                 // Correction: equals I + corr_u * corr_w^T,
    std::vector<LaurentPoly> corr_u; // so its determinant is 1 + corr_w . corr_u;
    std::vector<LaurentPoly> corr_w; // both facts are replayed by verification
};

struct GLWitness {
    LaurentMat matrix;       // product of the provenance factors, exact
    LaurentPoly det_witness; // det(matrix); recognized unit of R((t))
    std::vector<GLFactor> provenance;
};

// Cofactors c with sum(p[i] * c[i]) == t^target_exponent exactly.
struct BezoutCertificate {
    std::vector<LaurentPoly> cofactors;
    int target_exponent = 0;
};

struct ReductionResult {
    RowBundle input;
    int precision = 0;
    int k = 0;   // sum(x''[i] y''[i]) = t^k after normalization and shift
    int ell = 0; // certificate target exponent (= k)
    std::vector<LaurentPoly> row; // p: p[0] Weierstrass of degree k+1, deg p[i] <= k
    BezoutCertificate certificate;
    GLWitness witness; // input row times witness.matrix == row, exactly
};

// Checks the stored witness identity and unit recognition; throws
// NotUnimodular on any mismatch.
void verify_bundle(const RowBundle& b);

// Seeded generator: applies `steps` random elementary factors (Laurent
// coefficients with exponents in [-2, 2], small entries) to (1, 0, .., 0),
// tracking the complement through the inverse factors. The witness stays
// exactly 1; the returned GLWitness proves completability.
std::pair<RowBundle, GLWitness> gen_example(int r, LocalBase base, uint64_t seed, int steps);

// Applies one elementary factor to a bundle (row times factor, complement
// through the inverse); unimodularity is preserved exactly.
void apply_elementary(RowBundle& b, int j, int i, const LaurentPoly& c);

// Left-multiplies the complement rescale and row shift used by the pipeline.
// Exposed for tests.
struct NormalizedRow {
    std::vector<LaurentPoly> row, complement; // in R[t], sum row*compl = t^k
    int k = 0;
    int shift_n = 0;
};

// Carries the residue row to the pattern (0, 1, 0, .., 0) modulo t^P by
// elementary factors over the residue field, lifted coefficientwise to exact
// Laurent polynomials. Requires r >= 2. DegenerateRow when every residue
// entry is 0 mod t^P.
struct ResidueNormalizeResult {
    RowBundle bundle; // transformed row + complement, witness unchanged
    GLWitness witness;
};
ResidueNormalizeResult residue_normalize(const RowBundle& b, int P);

// Full reduction pipeline at precision P (default 64): residue normalize,
// shift into R[[t]], one structured correction factor, then the exact
// Bezout certificate. Errors: NotUnimodular, PrecisionLoss (P < k + 2),
// DegenerateRow.
ReductionResult weierstrass_reduce(const RowBundle& b, int P = 64);

// Re-checks every certificate carried by a result; throws on failure.
void verify_reduction(const ReductionResult& res);

// Length-2 completion: for (a, b) with complement (u, v), au + bv == 1, the
// matrix with columns (a, b) and (-v, u) has determinant exactly 1. A
// witness of u0 * t^j != 1 is folded into the complement first.
LaurentMat complete_length2(const RowBundle& b);

} // namespace umlab
