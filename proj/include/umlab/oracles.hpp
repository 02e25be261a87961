#pragma once
#include "umlab/groebner.hpp"
#include "umlab/presentation.hpp"

namespace umlab {

// A map from source variables to target variables or zero; induces a ring
// homomorphism that sends homogeneous polynomials to homogeneous
// polynomials of the same degree (or to zero).
struct VariableReduction {
    std::vector<std::string> target;
    std::map<std::string, std::string> assign; // missing source vars map to zero
};

MvPoly apply_variable_reduction(const VariableReduction& phi, const MvPoly& f);

// The reduction used to route the irreducibility criterion for the degree-l
// convolution relation: four target variables when l = 0, eight otherwise.
VariableReduction routing_reduction(const RingPresentation& pres, int ell);

// Rank of the symmetric Gram matrix of a homogeneous quadric over the
// rationals; rank >= 3 certifies irreducibility over any field of
// characteristic != 2.
int quadric_rank(const MvPoly& q);

// Outcome of the three-case irreducibility criterion: case_id 1..3 on
// success; 0 with a reason when no case matches (distinct from a thrown
// NonHomogeneous, which signals a precondition violation).
struct PrecheckResult {
    int case_id = 0;
    int witness_index = -1; // case 3: position of f_j with image cl*dl+el*fl
    std::string reason;
    bool ok() const { return case_id != 0; }
};

// Checks (a) some monomial of g has a unit coefficient and is absent from
// every f_i, and (b) the reduced images match exactly one case pattern.
PrecheckResult irreducibility_precheck(const MvPoly& g, const std::vector<MvPoly>& fs,
                                       const VariableReduction& phi);

// g = p_ell and the relations of the ambient cell (ell+1, i), reduced by
// killing x_0_0..x_0_i, fed through the routing reduction.
PrecheckResult routing_precheck(const RingPresentation& pres, int ell, int i);

// Regular-sequence verification for the convolution relations.
struct RegSeqReport {
    bool pass = false;
    std::string method;
    std::string detail;
    std::vector<long long> hf;       // hilbert method: computed values
    std::vector<long long> expected; // hilbert method: series coefficients
    size_t pairs_processed = 0;
};

// Hilbert method: the quotient's Hilbert function must match the
// complete-intersection series (1-T^2)^c / (1-T)^N through degree D.
RegSeqReport regseq_hilbert(int r, int k, int n, LocalBase base, int D,
                            size_t pair_budget = kDefaultPairBudget);

// Quotient method: for each stage of the sequence (descending index,
// skipping k), the ideal quotient (J : next) must equal J.
RegSeqReport regseq_quotient(int r, int k, int n, LocalBase base,
                             size_t pair_budget = kDefaultPairBudget);

// Quotient method over an explicit sequence (exposed for negative tests).
RegSeqReport regseq_quotient_list(const std::vector<MvPoly>& seq, const GBContext& ctx,
                                  size_t pair_budget = kDefaultPairBudget);

// Fraction r_m = num / a^exp over the ambient polynomial ring.
struct AFraction {
    MvPoly num;
    int exp = 0;
};

// Witness for the localization isomorphism: the solved fractions r_m and,
// for each m, the power M with a^M * (a^exp_m * t_m - num_m) in the
// relation ideal (certified by normal form).
struct LocalizationWitness {
    LocalizationData data;
    std::vector<AFraction> fractions;
    std::vector<int> clearing_exponents;
    bool pass = false;
    std::string detail;
};

LocalizationWitness localization_iso_verify(const RingPresentation& pres,
                                            const LocalizationData& data,
                                            size_t pair_budget = kDefaultPairBudget);

} // namespace umlab
