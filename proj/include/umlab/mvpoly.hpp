#pragma once
#include <map>
#include <optional>
#include <string>
#include <vector>
#include "umlab/base.hpp"

namespace umlab {

using ExpVec = std::vector<int>;

// Sparse multivariate polynomial over an ordered variable list.
// Invariants: every exponent vector has vars.size() entries, no stored
// coefficient is zero, coefficients are base-canonical. The std::map keeps
// terms in a deterministic (lexicographic-on-exponents) order, which fixes
// the serialized form.
struct MvPoly {
    LocalBase base;
    std::vector<std::string> vars;
    std::map<ExpVec, BaseElem> terms;

    MvPoly() = default;
    MvPoly(LocalBase b, std::vector<std::string> v) : base(b), vars(std::move(v)) {}

    bool is_zero() const { return terms.empty(); }
    BaseElem coeff(const ExpVec& e) const {
        auto it = terms.find(e);
        return it == terms.end() ? BaseElem(0) : it->second;
    }
    void add_term(const ExpVec& e, const BaseElem& c) {
        if ((int)e.size() != (int)vars.size()) fail(ErrCode::BadInput, "add_term: arity");
        BaseElem cc = base.add(coeff(e), c);
        if (cc == 0)
            terms.erase(e);
        else
            terms[e] = cc;
    }

    int total_degree() const { // -1 for the zero polynomial
        int d = -1;
        for (auto& [e, c] : terms) {
            int s = 0;
            for (int x : e) s += x;
            if (s > d) d = s;
        }
        return d;
    }
    // homogeneous of one weighted degree under the given grades (default all 1)
    std::optional<int> homogeneous_degree(const std::vector<int>* grades = nullptr) const;

    bool operator==(const MvPoly& o) const {
        return base == o.base && vars == o.vars && terms == o.terms;
    }
    bool operator!=(const MvPoly& o) const { return !(*this == o); }
};

MvPoly mv_zero(LocalBase b, std::vector<std::string> vars);
MvPoly mv_const(LocalBase b, std::vector<std::string> vars, const BaseElem& c);
MvPoly mv_var(LocalBase b, std::vector<std::string> vars, const std::string& name);

MvPoly operator+(const MvPoly& a, const MvPoly& b);
MvPoly operator-(const MvPoly& a, const MvPoly& b);
MvPoly operator*(const MvPoly& a, const MvPoly& b);
MvPoly operator-(const MvPoly& a);
MvPoly mv_scale(const MvPoly& a, const BaseElem& c);

// Re-express over a superset variable list (same base). BadInput if some
// variable of a is missing from the target list.
MvPoly mv_extend(const MvPoly& a, const std::vector<std::string>& vars);
// Union of the two variable lists: vars of a, then vars of b not already
// present, in order. Binary operators align automatically through this.
std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b);

// Rename or kill variables: each source variable maps to a target variable
// name or to zero (empty string). Monomial-wise; the result lives on the
// target list.
MvPoly mv_rename(const MvPoly& a, const std::vector<std::string>& target,
                 const std::map<std::string, std::string>& assign);

// Coefficientwise residue map / lift (same shape as the series versions).
MvPoly mv_residue(const MvPoly& a);

std::string mv_to_string(const MvPoly& a);

} // namespace umlab
