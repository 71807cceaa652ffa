#pragma once

#include <vector>

#include "xorsat/types.hpp"
#include "xorsat/xor_constraint.hpp"

namespace xorsat {

// A conjunction of CNF clauses and xor-constraints over num_vars variables.
// Tautological clauses and xor-constraints are dropped when added; an xor
// that normalizes to (∅ ≡ ⊤) sets had_contradiction instead of being stored,
// short-circuiting the whole formula to UNSAT.
struct CnfXorFormula {
    uint32_t num_vars = 0;
    std::vector<Clause> clauses;
    std::vector<XorConstraint> xors;
    bool had_contradiction = false;

    CnfXorFormula() = default;
    explicit CnfXorFormula(uint32_t nv) : num_vars(nv) {}

    void add_clause(std::vector<Lit> lits);
    void add_xor(std::vector<Var> vars, bool parity);
    void add_xor(XorConstraint c);

    // All variables occurring in some xor-constraint, ascending.
    std::vector<Var> xor_vars() const;
    // Variables occurring in some clause.
    std::vector<bool> clause_var_mask() const;

    bool satisfied_by(const Assignment& a) const;
};

std::optional<Clause> normalize_clause(std::vector<Lit> lits);

}  // namespace xorsat
