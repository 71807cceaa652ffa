#include "xorsat/formula.hpp"

#include <algorithm>

namespace xorsat {

std::optional<Clause> normalize_clause(std::vector<Lit> lits) {
    std::vector<Lit> out;
    for (Lit l : lits) {
        bool dup = false;
        for (Lit o : out) {
            if (o == l) {
                dup = true;
                break;
            }
            if (o == ~l) return std::nullopt;  // complementary pair: tautology
        }
        if (!dup) out.push_back(l);
    }
    return Clause(std::move(out));
}

std::optional<Clause> make_clause(std::vector<Lit> lits) { return normalize_clause(std::move(lits)); }

std::string to_string(const Clause& c) {
    std::string s = "(";
    for (size_t i = 0; i < c.size(); ++i) {
        if (i > 0) s += " ";
        s += to_string(c[i]);
    }
    return s + ")";
}

void CnfXorFormula::add_clause(std::vector<Lit> lits) {
    auto c = normalize_clause(std::move(lits));
    if (c) clauses.push_back(std::move(*c));
}

void CnfXorFormula::add_xor(std::vector<Var> vars, bool parity) {
    add_xor(XorConstraint::normalized(std::move(vars), parity));
}

void CnfXorFormula::add_xor(XorConstraint c) {
    if (c.is_tautology()) return;
    if (c.is_contradiction()) {
        had_contradiction = true;
        return;
    }
    xors.push_back(std::move(c));
}

std::vector<Var> CnfXorFormula::xor_vars() const {
    std::vector<Var> vars;
    for (const XorConstraint& c : xors) c.for_each_var([&](Var v) { vars.push_back(v); });
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return vars;
}

std::vector<bool> CnfXorFormula::clause_var_mask() const {
    std::vector<bool> mask(num_vars, false);
    for (const Clause& c : clauses)
        for (Lit l : c) mask[l.var()] = true;
    return mask;
}

bool CnfXorFormula::satisfied_by(const Assignment& a) const {
    if (had_contradiction) return false;
    for (const Clause& c : clauses) {
        bool sat = false;
        for (Lit l : c) {
            if (a.satisfies(l)) {
                sat = true;
                break;
            }
        }
        if (!sat) return false;
    }
    for (const XorConstraint& x : xors)
        if (x.evaluate(a) != Value::True) return false;
    return true;
}

}  // namespace xorsat
