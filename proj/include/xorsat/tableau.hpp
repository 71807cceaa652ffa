#pragma once

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "xorsat/bitmatrix.hpp"
#include "xorsat/formula.hpp"

namespace xorsat {

// One tableau equation basic := rhs ⊕ parity.
struct Equation {
    Var basic;
    std::vector<Var> rhs;  // ascending, never contains basic
    bool parity;

    bool operator==(const Equation&) const = default;
};

// Clausal justification handed to the CDCL master: every negated literal in
// it is a prior xor-assumption or an earlier xor-implied literal, and the
// clause is a logical consequence of the xor-part.
struct Explanation {
    Clause clause;

    bool operator==(const Explanation&) const = default;
};

struct ImpliedLiteral {
    Lit lit;
    Explanation expl;
};

struct DeductionResult {
    enum class Status { Sat, Unsat };
    Status status = Status::Sat;
    std::vector<ImpliedLiteral> implied;
    std::optional<Explanation> conflict;

    bool ok() const { return status == Status::Sat; }
};

struct BuildConflict {
    size_t constraint_index;  // index of the input constraint that contradicted
};

// Reduced-row-echelon GF(2) equation system. Rows are stored as full
// constraint bitsets (basic bit included) so that substituting a basic
// variable out of another row is a single row XOR; a column-major copy of the
// matrix answers "which rows contain this variable" for pivoting.
class Tableau {
public:
    static std::variant<Tableau, BuildConflict> build(std::span<const XorConstraint> xors);

    size_t num_rows() const { return used_rows_; }
    size_t num_cols() const { return var_of_col_.size(); }
    bool has_var(Var v) const { return col_of(v) != SIZE_MAX; }
    bool is_basic(Var v) const;

    // Pivot: makes y basic in x's row and substitutes y out of every other
    // right hand side. In-place; returns the indices of the rewritten rows.
    std::vector<uint32_t> swap_basis(Var x, Var y);

    std::vector<Equation> equations() const;
    Equation equation(size_t row) const;
    XorConstraint row_constraint(size_t row) const;

    // The row-major and column-major matrices agree cell for cell.
    bool matrices_coherent() const;

private:
    friend class AssignedTableau;

    size_t col_of(Var v) const;

    std::vector<Var> var_of_col_;          // ascending; col order == var order
    BitMatrix rows_;                       // used_rows x cols, basic bit included
    BitMatrix cols_;                       // cols x row-capacity
    std::vector<uint8_t> row_parity_;
    std::vector<uint32_t> row_basic_col_;  // per row
    std::vector<int32_t> basic_row_of_col_;  // -1 when non-basic
    size_t used_rows_ = 0;
};

// Tableau plus partial assignment, trail, and per-row unassigned counters.
// Assumptions and implied literals are collected in τ; backtracking restores
// only τ and the counters, the matrix itself is never rewound.
class AssignedTableau {
public:
    explicit AssignedTableau(Tableau t);

    // Literals implied with no assumptions (constant rows), reported once.
    const DeductionResult& init_result() const { return init_result_; }

    DeductionResult assume(Lit l);

    size_t mark() const { return trail_.size(); }
    void backtrack_to(size_t mark);

    // Snapshot explanation recorded when lit was deduced; lit must be an
    // implied literal still on the trail.
    Explanation explain(Lit l) const;

    // All width-2 xor-constraints entailed by the xor-part plus τ, per the
    // four-case enumeration over restricted rows. Canonically sorted.
    std::vector<XorConstraint> implied_binary_xors() const;

    Value value_of(Var v) const;
    std::vector<Lit> assigned_literals() const;
    size_t num_assigned() const { return trail_.size(); }
    const Tableau& tableau() const { return t_; }

    // Audits used by tests: recompute counters from scratch / check that
    // every equation has its basic assigned iff its right hand side is.
    bool counters_consistent() const;
    bool propagation_saturated() const;
    bool consistent() const;  // no fully-assigned row violated under τ

private:
    struct TrailEntry {
        Lit lit;
        Clause reason;  // empty and is_assumption set for assumptions
        bool is_assumption;
    };

    void assign(size_t col, bool value, Clause reason, bool is_assumption,
                std::vector<uint32_t>& unit_rows);
    void propagate(std::vector<uint32_t>& unit_rows, DeductionResult& out);
    void recount_row(uint32_t row);
    Clause reason_clause_for_row(uint32_t row, Lit consequent) const;
    Lit lit_of_col(size_t col) const;

    Tableau t_;
    std::vector<Value> val_;              // per column
    std::vector<uint64_t> assigned_cols_;  // bitset over columns
    std::vector<uint64_t> true_cols_;      // bitset over columns
    std::vector<uint32_t> counter_;        // per row: unassigned among {basic} ∪ rhs
    std::vector<TrailEntry> trail_;
    std::vector<int32_t> trail_pos_of_col_;
    DeductionResult init_result_;
};

// Free-function views matching the module interface names.
std::variant<Tableau, BuildConflict> build_tableau(std::span<const XorConstraint> xors);

}  // namespace xorsat
