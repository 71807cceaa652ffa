#include "xorsat/tableau.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace xorsat {

size_t Tableau::col_of(Var v) const {
    auto it = std::lower_bound(var_of_col_.begin(), var_of_col_.end(), v);
    if (it == var_of_col_.end() || *it != v) return SIZE_MAX;
    return static_cast<size_t>(it - var_of_col_.begin());
}

bool Tableau::is_basic(Var v) const {
    size_t c = col_of(v);
    return c != SIZE_MAX && basic_row_of_col_[c] >= 0;
}

std::variant<Tableau, BuildConflict> Tableau::build(std::span<const XorConstraint> xors) {
    Tableau t;
    for (const XorConstraint& x : xors) x.for_each_var([&](Var v) { t.var_of_col_.push_back(v); });
    std::sort(t.var_of_col_.begin(), t.var_of_col_.end());
    t.var_of_col_.erase(std::unique(t.var_of_col_.begin(), t.var_of_col_.end()),
                        t.var_of_col_.end());

    size_t m = xors.size(), n = t.var_of_col_.size();
    t.rows_ = BitMatrix(m, n);
    t.cols_ = BitMatrix(n, m);
    t.row_parity_.assign(m, 0);
    t.row_basic_col_.assign(m, 0);
    t.basic_row_of_col_.assign(n, -1);

    std::vector<uint64_t> tmp(bits::words_for(n), 0);
    std::vector<uint32_t> touched;
    for (size_t i = 0; i < m; ++i) {
        std::fill(tmp.begin(), tmp.end(), 0);
        bool parity = xors[i].parity();
        xors[i].for_each_var([&](Var v) { bits::set(tmp, t.col_of(v)); });
        // Eliminate every basic variable by substituting its definition. One
        // pass suffices: right hand sides hold only non-basic variables, so a
        // substitution never reintroduces an earlier basic.
        for (size_t r = 0; r < t.used_rows_; ++r) {
            if (bits::get(tmp, t.row_basic_col_[r])) {
                bits::xor_into(tmp, t.rows_.row(r));
                parity ^= t.row_parity_[r] != 0;
            }
        }
        size_t pivot = bits::first_set(tmp);
        if (pivot == SIZE_MAX) {
            if (parity) return BuildConflict{i};  // (⊥ ≡ ⊤): contradicts the tableau
            continue;  // (⊥ ≡ ⊥): linear combination of rows already present
        }
        size_t r = t.used_rows_++;
        std::copy(tmp.begin(), tmp.end(), t.rows_.row(r).begin());
        t.row_parity_[r] = parity;
        t.row_basic_col_[r] = static_cast<uint32_t>(pivot);
        t.basic_row_of_col_[pivot] = static_cast<int32_t>(r);
        bits::for_each_set(tmp, [&](size_t c) { t.cols_.set(c, r); });
        // Back-substitute the fresh basic variable out of the other rows.
        touched.clear();
        bits::for_each_set(t.cols_.row(pivot), [&](size_t j) {
            if (j != r) touched.push_back(static_cast<uint32_t>(j));
        });
        for (uint32_t j : touched) {
            t.rows_.xor_row(j, r);
            t.row_parity_[j] ^= t.row_parity_[r];
            bits::for_each_set(t.rows_.row(r), [&](size_t c) { t.cols_.flip(c, j); });
        }
    }
    return t;
}

std::vector<uint32_t> Tableau::swap_basis(Var x, Var y) {
    size_t xc = col_of(x), yc = col_of(y);
    assert(xc != SIZE_MAX && yc != SIZE_MAX);
    assert(basic_row_of_col_[xc] >= 0);
    assert(basic_row_of_col_[yc] < 0);
    uint32_t r = static_cast<uint32_t>(basic_row_of_col_[xc]);
    assert(rows_.get(r, yc));

    // The row's bit content is the constraint itself and does not change;
    // only the designated basic variable moves.
    basic_row_of_col_[xc] = -1;
    basic_row_of_col_[yc] = static_cast<int32_t>(r);
    row_basic_col_[r] = static_cast<uint32_t>(yc);

    std::vector<uint32_t> touched;
    bits::for_each_set(cols_.row(yc), [&](size_t j) {
        if (j != r) touched.push_back(static_cast<uint32_t>(j));
    });
    for (uint32_t j : touched) {
        rows_.xor_row(j, r);
        row_parity_[j] ^= row_parity_[r];
        bits::for_each_set(rows_.row(r), [&](size_t c) { cols_.flip(c, j); });
    }
    return touched;
}

Equation Tableau::equation(size_t row) const {
    assert(row < used_rows_);
    Equation e;
    e.basic = var_of_col_[row_basic_col_[row]];
    e.parity = row_parity_[row] != 0;
    bits::for_each_set(rows_.row(row), [&](size_t c) {
        if (c != row_basic_col_[row]) e.rhs.push_back(var_of_col_[c]);
    });
    return e;
}

std::vector<Equation> Tableau::equations() const {
    std::vector<Equation> out;
    out.reserve(used_rows_);
    for (size_t r = 0; r < used_rows_; ++r) out.push_back(equation(r));
    return out;
}

XorConstraint Tableau::row_constraint(size_t row) const {
    assert(row < used_rows_);
    std::vector<Var> vars;
    bits::for_each_set(rows_.row(row), [&](size_t c) { vars.push_back(var_of_col_[c]); });
    return XorConstraint::from_sorted_unique(std::move(vars), row_parity_[row] != 0);
}

bool Tableau::matrices_coherent() const {
    for (size_t r = 0; r < used_rows_; ++r)
        for (size_t c = 0; c < var_of_col_.size(); ++c)
            if (rows_.get(r, c) != cols_.get(c, r)) return false;
    return true;
}

std::variant<Tableau, BuildConflict> build_tableau(std::span<const XorConstraint> xors) {
    return Tableau::build(xors);
}

// ---------------------------------------------------------------------------

AssignedTableau::AssignedTableau(Tableau t) : t_(std::move(t)) {
    size_t n = t_.num_cols(), m = t_.num_rows();
    val_.assign(n, Value::Undef);
    assigned_cols_.assign(bits::words_for(n), 0);
    true_cols_.assign(bits::words_for(n), 0);
    counter_.resize(m);
    trail_pos_of_col_.assign(n, -1);
    std::vector<uint32_t> units;
    for (size_t r = 0; r < m; ++r) {
        counter_[r] = static_cast<uint32_t>(bits::popcount(t_.rows_.row(r)));
        if (counter_[r] == 1) units.push_back(static_cast<uint32_t>(r));
    }
    propagate(units, init_result_);
}

Lit AssignedTableau::lit_of_col(size_t col) const {
    assert(val_[col] != Value::Undef);
    return Lit(t_.var_of_col_[col], val_[col] == Value::True);
}

Clause AssignedTableau::reason_clause_for_row(uint32_t row, Lit consequent) const {
    Clause c;
    c.lits.push_back(consequent);
    size_t bcol = t_.row_basic_col_[row];
    bits::for_each_set(t_.rows_.row(row), [&](size_t u) {
        if (u != bcol) c.lits.push_back(~lit_of_col(u));
    });
    return c;
}

void AssignedTableau::assign(size_t col, bool value, Clause reason, bool is_assumption,
                             std::vector<uint32_t>& unit_rows) {
    assert(val_[col] == Value::Undef);
    val_[col] = to_value(value);
    bits::set(assigned_cols_, col);
    if (value) bits::set(true_cols_, col);
    trail_pos_of_col_[col] = static_cast<int32_t>(trail_.size());
    trail_.push_back({Lit(t_.var_of_col_[col], value), std::move(reason), is_assumption});
    bits::for_each_set(t_.cols_.row(col), [&](size_t j) {
        assert(counter_[j] > 0);
        if (--counter_[j] == 1) unit_rows.push_back(static_cast<uint32_t>(j));
    });
}

void AssignedTableau::propagate(std::vector<uint32_t>& unit_rows, DeductionResult& out) {
    for (size_t qi = 0; qi < unit_rows.size(); ++qi) {
        uint32_t r = unit_rows[qi];
        assert(counter_[r] == 1);
        size_t bcol = t_.row_basic_col_[r];
        // The single unassigned variable of a unit row is always its basic
        // one: assumptions land on non-basic variables (after the swap), and a
        // row's basic is only ever assigned once the right hand side is full.
        assert(val_[bcol] == Value::Undef);
        bool v = (t_.row_parity_[r] != 0) ^
                 ((bits::popcount_and(t_.rows_.row(r), true_cols_) & 1) != 0);
        Lit lit(t_.var_of_col_[bcol], v);
        Clause reason = reason_clause_for_row(r, lit);
        out.implied.push_back({lit, Explanation{reason}});
        assign(bcol, v, std::move(reason), false, unit_rows);
    }
    unit_rows.clear();
}

DeductionResult AssignedTableau::assume(Lit l) {
    size_t col = t_.col_of(l.var());
    assert(col != SIZE_MAX);
    bool v = l.positive();

    // Step 1/2: already assigned.
    if (val_[col] != Value::Undef) {
        if (val_[col] == to_value(v)) return {};
        DeductionResult res;
        res.status = DeductionResult::Status::Unsat;
        const TrailEntry& prior = trail_[trail_pos_of_col_[col]];
        if (prior.is_assumption) {
            // The contradicted value was an external assumption, not a
            // deduction; the binary clause over the two assumptions suffices.
            res.conflict = Explanation{Clause({~prior.lit, ~l})};
        } else {
            // prior.reason's consequent (x ≡ τ(x)) is exactly ¬(x ≡ v).
            res.conflict = Explanation{prior.reason};
        }
        return res;
    }

    // Step 3: a basic variable is swapped out against an unassigned right
    // hand side partner before it may receive a value.
    if (t_.basic_row_of_col_[col] >= 0) {
        uint32_t r = static_cast<uint32_t>(t_.basic_row_of_col_[col]);
        auto rowbits = t_.rows_.row(r);
        size_t partner = SIZE_MAX;
        for (size_t w = 0; w < rowbits.size() && partner == SIZE_MAX; ++w) {
            uint64_t x = rowbits[w] & ~assigned_cols_[w];
            if (w == col / 64) x &= ~(uint64_t{1} << (col % 64));
            if (x != 0) partner = w * 64 + static_cast<unsigned>(std::countr_zero(x));
        }
        assert(partner != SIZE_MAX);  // saturation: an unassigned basic has unassigned rhs vars
        auto touched = t_.swap_basis(l.var(), t_.var_of_col_[partner]);
        for (uint32_t j : touched) {
            recount_row(j);
            assert(counter_[j] >= 2);
        }
    }

    // Steps 4-6.
    DeductionResult res;
    std::vector<uint32_t> units;
    assign(col, v, Clause{}, true, units);
    propagate(units, res);
    return res;
}

void AssignedTableau::backtrack_to(size_t mark) {
    assert(mark <= trail_.size());
    while (trail_.size() > mark) {
        TrailEntry e = std::move(trail_.back());
        trail_.pop_back();
        size_t col = t_.col_of(e.lit.var());
        val_[col] = Value::Undef;
        bits::clear(assigned_cols_, col);
        bits::clear(true_cols_, col);
        trail_pos_of_col_[col] = -1;
        bits::for_each_set(t_.cols_.row(col), [&](size_t j) { ++counter_[j]; });
    }
}

Explanation AssignedTableau::explain(Lit l) const {
    size_t col = t_.col_of(l.var());
    assert(col != SIZE_MAX);
    assert(trail_pos_of_col_[col] >= 0);
    const TrailEntry& e = trail_[trail_pos_of_col_[col]];
    assert(e.lit == l);
    assert(!e.is_assumption);
    return Explanation{e.reason};
}

void AssignedTableau::recount_row(uint32_t row) {
    counter_[row] = static_cast<uint32_t>(bits::popcount_andnot(t_.rows_.row(row), assigned_cols_));
}

Value AssignedTableau::value_of(Var v) const {
    size_t col = t_.col_of(v);
    return col == SIZE_MAX ? Value::Undef : val_[col];
}

std::vector<Lit> AssignedTableau::assigned_literals() const {
    std::vector<Lit> out;
    out.reserve(trail_.size());
    for (const TrailEntry& e : trail_) out.push_back(e.lit);
    return out;
}

std::vector<XorConstraint> AssignedTableau::implied_binary_xors() const {
    assert(consistent());
    assert(propagation_saturated());
    std::vector<std::tuple<Var, Var, bool>> found;

    // Case 1: both variables assigned.
    std::vector<size_t> acols;
    for (size_t c = 0; c < val_.size(); ++c)
        if (val_[c] != Value::Undef) acols.push_back(c);
    for (size_t i = 0; i < acols.size(); ++i)
        for (size_t j = i + 1; j < acols.size(); ++j)
            found.emplace_back(t_.var_of_col_[acols[i]], t_.var_of_col_[acols[j]],
                               (val_[acols[i]] == Value::True) ^ (val_[acols[j]] == Value::True));

    // Cases 2-4 work on τ-restricted rows of unassigned basic variables.
    std::map<std::vector<uint64_t>, std::vector<std::pair<uint32_t, bool>>> groups;
    for (size_t r = 0; r < t_.used_rows_; ++r) {
        size_t bcol = t_.row_basic_col_[r];
        if (val_[bcol] != Value::Undef) continue;
        auto row = t_.rows_.row(r);
        std::vector<uint64_t> rest(row.size());
        for (size_t w = 0; w < row.size(); ++w) rest[w] = row[w] & ~assigned_cols_[w];
        bits::clear(rest, bcol);
        bool q = (t_.row_parity_[r] != 0) ^ ((bits::popcount_and(row, true_cols_) & 1) != 0);
        size_t rest_count = bits::popcount(rest);
        assert(rest_count >= 1);  // saturation: otherwise the basic would be assigned
        if (rest_count == 1) {
            Var z = t_.var_of_col_[bits::first_set(rest)];
            Var y = t_.var_of_col_[bcol];
            found.emplace_back(std::min(y, z), std::max(y, z), q);
        }
        groups[std::move(rest)].emplace_back(static_cast<uint32_t>(r), q);
    }
    // Case 4: two rows whose restricted right hand sides coincide.
    for (const auto& [rest, rows] : groups) {
        for (size_t i = 0; i < rows.size(); ++i) {
            for (size_t j = i + 1; j < rows.size(); ++j) {
                Var y = t_.var_of_col_[t_.row_basic_col_[rows[i].first]];
                Var z = t_.var_of_col_[t_.row_basic_col_[rows[j].first]];
                found.emplace_back(std::min(y, z), std::max(y, z), rows[i].second ^ rows[j].second);
            }
        }
    }

    std::sort(found.begin(), found.end());
    assert(std::adjacent_find(found.begin(), found.end()) == found.end());
    std::vector<XorConstraint> out;
    out.reserve(found.size());
    for (auto [y, z, p] : found) out.push_back(XorConstraint::from_sorted_unique({y, z}, p));
    return out;
}

bool AssignedTableau::counters_consistent() const {
    for (size_t r = 0; r < t_.used_rows_; ++r)
        if (counter_[r] != bits::popcount_andnot(t_.rows_.row(r), assigned_cols_)) return false;
    return true;
}

bool AssignedTableau::propagation_saturated() const {
    for (size_t r = 0; r < t_.used_rows_; ++r) {
        bool basic_assigned = val_[t_.row_basic_col_[r]] != Value::Undef;
        if (basic_assigned && counter_[r] != 0) return false;
        if (!basic_assigned && counter_[r] == 1) return false;
    }
    return true;
}

bool AssignedTableau::consistent() const {
    for (size_t r = 0; r < t_.used_rows_; ++r) {
        if (counter_[r] != 0) continue;
        bool sum = (bits::popcount_and(t_.rows_.row(r), true_cols_) & 1) != 0;
        if (sum != (t_.row_parity_[r] != 0)) return false;
    }
    return true;
}

}  // namespace xorsat
