#pragma once

#include <cassert>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace xorsat {

// Variables are dense 0-based indices internally; the DIMACS frontend maps
// them from the external 1-based format.
using Var = uint32_t;

enum class Value : uint8_t { False = 0, True = 1, Undef = 2 };

inline Value to_value(bool b) { return b ? Value::True : Value::False; }

inline Value negate(Value v) {
    switch (v) {
        case Value::False: return Value::True;
        case Value::True: return Value::False;
        default: return Value::Undef;
    }
}

inline bool is_assigned(Value v) { return v != Value::Undef; }

// A literal (x ≡ ⊤) or (x ≡ ⊥), encoded as 2*var + (positive ? 0 : 1).
class Lit {
public:
    Lit() = default;
    Lit(Var v, bool positive) : code_((v << 1) | (positive ? 0u : 1u)) {}

    Var var() const { return code_ >> 1; }
    bool positive() const { return (code_ & 1u) == 0; }
    // Dense index usable for watch tables and the like.
    uint32_t index() const { return code_; }

    Lit operator~() const {
        Lit l;
        l.code_ = code_ ^ 1u;
        return l;
    }

    auto operator<=>(const Lit&) const = default;

    static Lit from_index(uint32_t idx) {
        Lit l;
        l.code_ = idx;
        return l;
    }

private:
    uint32_t code_ = 0;
};

inline std::string to_string(Lit l) {
    return (l.positive() ? "x" : "-x") + std::to_string(l.var() + 1);
}

// A partial truth assignment; each variable is mapped at most once.
class Assignment {
public:
    Assignment() = default;
    explicit Assignment(size_t num_vars) : vals_(num_vars, Value::Undef) {}

    size_t num_vars() const { return vals_.size(); }
    size_t assigned_count() const { return assigned_; }

    Value value(Var v) const {
        assert(v < vals_.size());
        return vals_[v];
    }
    bool is_assigned(Var v) const { return value(v) != Value::Undef; }

    void assign(Var v, bool b) {
        assert(v < vals_.size());
        assert(vals_[v] == Value::Undef);
        vals_[v] = to_value(b);
        ++assigned_;
    }

    void unassign(Var v) {
        assert(v < vals_.size());
        assert(vals_[v] != Value::Undef);
        vals_[v] = Value::Undef;
        --assigned_;
    }

    // True iff the literal's variable is assigned and agrees with it.
    bool satisfies(Lit l) const { return value(l.var()) == to_value(l.positive()); }

private:
    std::vector<Value> vals_;
    size_t assigned_ = 0;
};

// A disjunction of literals with no duplicates and no complementary pair.
struct Clause {
    std::vector<Lit> lits;

    Clause() = default;
    explicit Clause(std::vector<Lit> ls) : lits(std::move(ls)) {}

    size_t size() const { return lits.size(); }
    bool empty() const { return lits.empty(); }
    auto begin() const { return lits.begin(); }
    auto end() const { return lits.end(); }
    Lit operator[](size_t i) const { return lits[i]; }

    bool operator==(const Clause&) const = default;
};

// Deduplicates literals; returns nullopt when the clause is tautological.
std::optional<Clause> make_clause(std::vector<Lit> lits);

std::string to_string(const Clause& c);

}  // namespace xorsat
