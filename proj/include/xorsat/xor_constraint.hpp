#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "xorsat/types.hpp"

namespace xorsat {

// Set of distinct variables. Narrow sets are kept as a sorted array, wide
// ones as a 64-bit packed bitmap; the representation is a function of the
// width only, so equal sets always compare word-for-word.
class VarSet {
public:
    static constexpr uint32_t kSmallMax = 8;

    VarSet() = default;

    // Keeps exactly the variables of odd multiplicity.
    static VarSet from_multiset(std::vector<Var> vars);
    static VarSet from_sorted_unique(std::vector<Var> vars);

    uint32_t size() const { return count_; }
    bool empty() const { return count_ == 0; }
    bool contains(Var v) const;
    Var min_var() const;

    // Visits variables in ascending order.
    template <typename F>
    void for_each(F&& f) const {
        if (!packed_) {
            for (Var v : small_) f(v);
            return;
        }
        for (size_t w = 0; w < words_.size(); ++w) {
            uint64_t bits = words_[w];
            while (bits != 0) {
                unsigned b = static_cast<unsigned>(__builtin_ctzll(bits));
                f(static_cast<Var>(w * 64 + b));
                bits &= bits - 1;
            }
        }
    }

    std::vector<Var> to_vector() const;

    VarSet sym_diff(const VarSet& other) const;

    bool operator==(const VarSet& other) const {
        return count_ == other.count_ && packed_ == other.packed_ && small_ == other.small_ &&
               words_ == other.words_;
    }

private:
    static VarSet from_canonical(std::vector<Var> sorted_unique);

    std::vector<Var> small_;       // used when !packed_
    std::vector<uint64_t> words_;  // used when packed_; trailing zero words trimmed
    uint32_t count_ = 0;
    bool packed_ = false;
};

// An equation x1 ⊕ ... ⊕ xk ≡ p over distinct variables. The empty left hand
// side equals ⊥, so (∅ ≡ ⊤) is the contradiction and (∅ ≡ ⊥) a tautology.
class XorConstraint {
public:
    XorConstraint() = default;

    // Duplicate variables cancel pairwise; the parity is untouched.
    static XorConstraint normalized(std::vector<Var> vars, bool parity);
    static XorConstraint from_sorted_unique(std::vector<Var> vars, bool parity);
    static XorConstraint from_set(VarSet vars, bool parity);
    static XorConstraint tautology() { return XorConstraint(); }
    static XorConstraint contradiction();
    static XorConstraint unit(Lit l);

    bool parity() const { return parity_; }
    uint32_t width() const { return vars_.size(); }
    bool is_tautology() const { return vars_.empty() && !parity_; }
    bool is_contradiction() const { return vars_.empty() && parity_; }
    bool contains(Var v) const { return vars_.contains(v); }
    Var min_var() const { return vars_.min_var(); }
    const VarSet& var_set() const { return vars_; }
    std::vector<Var> vars() const { return vars_.to_vector(); }

    template <typename F>
    void for_each_var(F&& f) const {
        vars_.for_each(std::forward<F>(f));
    }

    // True/False when all variables are assigned, Undef otherwise.
    Value evaluate(const Assignment& a) const;

    // Replaces v by the right hand side `definition` (which must not mention
    // v) and normalizes. Precondition violations are caller bugs.
    XorConstraint substituted(Var v, const XorConstraint& definition) const;

    bool operator==(const XorConstraint& other) const {
        return parity_ == other.parity_ && vars_ == other.vars_;
    }

    std::string to_string() const;

private:
    VarSet vars_;
    bool parity_ = false;
};

// Linear combination D + E: symmetric difference of the variable sets, XOR of
// the parities.
XorConstraint xor_add(const XorConstraint& d, const XorConstraint& e);

inline XorConstraint operator+(const XorConstraint& d, const XorConstraint& e) {
    return xor_add(d, e);
}

}  // namespace xorsat
