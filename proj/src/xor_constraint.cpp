#include "xorsat/xor_constraint.hpp"

#include <algorithm>
#include <bit>

namespace xorsat {

namespace {

std::vector<Var> unpack(const std::vector<uint64_t>& words) {
    std::vector<Var> out;
    for (size_t w = 0; w < words.size(); ++w) {
        uint64_t bits = words[w];
        while (bits != 0) {
            unsigned b = static_cast<unsigned>(__builtin_ctzll(bits));
            out.push_back(static_cast<Var>(w * 64 + b));
            bits &= bits - 1;
        }
    }
    return out;
}

void trim(std::vector<uint64_t>& words) {
    while (!words.empty() && words.back() == 0) words.pop_back();
}

}  // namespace

VarSet VarSet::from_canonical(std::vector<Var> sorted_unique) {
    VarSet s;
    s.count_ = static_cast<uint32_t>(sorted_unique.size());
    if (s.count_ <= kSmallMax) {
        s.small_ = std::move(sorted_unique);
        return s;
    }
    s.packed_ = true;
    s.words_.resize(sorted_unique.back() / 64 + 1, 0);
    for (Var v : sorted_unique) s.words_[v / 64] |= uint64_t{1} << (v % 64);
    return s;
}

VarSet VarSet::from_multiset(std::vector<Var> vars) {
    std::sort(vars.begin(), vars.end());
    std::vector<Var> kept;
    for (size_t i = 0; i < vars.size();) {
        size_t j = i;
        while (j < vars.size() && vars[j] == vars[i]) ++j;
        if ((j - i) % 2 == 1) kept.push_back(vars[i]);
        i = j;
    }
    return from_canonical(std::move(kept));
}

VarSet VarSet::from_sorted_unique(std::vector<Var> vars) {
    assert(std::is_sorted(vars.begin(), vars.end()));
    assert(std::adjacent_find(vars.begin(), vars.end()) == vars.end());
    return from_canonical(std::move(vars));
}

bool VarSet::contains(Var v) const {
    if (!packed_) return std::binary_search(small_.begin(), small_.end(), v);
    size_t w = v / 64;
    return w < words_.size() && (words_[w] >> (v % 64)) & 1;
}

Var VarSet::min_var() const {
    assert(count_ > 0);
    if (!packed_) return small_.front();
    for (size_t w = 0; w < words_.size(); ++w)
        if (words_[w] != 0) return static_cast<Var>(w * 64 + __builtin_ctzll(words_[w]));
    assert(false);
    return 0;
}

std::vector<Var> VarSet::to_vector() const {
    if (!packed_) return small_;
    return unpack(words_);
}

VarSet VarSet::sym_diff(const VarSet& other) const {
    if (!packed_ && !other.packed_) {
        std::vector<Var> out;
        out.reserve(small_.size() + other.small_.size());
        std::set_symmetric_difference(small_.begin(), small_.end(), other.small_.begin(),
                                      other.small_.end(), std::back_inserter(out));
        return from_canonical(std::move(out));
    }
    std::vector<uint64_t> words;
    auto add = [&words](const VarSet& s) {
        if (s.packed_) {
            if (words.size() < s.words_.size()) words.resize(s.words_.size(), 0);
            for (size_t w = 0; w < s.words_.size(); ++w) words[w] ^= s.words_[w];
        } else {
            for (Var v : s.small_) {
                if (words.size() <= v / 64) words.resize(v / 64 + 1, 0);
                words[v / 64] ^= uint64_t{1} << (v % 64);
            }
        }
    };
    add(*this);
    add(other);
    trim(words);
    uint32_t count = 0;
    for (uint64_t w : words) count += std::popcount(w);
    if (count <= kSmallMax) return from_canonical(unpack(words));
    VarSet s;
    s.packed_ = true;
    s.count_ = count;
    s.words_ = std::move(words);
    return s;
}

XorConstraint XorConstraint::normalized(std::vector<Var> vars, bool parity) {
    XorConstraint c;
    c.vars_ = VarSet::from_multiset(std::move(vars));
    c.parity_ = parity;
    return c;
}

XorConstraint XorConstraint::from_sorted_unique(std::vector<Var> vars, bool parity) {
    XorConstraint c;
    c.vars_ = VarSet::from_sorted_unique(std::move(vars));
    c.parity_ = parity;
    return c;
}

XorConstraint XorConstraint::from_set(VarSet vars, bool parity) {
    XorConstraint c;
    c.vars_ = std::move(vars);
    c.parity_ = parity;
    return c;
}

XorConstraint XorConstraint::contradiction() {
    XorConstraint c;
    c.parity_ = true;
    return c;
}

XorConstraint XorConstraint::unit(Lit l) {
    return from_sorted_unique({l.var()}, l.positive());
}

Value XorConstraint::evaluate(const Assignment& a) const {
    bool acc = false;
    bool undef = false;
    vars_.for_each([&](Var v) {
        Value val = a.value(v);
        if (val == Value::Undef)
            undef = true;
        else
            acc ^= (val == Value::True);
    });
    if (undef) return Value::Undef;
    return to_value(acc == parity_);
}

XorConstraint XorConstraint::substituted(Var v, const XorConstraint& definition) const {
    assert(contains(v));
    assert(!definition.contains(v));
    // c + (v ⊕ definition) cancels v and splices the definition in.
    XorConstraint defining = definition;
    defining.vars_ = defining.vars_.sym_diff(VarSet::from_sorted_unique({v}));
    return xor_add(*this, defining);
}

std::string XorConstraint::to_string() const {
    if (vars_.empty()) return parity_ ? "(0 = 1)" : "(0 = 0)";
    std::string s = "(";
    bool first = true;
    vars_.for_each([&](Var v) {
        if (!first) s += "+";
        s += "x" + std::to_string(v + 1);
        first = false;
    });
    s += parity_ ? " = 1)" : " = 0)";
    return s;
}

XorConstraint xor_add(const XorConstraint& d, const XorConstraint& e) {
    return XorConstraint::from_set(d.var_set().sym_diff(e.var_set()), d.parity() ^ e.parity());
}

}  // namespace xorsat
