#include "xorsat/oracle.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace xorsat::oracle {

namespace {

// Compiled view of a formula: each clause as positive/negative masks, each
// xor as a variable mask plus parity. Bit i of a candidate word is variable
// (n-1-i), so ascending words enumerate assignments lexicographically.
struct Compiled {
    uint32_t n = 0;
    std::vector<std::pair<uint32_t, uint32_t>> clause_masks;  // (pos, neg)
    std::vector<std::pair<uint32_t, bool>> xor_masks;         // (vars, parity)
    bool trivially_unsat = false;

    bool satisfied(uint32_t m) const {
        for (auto [pos, neg] : clause_masks)
            if ((pos & m) == 0 && (neg & ~m) == 0) return false;
        for (auto [vars, parity] : xor_masks)
            if ((std::popcount(vars & m) & 1) != (parity ? 1 : 0)) return false;
        return true;
    }
};

uint32_t bit_of(uint32_t n, Var v) { return uint32_t{1} << (n - 1 - v); }

Compiled compile(const CnfXorFormula& f, std::span<const Lit> assumptions) {
    if (f.num_vars > kMaxVars)
        throw std::invalid_argument("oracle: instance exceeds " + std::to_string(kMaxVars) +
                                    " variables");
    Compiled c;
    c.n = f.num_vars;
    c.trivially_unsat = f.had_contradiction;
    for (const Clause& cl : f.clauses) {
        uint32_t pos = 0, neg = 0;
        for (Lit l : cl) (l.positive() ? pos : neg) |= bit_of(c.n, l.var());
        c.clause_masks.emplace_back(pos, neg);
        if (cl.empty()) c.trivially_unsat = true;
    }
    for (const XorConstraint& x : f.xors) {
        uint32_t vars = 0;
        x.for_each_var([&](Var v) { vars |= bit_of(c.n, v); });
        c.xor_masks.emplace_back(vars, x.parity());
    }
    for (Lit l : assumptions)
        c.clause_masks.emplace_back(l.positive() ? bit_of(c.n, l.var()) : 0,
                                    l.positive() ? 0 : bit_of(c.n, l.var()));
    return c;
}

Assignment decode(uint32_t n, uint32_t m) {
    Assignment a(n);
    for (Var v = 0; v < n; ++v) a.assign(v, (m & bit_of(n, v)) != 0);
    return a;
}

template <typename F>
void for_each_model(const Compiled& c, F&& f) {
    if (c.trivially_unsat) return;
    uint64_t total = uint64_t{1} << c.n;
    for (uint64_t m = 0; m < total; ++m)
        if (c.satisfied(static_cast<uint32_t>(m)))
            if (!f(static_cast<uint32_t>(m))) return;
}

}  // namespace

std::vector<Assignment> enumerate_models(const CnfXorFormula& f, std::span<const Lit> assumptions) {
    Compiled c = compile(f, assumptions);
    std::vector<Assignment> out;
    for_each_model(c, [&](uint32_t m) {
        out.push_back(decode(c.n, m));
        return true;
    });
    return out;
}

uint64_t count_models(const CnfXorFormula& f, std::span<const Lit> assumptions) {
    Compiled c = compile(f, assumptions);
    uint64_t count = 0;
    for_each_model(c, [&](uint32_t) {
        ++count;
        return true;
    });
    return count;
}

bool is_satisfiable(const CnfXorFormula& f, std::span<const Lit> assumptions) {
    Compiled c = compile(f, assumptions);
    bool sat = false;
    for_each_model(c, [&](uint32_t) {
        sat = true;
        return false;
    });
    return sat;
}

std::optional<std::vector<Lit>> implied_literals_bf(const CnfXorFormula& f,
                                                    std::span<const Lit> assumptions) {
    Compiled c = compile(f, assumptions);
    uint32_t and_true = ~uint32_t{0}, and_false = ~uint32_t{0};
    bool any = false;
    for_each_model(c, [&](uint32_t m) {
        and_true &= m;
        and_false &= ~m;
        any = true;
        return true;
    });
    if (!any) return std::nullopt;
    std::vector<Lit> out;
    for (Var v = 0; v < c.n; ++v) {
        if (and_true & bit_of(c.n, v)) out.emplace_back(v, true);
        if (and_false & bit_of(c.n, v)) out.emplace_back(v, false);
    }
    return out;
}

std::optional<std::vector<XorConstraint>> implied_binary_bf(const CnfXorFormula& f,
                                                            std::span<const Lit> assumptions) {
    Compiled c = compile(f, assumptions);
    // agree[i][j] / differ[i][j] track whether all models so far have
    // m_i == m_j resp. m_i != m_j.
    uint32_t n = c.n;
    std::vector<uint32_t> models;
    for_each_model(c, [&](uint32_t m) {
        models.push_back(m);
        return true;
    });
    if (models.empty()) return std::nullopt;
    std::vector<XorConstraint> out;
    for (Var y = 0; y < n; ++y) {
        for (Var z = y + 1; z < n; ++z) {
            bool all_eq = true, all_ne = true;
            for (uint32_t m : models) {
                bool by = m & bit_of(n, y), bz = m & bit_of(n, z);
                if (by == bz)
                    all_ne = false;
                else
                    all_eq = false;
                if (!all_eq && !all_ne) break;
            }
            if (all_eq) out.push_back(XorConstraint::from_sorted_unique({y, z}, false));
            if (all_ne) out.push_back(XorConstraint::from_sorted_unique({y, z}, true));
        }
    }
    return out;
}

bool gf2_implies(std::span<const XorConstraint> xors, const XorConstraint& e) {
    // Row-echelon elimination keyed by each row's smallest variable.
    std::vector<XorConstraint> pivots;  // pivot var = row.min_var()
    auto reduce = [&pivots](XorConstraint c) {
        for (const XorConstraint& p : pivots)
            if (c.contains(p.min_var())) c = xor_add(c, p);
        return c;
    };
    for (const XorConstraint& x : xors) {
        XorConstraint r = reduce(x);
        if (r.is_contradiction()) return true;  // unsatisfiable system entails everything
        if (r.is_tautology()) continue;
        pivots.push_back(std::move(r));
    }
    XorConstraint r = reduce(e);
    return r.is_tautology();
}

}  // namespace xorsat::oracle
