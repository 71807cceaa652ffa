#pragma once

#include <optional>
#include <span>
#include <vector>

#include "xorsat/formula.hpp"

namespace xorsat::oracle {

// Brute-force reference semantics used by tests and the --verify flag.
// Deliberately shares no code with the tableau engine; instances above
// kMaxVars are refused with std::invalid_argument.
inline constexpr uint32_t kMaxVars = 24;

// All satisfying total assignments, in lexicographic order of
// (τ(x0), τ(x1), ...) with false < true.
std::vector<Assignment> enumerate_models(const CnfXorFormula& f,
                                         std::span<const Lit> assumptions = {});

uint64_t count_models(const CnfXorFormula& f, std::span<const Lit> assumptions = {});

// Early-exit satisfiability check over the same enumeration.
bool is_satisfiable(const CnfXorFormula& f, std::span<const Lit> assumptions = {});

// Literals true in every model; nullopt when unsatisfiable.
std::optional<std::vector<Lit>> implied_literals_bf(const CnfXorFormula& f,
                                                    std::span<const Lit> assumptions = {});

// Width-2 xor-constraints entailed by f plus the assumptions; nullopt when
// unsatisfiable. Canonically sorted.
std::optional<std::vector<XorConstraint>> implied_binary_bf(const CnfXorFormula& f,
                                                            std::span<const Lit> assumptions = {});

// True iff e is a linear combination of the xors, or the system itself is
// unsatisfiable (in which case everything is entailed). Plain row-echelon
// Gaussian elimination, independent of the incremental engine.
bool gf2_implies(std::span<const XorConstraint> xors, const XorConstraint& e);

}  // namespace xorsat::oracle
