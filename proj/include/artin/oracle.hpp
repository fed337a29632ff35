#pragma once

#include <cstddef>

#include "artin/word.hpp"

namespace artin {

enum class OracleResult { equal, not_equal, budget_exceeded };

inline constexpr std::size_t kDefaultOracleBudget = 1'000'000;

// Breadth-first closure of u under single-site replacements
// prod(s,t;m_st) <-> prod(t,s;m_st).  Exact whenever the closure
// completes within the node budget; budget exhaustion is reported
// distinctly, never as inequality.  Works on any graph, including
// custom ones (pairs with m_st = infinity simply admit no rewrite).
OracleResult brute_force_equal(const PositiveWord& u, const PositiveWord& v,
                               std::size_t node_budget = kDefaultOracleBudget);

}  // namespace artin
