#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "artin/folding.hpp"
#include "artin/oracle.hpp"
#include "artin/surface.hpp"
#include "artin/word.hpp"

namespace artin {

/// Independent cross-checks run against every normal-form verdict.
/// Disagreement with either checker is an internal error and throws;
/// budget exhaustion or matrix overflow merely skips that check.
struct CrossCheckOptions {
  std::size_t oracle_budget = kDefaultOracleBudget;  // 0 disables the oracle
  std::size_t oracle_max_letters = 14;
  bool transvection = true;
};

struct VerdictRow {
  int n = 0;
  bool relation_holds = false;
  bool expected = false;
  bool agree = false;
};

struct VerdictTable {
  std::string theorem;
  int k = 0;
  int period = 0;
  int n_max = 0;
  std::vector<VerdictRow> rows;  // sorted by n
  bool all_agree = false;
  double wall_ms = 0.0;
  // index translation, e.g. "curve a_0" -> "generator 1"
  std::vector<std::pair<std::string, std::string>> labels;
};

// Once the relation holds at n0 it must hold at every multiple of n0;
// a false return indicates an engine defect, not a math result.
bool periodicity_consistent(const VerdictTable& t);

// Theorem: with x = T_0 and y = T_1...T_k over a (k+1)-chain, the
// relation of length n holds iff (2k+4) | n.  k = 1 breaks the "only if"
// direction (the braid relation fires at n = 3) and is refused unless
// explicitly allowed as a negative control.
VerdictTable check_even_chain(int k, int n_max = 0, const CrossCheckOptions& opts = {},
                              bool allow_k1 = false);

// Theorem: with x = A_1...A_k, y = B_1...B_k over a 2k-chain, the
// relation of length n holds iff (2k+1) | n.
VerdictTable check_odd_chain(int k, int n_max = 0, const CrossCheckOptions& opts = {});

enum class FoldFamily { A, D };

struct FoldCheck {
  VerdictTable table;
  FoldingReport folding;
  bool passed() const { return table.all_agree && folding.passed(); }
};

// Folding-derived relations: family A uses A_{k-1} with period k (k >= 3),
// family D uses D_k with period 2k-2 (k >= 4).
FoldCheck check_fold(FoldFamily family, int k, int n_max = 0, const CrossCheckOptions& opts = {});

struct ConjectureEntry {
  std::vector<int> sigma;  // permutation of {1..k}, one-line
  VerdictTable table;
};

struct ConjectureReport {
  int k = 0;
  int period = 0;
  bool within_verified_range = false;  // the source verified k = 2, 3, 4
  std::vector<ConjectureEntry> entries;
  bool all_pass = false;
  double wall_ms = 0.0;
};

// For every permutation sigma, y = T_{sigma(1)}...T_{sigma(k)} must
// satisfy the even-chain period 2k+4.  k in {2,3,4} unless exploration
// beyond the verified range is explicitly requested.
ConjectureReport check_conjecture(int k, int n_max = 0, const CrossCheckOptions& opts = {},
                                  bool allow_unverified = false);

struct ClaimRow {
  std::string claim;  // "odd-length" or "even-length"
  int index = 0;      // the i or m of the claim
  int relation_length = 0;
  bool lhs = false;  // prod(x,y;len) = prod(y,x;len)
  bool rhs = false;  // the claimed equivalent twist equation
  bool agree = false;
};

struct ClaimsReport {
  std::string parity;  // "even" | "odd"
  int k = 0;
  std::vector<ClaimRow> rows;
  bool all_agree = false;
  double wall_ms = 0.0;
  std::vector<std::pair<std::string, std::string>> labels;
};

enum class ChainParity { even, odd };

// Checks that each claimed equivalence has matching truth values on both
// sides.  The default index range is the full claim range: i in [3, k+2]
// for the even family (k+2 being the boundary where both sides turn
// true), m in [1, k] for the odd family.  An explicit subrange may be
// given; indices outside the claim range are rejected.
ClaimsReport check_claims(ChainParity parity, int k, const CrossCheckOptions& opts = {},
                          int index_lo = 0, int index_hi = 0);

struct CorollaryRow {
  int repetitions = 0;
  bool equal = false;
  bool expected = false;
  bool agree = false;
};

struct CorollaryReport {
  std::vector<CorollaryRow> rows;
  bool all_agree = false;
  double wall_ms = 0.0;
};

// (a^3 b)^r = (b a^3)^r in the positive braid monoid on two strands:
// true at r = 3, false at r = 1, 2.
CorollaryReport check_corollary(const CrossCheckOptions& opts = {});

}  // namespace artin
