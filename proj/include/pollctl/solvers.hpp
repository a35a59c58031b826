#ifndef POLLCTL_SOLVERS_HPP
#define POLLCTL_SOLVERS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pollctl/geo.hpp"
#include "pollctl/winners.hpp"

namespace pollctl {

enum class Verdict { YES, NO, UNKNOWN };

const char* verdict_name(Verdict v);

struct SolveResult {
  Verdict verdict = Verdict::UNKNOWN;
  std::optional<Selection> witness;   // present iff verdict == YES
  std::optional<ScoreBoard> board;    // scoreboard at the witness
  std::string algorithm;
  std::uint64_t states_explored = 0;
  double wall_ms = 0.0;
};

struct SolveOptions {
  unsigned threads = 1;
  std::size_t brute_cap = 24;       // max sites for exhaustive enumeration
  std::size_t overlap_budget = 20;  // max |T| for the 2^T sweep
};

// Two candidates on the line: dynamic program over sites sorted by
// coordinate, maximizing the target's margin.  Exact.
SolveResult solve_line_dp(const GeoInstance& instance, const ControlQuery& query,
                          const SolveOptions& opts = {});

// Two candidates, no voter reaches more than one site: per-site margins are
// additive, so take every positive one and pad to k.  Exact.
SolveResult solve_no_overlap(const GeoInstance& instance, const ControlQuery& query,
                             const SolveOptions& opts = {});

// Two candidates, few sites involved in overlap: sweep all subsets of the
// overlapping sites and complete each greedily from the rest.  Exact.
SolveResult solve_bounded_overlap(const GeoInstance& instance, const ControlQuery& query,
                                  const SolveOptions& opts = {});

// Any metric, any number of candidates.  Adds the site with the best
// resulting margin-vs-strongest-rival until the goal holds.  Returns YES or
// UNKNOWN, never NO: overlap makes the greedy choice unsound as a proof of
// absence (and as an approximation).
SolveResult solve_greedy(const GeoInstance& instance, const ControlQuery& query,
                         const SolveOptions& opts = {});

// Exhaustive enumeration of all selections of size >= k, size ascending and
// lexicographic within size (site-id order), stopping at the first success.
SolveResult solve_brute_force(const GeoInstance& instance, const ControlQuery& query,
                              const SolveOptions& opts = {});

// Dispatch: cheapest applicable exact algorithm, greedy as a last resort.
SolveResult solve_auto(const GeoInstance& instance, const ControlQuery& query,
                       const SolveOptions& opts = {});

namespace detail {

// DP table exposed for the prefix-optimality checks in the test suite.
struct LineDp {
  std::vector<std::uint32_t> order;    // site declaration indices, sorted by (coord, id)
  static constexpr long long kNegInf = -(1LL << 60);
  // table[b][j]: best margin for the objective candidate over selections of
  // exactly b sites among order[0..j] that include order[j]; 1 <= b <= m.
  std::vector<std::vector<long long>> table;
  std::vector<std::vector<int>> back;  // predecessor position, -1 for none
};

LineDp build_line_dp(const GeoInstance& instance, const std::string& objective_candidate);

std::uint64_t binomial(std::size_t n, std::size_t k);

}  // namespace detail

}  // namespace pollctl

#endif
