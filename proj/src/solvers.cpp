#include "pollctl/solvers.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <climits>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "pollctl/error.hpp"

namespace pollctl {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// Margin threshold for the objective candidate: a tie is enough to win
// constructively, while destructive control needs the rival strictly ahead.
struct TwoParty {
  std::string objective;
  long long threshold;  // success: margin(objective) >= threshold
};

TwoParty two_party_view(const GeoInstance& instance, const ControlQuery& query) {
  if (instance.candidates.size() != 2)
    throw Error(Errc::PRECONDITION_VIOLATED, "this algorithm requires exactly two candidates");
  instance.candidate_pos(query.target);
  const std::string& rival =
      (query.target == instance.candidates[0]) ? instance.candidates[1] : instance.candidates[0];
  if (query.mode == ControlMode::CONSTRUCTIVE) return {query.target, 0};
  return {rival, 1};
}

std::vector<int> voter_weights(const GeoInstance& instance, const ReachTable& table,
                               const std::string& objective) {
  std::uint32_t obj = static_cast<std::uint32_t>(instance.candidate_pos(objective));
  std::vector<int> w(instance.voters.size());
  for (std::size_t v = 0; v < w.size(); ++v) w[v] = table.top_candidate[v] == obj ? 1 : -1;
  return w;
}

Selection selection_from_decl(const GeoInstance& instance, const std::vector<std::uint32_t>& decl) {
  std::vector<std::string> ids;
  ids.reserve(decl.size());
  for (std::uint32_t s : decl) ids.push_back(instance.sites[s].id);
  return Selection::of(std::move(ids));
}

SolveResult yes_result(const GeoInstance& instance, Selection witness, std::string algorithm,
                       std::uint64_t states, Clock::time_point t0) {
  SolveResult r;
  r.verdict = Verdict::YES;
  r.board = plurality_scores(instance, witness);
  r.witness = std::move(witness);
  r.algorithm = std::move(algorithm);
  r.states_explored = states;
  r.wall_ms = ms_since(t0);
  return r;
}

SolveResult no_result(Verdict verdict, std::string algorithm, std::uint64_t states,
                      Clock::time_point t0) {
  SolveResult r;
  r.verdict = verdict;
  r.algorithm = std::move(algorithm);
  r.states_explored = states;
  r.wall_ms = ms_since(t0);
  return r;
}

bool next_combination(std::vector<int>& c, int n) {
  int s = static_cast<int>(c.size());
  for (int i = s - 1; i >= 0; --i) {
    if (c[i] < n - s + i) {
      ++c[i];
      for (int j = i + 1; j < s; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

constexpr std::uint64_t kNoRank = ~0ULL;

struct ScanOutcome {
  bool found = false;
  std::vector<int> combo;
  std::uint64_t rank = kNoRank;
};

// First (lowest-rank) s-combination of [0,n) satisfying eval, enumerated in
// lexicographic order.  Workers stride over ranks and may stop early once a
// lower success is known, so the outcome does not depend on thread count.
ScanOutcome scan_combinations(int n, int s, unsigned threads,
                              const std::function<bool(const std::vector<int>&)>& eval) {
  if (s == 0) {
    std::vector<int> empty;
    if (eval(empty)) return {true, empty, 0};
    return {};
  }
  if (s > n) return {};
  std::uint64_t total = detail::binomial(static_cast<std::size_t>(n), static_cast<std::size_t>(s));

  if (threads <= 1 || total < 4096) {
    std::vector<int> c(s);
    std::iota(c.begin(), c.end(), 0);
    std::uint64_t rank = 0;
    do {
      if (eval(c)) return {true, c, rank};
      ++rank;
    } while (next_combination(c, n));
    return {};
  }

  std::atomic<std::uint64_t> best{kNoRank};
  std::vector<std::vector<int>> best_combo(threads);
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      std::vector<int> c(s);
      std::iota(c.begin(), c.end(), 0);
      std::uint64_t rank = 0;
      do {
        if (rank % threads == w) {
          if (best.load(std::memory_order_relaxed) < rank) return;
          if (eval(c)) {
            best_combo[w] = c;
            std::uint64_t prev = best.load();
            while (prev > rank && !best.compare_exchange_weak(prev, rank)) {
            }
            return;
          }
        }
        ++rank;
      } while (next_combination(c, n));
    });
  }
  for (auto& th : pool) th.join();

  std::uint64_t b = best.load();
  if (b == kNoRank) return {};
  return {true, best_combo[static_cast<std::size_t>(b % threads)], b};
}

// Deterministic work measure: combinations that a serial scan would touch.
std::uint64_t ranks_touched(const ScanOutcome& outcome, int n, int s) {
  if (outcome.found) return outcome.rank + 1;
  return detail::binomial(static_cast<std::size_t>(n), static_cast<std::size_t>(s));
}

// Per-site margins when no chosen voter can reach two of the given sites:
// margin[s] = sum of weights of voters reaching s.
std::vector<long long> independent_site_margins(const GeoInstance& instance,
                                                const ReachTable& table,
                                                const std::vector<int>& weights) {
  std::vector<long long> m(instance.sites.size(), 0);
  for (std::size_t v = 0; v < table.reach.size(); ++v)
    for (std::uint32_t s : table.reach[v]) m[s] += weights[v];
  return m;
}

}  // namespace

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::YES: return "YES";
    case Verdict::NO: return "NO";
    case Verdict::UNKNOWN: return "UNKNOWN";
  }
  return "UNKNOWN";
}

namespace detail {

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    // n <= 64 in every caller, so this stays comfortably inside 64 bits
    r = r * (n - k + i) / i;
  }
  return r;
}

LineDp build_line_dp(const GeoInstance& instance, const std::string& objective_candidate) {
  if (instance.metric.dimension != 1)
    throw Error(Errc::PRECONDITION_VIOLATED, "line DP requires a one-dimensional instance");

  LineDp dp;
  const std::size_t m = instance.sites.size();
  dp.order.resize(m);
  std::iota(dp.order.begin(), dp.order.end(), 0);
  std::sort(dp.order.begin(), dp.order.end(), [&](std::uint32_t a, std::uint32_t b) {
    const Rational& xa = instance.sites[a].location.coords[0];
    const Rational& xb = instance.sites[b].location.coords[0];
    if (xa != xb) return xa < xb;
    return instance.sites[a].id < instance.sites[b].id;
  });

  ReachTable table = ReachTable::build(instance);
  std::vector<int> weights = voter_weights(instance, table, objective_candidate);

  std::vector<std::size_t> pos_of(m);
  for (std::size_t p = 0; p < m; ++p) pos_of[dp.order[p]] = p;

  // contrib[j][t]: weight of voters whose reach interval is [t..>=j], i.e.
  // they can vote at position j and at nothing left of position t.
  std::vector<std::vector<long long>> contrib(m, std::vector<long long>(m + 1, 0));
  for (std::size_t v = 0; v < instance.voters.size(); ++v) {
    const auto& reach = table.reach[v];
    if (reach.empty()) continue;
    std::vector<std::size_t> positions;
    positions.reserve(reach.size());
    for (std::uint32_t s : reach) positions.push_back(pos_of[s]);
    std::sort(positions.begin(), positions.end());
    // On the line a voter's reachable sites form a contiguous run of the
    // sorted order; the DP transition is only sound because of this.
    for (std::size_t i = 1; i < positions.size(); ++i) {
      if (positions[i] != positions[i - 1] + 1)
        throw std::logic_error("voter reach is not an interval in sorted site order");
    }
    std::size_t lo = positions.front(), hi = positions.back();
    for (std::size_t j = lo; j <= hi; ++j) contrib[j][lo] += weights[v];
  }

  // gain[j][t] = margin of voters reaching position j but nothing at
  // position < t; gain[j][0] is the singleton margin of j.
  std::vector<std::vector<long long>>& gain = contrib;
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t t = j + 1; t-- > 0;) gain[j][t] += gain[j][t + 1];

  dp.table.assign(m + 1, std::vector<long long>(m, LineDp::kNegInf));
  dp.back.assign(m + 1, std::vector<int>(m, -1));
  for (std::size_t j = 0; j < m; ++j) dp.table[1][j] = gain[j][0];
  for (std::size_t b = 2; b <= m; ++b) {
    for (std::size_t j = b - 1; j < m; ++j) {
      long long best = LineDp::kNegInf;
      int best_prev = -1;
      for (std::size_t jp = b - 2; jp < j; ++jp) {
        if (dp.table[b - 1][jp] == LineDp::kNegInf) continue;
        long long cand = dp.table[b - 1][jp] + gain[j][jp + 1];
        if (cand > best) {
          best = cand;
          best_prev = static_cast<int>(jp);
        }
      }
      dp.table[b][j] = best;
      dp.back[b][j] = best_prev;
    }
  }
  return dp;
}

}  // namespace detail

SolveResult solve_line_dp(const GeoInstance& instance, const ControlQuery& query,
                          const SolveOptions&) {
  auto t0 = Clock::now();
  TwoParty view = two_party_view(instance, query);
  const std::size_t m = instance.sites.size();
  const long long k = query.min_sites;

  if (query.mode == ControlMode::CONSTRUCTIVE && k == 0)
    return yes_result(instance, Selection{}, "line-dp", 0, t0);

  detail::LineDp dp = detail::build_line_dp(instance, view.objective);
  std::uint64_t states = 0;
  for (std::size_t b = std::max<long long>(k, 1); b <= m; ++b) {
    for (std::size_t j = b - 1; j < m; ++j) {
      ++states;
      if (dp.table[b][j] >= view.threshold) {
        std::vector<std::uint32_t> decl;
        int pos = static_cast<int>(j);
        for (std::size_t bb = b; bb >= 1 && pos >= 0; --bb) {
          decl.push_back(dp.order[static_cast<std::size_t>(pos)]);
          pos = dp.back[bb][static_cast<std::size_t>(pos)];
        }
        return yes_result(instance, selection_from_decl(instance, decl), "line-dp", states, t0);
      }
    }
  }
  return no_result(Verdict::NO, "line-dp", states, t0);
}

SolveResult solve_no_overlap(const GeoInstance& instance, const ControlQuery& query,
                             const SolveOptions&) {
  auto t0 = Clock::now();
  TwoParty view = two_party_view(instance, query);
  ReachTable table = ReachTable::build(instance);
  if (!overlap_graph(instance, table).edgeless())
    throw Error(Errc::PRECONDITION_VIOLATED,
                "some voter reaches two sites; use the bounded-overlap solver");

  const long long k = query.min_sites;
  const std::size_t m = instance.sites.size();
  if (k > static_cast<long long>(m)) return no_result(Verdict::NO, "no-overlap", 0, t0);

  std::vector<int> weights = voter_weights(instance, table, view.objective);
  std::vector<long long> site_margin = independent_site_margins(instance, table, weights);

  std::vector<std::uint32_t> order = canonical_site_order(instance);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (site_margin[a] != site_margin[b]) return site_margin[a] > site_margin[b];
    return instance.sites[a].id < instance.sites[b].id;
  });

  std::vector<std::uint32_t> chosen;
  long long total = 0;
  for (std::uint32_t s : order) {
    bool positive = site_margin[s] > 0;
    bool must_pad = static_cast<long long>(chosen.size()) < k;
    if (!positive && !must_pad) break;
    chosen.push_back(s);
    total += site_margin[s];
  }

  if (total >= view.threshold)
    return yes_result(instance, selection_from_decl(instance, chosen), "no-overlap", m, t0);
  return no_result(Verdict::NO, "no-overlap", m, t0);
}

SolveResult solve_bounded_overlap(const GeoInstance& instance, const ControlQuery& query,
                                  const SolveOptions& opts) {
  auto t0 = Clock::now();
  TwoParty view = two_party_view(instance, query);
  ReachTable table = ReachTable::build(instance);
  OverlapGraph overlap = overlap_graph(instance, table);

  std::vector<std::uint32_t> t_sites = overlap.overlapping_sites();
  if (t_sites.size() > opts.overlap_budget || t_sites.size() > 62)
    throw Error(Errc::OVERLAP_BUDGET_EXCEEDED,
                std::to_string(t_sites.size()) + " overlapping sites exceed the budget of " +
                    std::to_string(std::min<std::size_t>(opts.overlap_budget, 62)));

  // Order T by site id so subset enumeration (and the witness) is canonical.
  std::sort(t_sites.begin(), t_sites.end(), [&](std::uint32_t a, std::uint32_t b) {
    return instance.sites[a].id < instance.sites[b].id;
  });
  std::vector<char> in_t(instance.sites.size(), 0);
  std::vector<std::size_t> t_pos(instance.sites.size(), 0);
  for (std::size_t i = 0; i < t_sites.size(); ++i) {
    in_t[t_sites[i]] = 1;
    t_pos[t_sites[i]] = i;
  }

  std::vector<int> weights = voter_weights(instance, table, view.objective);

  // Voters reaching any overlapping site never reach a non-overlapping one,
  // so the sweep margin and the completion margin are independent sums.
  std::vector<std::pair<std::uint64_t, int>> t_voters;  // (mask over T, weight)
  std::vector<long long> site_margin(instance.sites.size(), 0);
  for (std::size_t v = 0; v < table.reach.size(); ++v) {
    const auto& reach = table.reach[v];
    if (reach.empty()) continue;
    if (in_t[reach.front()]) {
      std::uint64_t mask = 0;
      for (std::uint32_t s : reach) mask |= 1ULL << t_pos[s];
      t_voters.emplace_back(mask, weights[v]);
    } else {
      site_margin[reach.front()] += weights[v];
    }
  }

  std::vector<std::uint32_t> rest = canonical_site_order(instance);
  rest.erase(std::remove_if(rest.begin(), rest.end(), [&](std::uint32_t s) { return in_t[s]; }),
             rest.end());
  std::sort(rest.begin(), rest.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (site_margin[a] != site_margin[b]) return site_margin[a] > site_margin[b];
    return instance.sites[a].id < instance.sites[b].id;
  });
  std::vector<long long> prefix(rest.size() + 1, 0);
  for (std::size_t i = 0; i < rest.size(); ++i) prefix[i + 1] = prefix[i] + site_margin[rest[i]];
  std::size_t positives = 0;
  while (positives < rest.size() && site_margin[rest[positives]] > 0) ++positives;

  // Best completion with at least c sites from the non-overlapping pool.
  auto completion_size = [&](std::size_t c) { return std::max(c, positives); };
  auto completion_value = [&](std::size_t c) { return prefix[completion_size(c)]; };

  const long long k = query.min_sites;
  const int tn = static_cast<int>(t_sites.size());
  std::uint64_t states = 0;

  for (int i = 0; i <= tn; ++i) {
    long long needed = k - i;
    std::size_t c_min = needed > 0 ? static_cast<std::size_t>(needed) : 0;
    if (c_min > rest.size()) continue;
    long long comp = completion_value(c_min);

    auto eval = [&](const std::vector<int>& combo) {
      std::uint64_t mask = 0;
      for (int b : combo) mask |= 1ULL << b;
      long long margin_s = 0;
      for (const auto& [vmask, w] : t_voters)
        if (vmask & mask) margin_s += w;
      return margin_s + comp >= view.threshold;
    };

    ScanOutcome outcome = scan_combinations(tn, i, opts.threads, eval);
    states += ranks_touched(outcome, tn, i);
    if (outcome.found) {
      std::vector<std::uint32_t> decl;
      for (int b : outcome.combo) decl.push_back(t_sites[static_cast<std::size_t>(b)]);
      for (std::size_t c = 0; c < completion_size(c_min); ++c) decl.push_back(rest[c]);
      return yes_result(instance, selection_from_decl(instance, decl), "bounded-overlap", states,
                        t0);
    }
  }
  return no_result(Verdict::NO, "bounded-overlap", states, t0);
}

SolveResult solve_greedy(const GeoInstance& instance, const ControlQuery& query,
                         const SolveOptions&) {
  auto t0 = Clock::now();
  std::size_t target = instance.candidate_pos(query.target);
  ReachTable table = ReachTable::build(instance);
  std::vector<std::uint32_t> order = canonical_site_order(instance);

  std::vector<std::vector<std::uint32_t>> voters_at(instance.sites.size());
  for (std::size_t v = 0; v < table.reach.size(); ++v)
    for (std::uint32_t s : table.reach[v]) voters_at[s].push_back(static_cast<std::uint32_t>(v));

  std::vector<long long> counts(instance.candidates.size(), 0);
  std::vector<char> participating(instance.voters.size(), 0);
  std::vector<char> chosen(instance.sites.size(), 0);
  std::vector<std::uint32_t> chosen_decl;
  std::uint64_t states = 0;

  auto objective = [&](const std::vector<long long>& c) {
    long long best_rival = 0;
    bool any = false;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i == target) continue;
      best_rival = any ? std::max(best_rival, c[i]) : c[i];
      any = true;
    }
    long long lead = any ? c[target] - best_rival : c[target];
    return query.mode == ControlMode::CONSTRUCTIVE ? lead : -lead;
  };

  auto control_holds = [&]() {
    if (static_cast<long long>(chosen_decl.size()) < query.min_sites) return false;
    long long best = 0;
    for (long long c : counts) best = std::max(best, c);
    bool wins = counts[target] == best;
    return query.mode == ControlMode::CONSTRUCTIVE ? wins : !wins;
  };

  auto make_result = [&](Verdict verdict) {
    if (verdict != Verdict::YES) return no_result(verdict, "greedy", states, t0);
    return yes_result(instance, selection_from_decl(instance, chosen_decl), "greedy", states, t0);
  };

  if (control_holds()) return make_result(Verdict::YES);

  for (std::size_t step = 0; step < instance.sites.size(); ++step) {
    long long best_value = LLONG_MIN;
    std::uint32_t best_site = 0;
    for (std::uint32_t s : order) {
      if (chosen[s]) continue;
      ++states;
      std::vector<long long> next = counts;
      for (std::uint32_t v : voters_at[s])
        if (!participating[v]) ++next[table.top_candidate[v]];
      long long value = objective(next);
      if (value > best_value) {
        best_value = value;
        best_site = s;
      }
    }
    chosen[best_site] = 1;
    chosen_decl.push_back(best_site);
    for (std::uint32_t v : voters_at[best_site]) {
      if (!participating[v]) {
        participating[v] = 1;
        ++counts[table.top_candidate[v]];
      }
    }
    if (control_holds()) return make_result(Verdict::YES);
  }
  return make_result(Verdict::UNKNOWN);
}

SolveResult solve_brute_force(const GeoInstance& instance, const ControlQuery& query,
                              const SolveOptions& opts) {
  auto t0 = Clock::now();
  std::size_t target = instance.candidate_pos(query.target);
  const std::size_t m = instance.sites.size();
  if (m > opts.brute_cap || m > 62)
    throw Error(Errc::INSTANCE_TOO_LARGE,
                std::to_string(m) + " sites exceed the enumeration cap of " +
                    std::to_string(std::min<std::size_t>(opts.brute_cap, 62)));

  ReachTable table = ReachTable::build(instance);
  std::vector<std::uint32_t> order = canonical_site_order(instance);
  std::vector<std::size_t> canon_pos(m);
  for (std::size_t p = 0; p < m; ++p) canon_pos[order[p]] = p;

  struct MaskedVoter {
    std::uint64_t mask;
    std::uint32_t top;
  };
  std::vector<MaskedVoter> voters;
  voters.reserve(instance.voters.size());
  for (std::size_t v = 0; v < table.reach.size(); ++v) {
    if (table.reach[v].empty()) continue;
    std::uint64_t mask = 0;
    for (std::uint32_t s : table.reach[v]) mask |= 1ULL << canon_pos[s];
    voters.push_back({mask, table.top_candidate[v]});
  }

  const std::size_t n_cand = instance.candidates.size();
  auto eval = [&](const std::vector<int>& combo) {
    std::uint64_t mask = 0;
    for (int b : combo) mask |= 1ULL << b;
    std::vector<long long> counts(n_cand, 0);
    for (const MaskedVoter& v : voters)
      if (v.mask & mask) ++counts[v.top];
    long long best = 0;
    for (long long c : counts) best = std::max(best, c);
    bool wins = counts[target] == best;
    return query.mode == ControlMode::CONSTRUCTIVE ? wins : !wins;
  };

  std::uint64_t states = 0;
  const std::size_t start = query.min_sites > 0 ? static_cast<std::size_t>(query.min_sites) : 0;
  for (std::size_t s = start; s <= m; ++s) {
    ScanOutcome outcome =
        scan_combinations(static_cast<int>(m), static_cast<int>(s), opts.threads, eval);
    states += ranks_touched(outcome, static_cast<int>(m), static_cast<int>(s));
    if (outcome.found) {
      std::vector<std::uint32_t> decl;
      for (int b : outcome.combo) decl.push_back(order[static_cast<std::size_t>(b)]);
      return yes_result(instance, selection_from_decl(instance, decl), "brute-force", states, t0);
    }
  }
  return no_result(Verdict::NO, "brute-force", states, t0);
}

SolveResult solve_auto(const GeoInstance& instance, const ControlQuery& query,
                       const SolveOptions& opts) {
  if (instance.candidates.size() == 2) {
    if (instance.metric.dimension == 1) return solve_line_dp(instance, query, opts);
    OverlapGraph overlap = overlap_graph(instance);
    if (overlap.edgeless()) return solve_no_overlap(instance, query, opts);
    if (overlap.overlapping_sites().size() <= opts.overlap_budget)
      return solve_bounded_overlap(instance, query, opts);
  }
  if (instance.sites.size() <= opts.brute_cap) return solve_brute_force(instance, query, opts);
  return solve_greedy(instance, query, opts);
}

}  // namespace pollctl
