#ifndef POLLCTL_TESTS_SUPPORT_HPP
#define POLLCTL_TESTS_SUPPORT_HPP

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "pollctl/bound_change.hpp"
#include "pollctl/error.hpp"
#include "pollctl/generator.hpp"
#include "pollctl/geo.hpp"
#include "pollctl/reductions.hpp"
#include "pollctl/winners.hpp"

namespace pollctl::test {

inline Voter v(std::string id, Point at, Rational bound, std::vector<std::string> prefs) {
  return Voter{std::move(id), std::move(at), std::move(bound), std::move(prefs)};
}

// The greedy counterexample: three overlapping sites in the plane, two
// candidates, quota 2.  Every group's reach set is pinned by the geometry.
inline GeoInstance example1_instance() {
  GeoInstance inst;
  inst.metric = {2, Norm::EUCLIDEAN};
  inst.candidates = {"p", "r"};
  auto add = [&](int n, const std::string& prefix, int start, Point at,
                 std::vector<std::string> prefs) {
    for (int i = 0; i < n; ++i)
      inst.voters.push_back(
          v(prefix + std::to_string(start + i), at, Rational(1), prefs));
  };
  add(20, "p", 1, Point{{Rational(7, 4), Rational(3, 4)}}, {"p", "r"});   // A or C
  add(30, "p", 21, Point{{Rational(3, 2), Rational(3, 2)}}, {"p", "r"});  // A or B
  add(35, "r", 1, Point{{Rational(5, 2), Rational(3, 2)}}, {"r", "p"});   // B or C
  add(51, "r", 36, Point{{Rational(1), Rational(1)}}, {"r", "p"});        // A only
  add(5, "r", 87, Point{{Rational(2), Rational(2)}}, {"r", "p"});         // B only
  inst.sites = {{"A", Point{{Rational(1), Rational(1)}}},
                {"B", Point{{Rational(2), Rational(2)}}},
                {"C", Point{{Rational(5, 2), Rational(1)}}}};
  validate_instance(inst);
  return inst;
}

inline ControlQuery example1_query() { return {ControlMode::CONSTRUCTIVE, "p", 2}; }

// Independent exhaustive oracle built on the instance-level operations only:
// no masks, no score caching, first success in canonical order.
inline std::optional<Selection> control_brute_tiny(const GeoInstance& inst,
                                                   const ControlQuery& query) {
  std::vector<std::uint32_t> order = canonical_site_order(inst);
  const std::size_t m = order.size();
  std::size_t start = query.min_sites > 0 ? static_cast<std::size_t>(query.min_sites) : 0;
  for (std::size_t s = start; s <= m; ++s) {
    std::vector<std::size_t> combo(s);
    for (std::size_t i = 0; i < s; ++i) combo[i] = i;
    bool more = true;
    while (more) {
      std::vector<std::string> ids;
      for (std::size_t i : combo) ids.push_back(inst.sites[order[i]].id);
      Selection sel = Selection::of(ids);
      if (evaluate_control(inst, query, sel)) return sel;
      // advance lexicographically
      more = false;
      for (std::size_t i = s; i-- > 0;) {
        if (combo[i] < m - s + i) {
          ++combo[i];
          for (std::size_t j = i + 1; j < s; ++j) combo[j] = combo[j - 1] + 1;
          more = true;
          break;
        }
      }
      if (s == 0) break;
    }
  }
  return std::nullopt;
}

// --------------------------------------------------------------------------
// Random structures for the property suites

inline GridGraph random_grid_graph(std::mt19937_64& rng, std::size_t max_vertices = 8,
                                   long long span = 4) {
  GridGraph g;
  std::size_t nv = 2 + rnd_below(rng, max_vertices - 1);
  std::vector<std::pair<long long, long long>> pts;
  while (pts.size() < nv) {
    std::pair<long long, long long> p{
        static_cast<long long>(rnd_below(rng, static_cast<std::uint64_t>(span + 1))),
        static_cast<long long>(rnd_below(rng, static_cast<std::uint64_t>(span + 1)))};
    if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
  }
  for (std::size_t i = 0; i < pts.size(); ++i)
    g.vertices.push_back({"g" + std::to_string(i),
                          Point{{Rational(pts[i].first), Rational(pts[i].second)}}});

  std::vector<std::pair<std::string, std::string>> candidates;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      bool aligned = pts[i].first == pts[j].first || pts[i].second == pts[j].second;
      long long len = std::abs(pts[i].first - pts[j].first) +
                      std::abs(pts[i].second - pts[j].second);
      if (aligned && len <= 3) candidates.emplace_back(g.vertices[i].id, g.vertices[j].id);
    }
  }
  for (std::size_t i = candidates.size(); i > 1; --i)
    std::swap(candidates[i - 1], candidates[rnd_below(rng, i)]);

  for (const auto& e : candidates) {
    if (rnd_below(rng, 10) < 3) continue;
    g.edges.push_back(e);
    try {
      validate_grid_graph(g);
    } catch (const Error&) {
      g.edges.pop_back();
    }
  }
  return g;
}

inline GridGraph random_restricted_graph(std::mt19937_64& rng, std::size_t max_edges = 5) {
  GridGraph g;
  g.vertices.push_back({"g0", Point{{Rational(0), Rational(0)}}});
  std::size_t target = 1 + rnd_below(rng, max_edges);
  long long next_id = 1;
  const Rational dirs[4][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  for (int attempt = 0; attempt < 120 && g.edges.size() < target; ++attempt) {
    const GridVertex from = g.vertices[rnd_below(rng, g.vertices.size())];
    const auto& dir = dirs[rnd_below(rng, 4)];
    Rational len = rnd_below(rng, 2) == 0 ? Rational(1) : Rational(3, 2);
    Point to{{from.location.coords[0] + dir[0] * len, from.location.coords[1] + dir[1] * len}};

    std::string to_id;
    bool fresh = true;
    for (const GridVertex& w : g.vertices)
      if (w.location == to) {
        to_id = w.id;
        fresh = false;
      }
    if (fresh) {
      to_id = "g" + std::to_string(next_id++);
      g.vertices.push_back({to_id, to});
    }
    g.edges.emplace_back(from.id, to_id);
    try {
      validate_restricted_graph(g);
    } catch (const Error&) {
      g.edges.pop_back();
      if (fresh) {
        g.vertices.pop_back();
        --next_id;
      }
    }
  }
  return g;
}

inline X3CInstance random_x3c(std::mt19937_64& rng, long long k) {
  X3CInstance x;
  for (long long i = 1; i <= 3 * k; ++i) x.ground.push_back("b" + std::to_string(i));
  std::size_t n = static_cast<std::size_t>(k) + rnd_below(rng, 5);
  int guard = 0;
  while (x.sets.size() < n && guard++ < 200) {
    std::vector<std::string> pick;
    while (pick.size() < 3) {
      std::string b = x.ground[rnd_below(rng, x.ground.size())];
      if (std::find(pick.begin(), pick.end(), b) == pick.end()) pick.push_back(b);
    }
    std::sort(pick.begin(), pick.end());
    std::array<std::string, 3> triple{pick[0], pick[1], pick[2]};
    if (std::find(x.sets.begin(), x.sets.end(), triple) == x.sets.end()) x.sets.push_back(triple);
  }
  return x;
}

inline StdElection random_std_election(std::mt19937_64& rng, std::size_t max_voters = 10) {
  StdElection e;
  std::size_t nc = 2 + rnd_below(rng, 3);
  for (std::size_t c = 1; c <= nc; ++c) e.candidates.push_back("c" + std::to_string(c));
  std::size_t nv = rnd_below(rng, max_voters + 1);
  for (std::size_t i = 1; i <= nv; ++i) {
    std::vector<std::string> prefs = e.candidates;
    for (std::size_t j = prefs.size(); j > 1; --j)
      std::swap(prefs[j - 1], prefs[rnd_below(rng, j)]);
    e.voters.push_back({"v" + std::to_string(i), prefs});
  }
  e.delete_limit = static_cast<long long>(rnd_below(rng, nv + 2));
  e.preferred = e.candidates[rnd_below(rng, nc)];
  return e;
}

// --------------------------------------------------------------------------
// Bound-change brute oracle (exact metrics): minimum affordable base cost
// over every disjoint disable/enable pair after which `preferred` wins.

struct BcBruteResult {
  bool yes = false;
  Rational best_base;
};

inline BcBruteResult bound_change_brute(const GeoInstance& inst, const std::string& preferred,
                                        const Rational& budget) {
  std::size_t p = inst.candidate_pos(preferred);
  const std::size_t n = inst.voters.size();
  std::vector<char> participates(n, 0);
  std::vector<char> colocated(n, 0);
  std::vector<Rational> dist(n);
  for (std::size_t i = 0; i < n; ++i) {
    NearestSiteDistance near = nearest_site_distance(inst, inst.voters[i]);
    dist[i] = *near.value;  // exact metrics only
    participates[i] = near.squared <= inst.voters[i].bound * inst.voters[i].bound;
    colocated[i] = near.squared == 0;
  }
  std::vector<std::size_t> disableable, enableable;
  for (std::size_t i = 0; i < n; ++i) {
    if (participates[i] && !colocated[i]) disableable.push_back(i);
    if (!participates[i]) enableable.push_back(i);
  }

  BcBruteResult out;
  for (std::uint64_t dm = 0; dm < (1ULL << disableable.size()); ++dm) {
    for (std::uint64_t em = 0; em < (1ULL << enableable.size()); ++em) {
      Rational base = 0;
      std::vector<char> in(participates.begin(), participates.end());
      bool any_disabled = false;
      for (std::size_t i = 0; i < disableable.size(); ++i) {
        if (dm >> i & 1) {
          std::size_t voter = disableable[i];
          base += inst.voters[voter].bound - dist[voter];
          in[voter] = 0;
          any_disabled = true;
        }
      }
      for (std::size_t i = 0; i < enableable.size(); ++i) {
        if (em >> i & 1) {
          std::size_t voter = enableable[i];
          base += dist[voter] - inst.voters[voter].bound;
          in[voter] = 1;
        }
      }
      bool affordable = any_disabled ? base < budget : base <= budget;
      if (!affordable) continue;
      std::vector<long long> counts(inst.candidates.size(), 0);
      for (std::size_t i = 0; i < n; ++i)
        if (in[i]) ++counts[inst.candidate_pos(inst.voters[i].top())];
      long long best = 0;
      for (long long c : counts) best = std::max(best, c);
      if (counts[p] != best) continue;
      if (!out.yes || base < out.best_base) {
        out.yes = true;
        out.best_base = base;
      }
    }
  }
  return out;
}

inline bool priced_brute(const PricedElection& pe) {
  auto top_counts = [&](const std::vector<char>& del, const std::vector<char>& add) {
    std::map<std::string, long long> counts;
    for (std::size_t i = 0; i < pe.registered.size(); ++i)
      if (!del[i]) ++counts[pe.registered[i].preferences.front()];
    for (std::size_t i = 0; i < pe.unregistered.size(); ++i)
      if (add[i]) ++counts[pe.unregistered[i].preferences.front()];
    return counts;
  };
  for (std::uint64_t dm = 0; dm < (1ULL << pe.registered.size()); ++dm) {
    for (std::uint64_t am = 0; am < (1ULL << pe.unregistered.size()); ++am) {
      Rational cost = 0;
      std::vector<char> del(pe.registered.size(), 0), add(pe.unregistered.size(), 0);
      for (std::size_t i = 0; i < pe.registered.size(); ++i)
        if (dm >> i & 1) {
          del[i] = 1;
          cost += pe.registered[i].cost;
        }
      for (std::size_t i = 0; i < pe.unregistered.size(); ++i)
        if (am >> i & 1) {
          add[i] = 1;
          cost += pe.unregistered[i].cost;
        }
      if (cost > pe.budget) continue;
      auto counts = top_counts(del, add);
      long long best = 0;
      for (const auto& [_, c] : counts) best = std::max(best, c);
      auto it = counts.find(pe.preferred);
      long long mine = it == counts.end() ? 0 : it->second;
      if (mine == best) return true;
    }
  }
  return false;
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace pollctl::test

#endif
