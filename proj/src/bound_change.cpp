#include "pollctl/bound_change.hpp"

#include <algorithm>
#include <map>

#include "pollctl/error.hpp"

namespace pollctl {

namespace {

Rational rat_abs(const Rational& q) { return q < 0 ? -q : q; }

struct VoterGeometry {
  bool participates = false;
  bool co_located = false;  // distance zero: participates at any bound
  Rational squared;
};

std::vector<VoterGeometry> voter_geometry(const GeoInstance& instance) {
  if (instance.sites.empty())
    throw Error(Errc::NO_SITES, "distance-bound change needs at least one polling place");
  std::vector<VoterGeometry> out(instance.voters.size());
  for (std::size_t v = 0; v < instance.voters.size(); ++v) {
    const Voter& voter = instance.voters[v];
    Rational best = squared_distance(instance.metric, voter.location, instance.sites[0].location);
    for (std::size_t s = 1; s < instance.sites.size(); ++s)
      best = std::min(best, squared_distance(instance.metric, voter.location,
                                             instance.sites[s].location));
    out[v].squared = best;
    out[v].co_located = (best == 0);
    out[v].participates = best <= voter.bound * voter.bound;
  }
  return out;
}

template <typename Num>
struct SweepPlan {
  std::vector<std::size_t> disabled;
  std::vector<std::size_t> enabled;
  Num base = Num(0);

  bool better_than(const SweepPlan& other, const GeoInstance& inst) const {
    if (base != other.base) return base < other.base;
    if (disabled.size() != other.disabled.size()) return disabled.size() < other.disabled.size();
    auto ids = [&](const std::vector<std::size_t>& xs) {
      std::vector<std::string> r;
      for (std::size_t i : xs) r.push_back(inst.voters[i].id);
      return r;
    };
    auto da = ids(disabled), db = ids(other.disabled);
    if (da != db) return da < db;
    return ids(enabled) < ids(other.enabled);
  }
};

// Target-score sweep shared by the exact (rational) path and the 50-digit
// Euclidean-plane path.  dist[v] is the nearest-site distance as Num.
template <typename Num>
std::optional<SweepPlan<Num>> sweep(const GeoInstance& instance,
                                    const std::vector<VoterGeometry>& geom,
                                    const std::vector<Num>& dist, std::size_t preferred,
                                    const Num& budget) {
  const std::size_t n_cand = instance.candidates.size();
  std::vector<long long> participating_score(n_cand, 0);
  for (std::size_t v = 0; v < instance.voters.size(); ++v)
    if (geom[v].participates)
      ++participating_score[instance.candidate_pos(instance.voters[v].top())];

  struct Entry {
    Num cost;
    std::size_t voter;
  };
  auto by_cost_then_id = [&](const Entry& a, const Entry& b) {
    if (a.cost != b.cost) return a.cost < b.cost;
    return instance.voters[a.voter].id < instance.voters[b.voter].id;
  };

  std::vector<Entry> enables;  // non-participating voters ranking p first
  std::vector<std::vector<Entry>> disables(n_cand);
  for (std::size_t v = 0; v < instance.voters.size(); ++v) {
    std::size_t top = instance.candidate_pos(instance.voters[v].top());
    Num bound = Num(instance.voters[v].bound);
    if (!geom[v].participates) {
      if (top == preferred) enables.push_back({dist[v] - bound, v});
    } else if (top != preferred && !geom[v].co_located) {
      disables[top].push_back({bound - dist[v], v});
    }
  }
  std::sort(enables.begin(), enables.end(), by_cost_then_id);
  for (auto& pool : disables) std::sort(pool.begin(), pool.end(), by_cost_then_id);

  std::optional<SweepPlan<Num>> best;
  const long long s0 = participating_score[preferred];
  for (long long s = s0; s <= s0 + static_cast<long long>(enables.size()); ++s) {
    SweepPlan<Num> plan;
    for (long long i = 0; i < s - s0; ++i) {
      plan.enabled.push_back(enables[static_cast<std::size_t>(i)].voter);
      plan.base += enables[static_cast<std::size_t>(i)].cost;
    }
    bool feasible = true;
    for (std::size_t c = 0; c < n_cand && feasible; ++c) {
      if (c == preferred) continue;
      long long excess = participating_score[c] - s;
      if (excess <= 0) continue;
      if (excess > static_cast<long long>(disables[c].size())) {
        feasible = false;
        break;
      }
      for (long long i = 0; i < excess; ++i) {
        plan.disabled.push_back(disables[c][static_cast<std::size_t>(i)].voter);
        plan.base += disables[c][static_cast<std::size_t>(i)].cost;
      }
    }
    if (!feasible) continue;
    bool affordable = plan.disabled.empty() ? plan.base <= budget : plan.base < budget;
    if (!affordable) continue;
    if (!best || plan.better_than(*best, instance)) best = std::move(plan);
  }
  return best;
}

std::vector<std::string> voter_ids(const GeoInstance& instance,
                                   const std::vector<std::size_t>& idx) {
  std::vector<std::string> out;
  out.reserve(idx.size());
  for (std::size_t i : idx) out.push_back(instance.voters[i].id);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> prefs_of(const Voter& v) { return v.preferences; }

}  // namespace

NearestSiteDistance nearest_site_distance(const GeoInstance& instance, const Voter& voter) {
  if (instance.sites.empty())
    throw Error(Errc::NO_SITES, "no polling places declared");
  Rational best = squared_distance(instance.metric, voter.location, instance.sites[0].location);
  for (std::size_t s = 1; s < instance.sites.size(); ++s)
    best =
        std::min(best, squared_distance(instance.metric, voter.location, instance.sites[s].location));
  return {best, rational_sqrt_exact(best)};
}

std::optional<BoundChangePlan> solve_distance_bound_change(const GeoInstance& instance,
                                                           const std::string& preferred,
                                                           const Rational& budget) {
  std::size_t p = instance.candidate_pos(preferred);
  if (budget < 0) throw Error(Errc::INVALID_ARGUMENT, "budget must be nonnegative");
  std::vector<VoterGeometry> geom = voter_geometry(instance);

  BoundChangePlan out;
  if (instance.metric.exact()) {
    std::vector<Rational> dist(instance.voters.size());
    for (std::size_t v = 0; v < dist.size(); ++v)
      dist[v] = *rational_sqrt_exact(geom[v].squared);  // exact metrics: always rational
    auto plan = sweep<Rational>(instance, geom, dist, p, budget);
    if (!plan) return std::nullopt;
    out.base_cost = plan->base;
    out.base_cost_exact = true;
    out.disabled = voter_ids(instance, plan->disabled);
    out.enabled = voter_ids(instance, plan->enabled);
  } else {
    std::vector<Float50> dist(instance.voters.size());
    for (std::size_t v = 0; v < dist.size(); ++v) {
      auto exact = rational_sqrt_exact(geom[v].squared);
      dist[v] = exact ? Float50(*exact) : rational_sqrt_approx(geom[v].squared);
    }
    auto plan = sweep<Float50>(instance, geom, dist, p, Float50(budget));
    if (!plan) return std::nullopt;
    out.base_cost = plan->base.convert_to<Rational>();
    out.base_cost_exact = false;
    out.disabled = voter_ids(instance, plan->disabled);
    out.enabled = voter_ids(instance, plan->enabled);
  }
  out.strict = !out.disabled.empty();
  return out;
}

bool plan_makes_preferred_win(const GeoInstance& instance, const BoundChangePlan& plan,
                              const std::string& preferred) {
  std::size_t p = instance.candidate_pos(preferred);
  std::vector<VoterGeometry> geom = voter_geometry(instance);
  std::vector<char> in(instance.voters.size(), 0);
  for (std::size_t v = 0; v < instance.voters.size(); ++v) in[v] = geom[v].participates;
  for (const auto& id : plan.disabled) in[instance.voter_pos(id)] = 0;
  for (const auto& id : plan.enabled) in[instance.voter_pos(id)] = 1;

  std::vector<long long> counts(instance.candidates.size(), 0);
  for (std::size_t v = 0; v < instance.voters.size(); ++v)
    if (in[v]) ++counts[instance.candidate_pos(instance.voters[v].top())];
  long long bestc = 0;
  for (long long c : counts) bestc = std::max(bestc, c);
  return counts[p] == bestc;
}

PricedElection to_priced_control(const GeoInstance& instance, const std::string& preferred,
                                 const Rational& budget) {
  instance.candidate_pos(preferred);
  if (budget < 0) throw Error(Errc::INVALID_ARGUMENT, "budget must be nonnegative");
  if (!instance.metric.exact())
    throw Error(Errc::METRIC_NOT_EXACT,
                "the rational-epsilon construction needs the line or the Manhattan plane");
  std::vector<VoterGeometry> geom = voter_geometry(instance);

  std::vector<Rational> dist(instance.voters.size());
  for (std::size_t v = 0; v < dist.size(); ++v) dist[v] = *rational_sqrt_exact(geom[v].squared);

  // Paper-style bound: 2*eps below every nonzero |d_v - d(x_v, l)| over all
  // voter/site pairs.
  std::optional<Rational> min_change;
  for (const Voter& voter : instance.voters) {
    for (const PollingSite& site : instance.sites) {
      Rational d = *rational_sqrt_exact(
          squared_distance(instance.metric, voter.location, site.location));
      Rational gap = rat_abs(voter.bound - d);
      if (gap == 0) continue;
      if (!min_change || gap < *min_change) min_change = gap;
    }
  }

  // Lattice bound: every achievable plan cost and the budget are multiples of
  // 1/D, so keeping the whole epsilon overhead below 1/(2D) per voter slot
  // makes the rounded instance decide exactly like the original.
  std::vector<Rational> amounts{budget};
  for (std::size_t v = 0; v < instance.voters.size(); ++v)
    amounts.push_back(rat_abs(instance.voters[v].bound - dist[v]));
  BigInt d_common = common_denominator(amounts);
  const long long n = std::max<long long>(static_cast<long long>(instance.voters.size()), 1);

  Rational eps = Rational(1) / (Rational(2 * n) * Rational(d_common));
  if (min_change && *min_change / 4 < eps) eps = *min_change / 4;

  PricedElection pe;
  pe.candidates = instance.candidates;
  pe.preferred = preferred;
  pe.budget = budget + eps + eps / (4 * n);
  const Rational pad = eps / (2 * n);

  for (std::size_t v = 0; v < instance.voters.size(); ++v) {
    const Voter& voter = instance.voters[v];
    if (geom[v].participates) {
      Rational cost = geom[v].co_located ? Rational(pe.budget + 1)
                                         : Rational((voter.bound - dist[v]) + eps + pad);
      pe.registered.push_back({voter.id, prefs_of(voter), cost});
    } else {
      pe.unregistered.push_back({voter.id, prefs_of(voter), (dist[v] - voter.bound) + pad});
    }
  }
  return pe;
}

std::optional<PricedPlan> solve_priced_add_delete(const PricedElection& pe) {
  if (pe.candidates.empty())
    throw Error(Errc::MALFORMED_DOCUMENT, "priced election needs candidates");
  auto cand_pos = [&](const std::string& id) {
    for (std::size_t i = 0; i < pe.candidates.size(); ++i)
      if (pe.candidates[i] == id) return i;
    throw Error(Errc::UNKNOWN_CANDIDATE, "unknown candidate '" + id + "'");
  };
  const std::size_t p = cand_pos(pe.preferred);
  for (const auto& v : pe.registered)
    if (v.cost < 0) throw Error(Errc::MALFORMED_DOCUMENT, "negative cost for '" + v.id + "'");
  for (const auto& v : pe.unregistered)
    if (v.cost < 0) throw Error(Errc::MALFORMED_DOCUMENT, "negative cost for '" + v.id + "'");

  const std::size_t n_cand = pe.candidates.size();
  std::vector<long long> score(n_cand, 0);
  std::vector<std::vector<const PricedVoter*>> deletable(n_cand);
  for (const auto& v : pe.registered) {
    std::size_t top = cand_pos(v.preferences.front());
    ++score[top];
    if (top != p) deletable[top].push_back(&v);
  }
  std::vector<const PricedVoter*> addable;
  for (const auto& v : pe.unregistered)
    if (cand_pos(v.preferences.front()) == p) addable.push_back(&v);

  auto by_cost_then_id = [](const PricedVoter* a, const PricedVoter* b) {
    if (a->cost != b->cost) return a->cost < b->cost;
    return a->id < b->id;
  };
  for (auto& pool : deletable) std::sort(pool.begin(), pool.end(), by_cost_then_id);
  std::sort(addable.begin(), addable.end(), by_cost_then_id);

  std::optional<PricedPlan> best;
  const long long s0 = score[p];
  for (long long s = s0; s <= s0 + static_cast<long long>(addable.size()); ++s) {
    PricedPlan plan;
    plan.total_cost = 0;
    for (long long i = 0; i < s - s0; ++i) {
      plan.additions.push_back(addable[static_cast<std::size_t>(i)]->id);
      plan.total_cost += addable[static_cast<std::size_t>(i)]->cost;
    }
    for (std::size_t c = 0; c < n_cand; ++c) {
      if (c == p) continue;
      long long excess = score[c] - s;
      for (long long i = 0; i < excess; ++i) {
        plan.deletions.push_back(deletable[c][static_cast<std::size_t>(i)]->id);
        plan.total_cost += deletable[c][static_cast<std::size_t>(i)]->cost;
      }
    }
    if (plan.total_cost > pe.budget) continue;
    std::sort(plan.additions.begin(), plan.additions.end());
    std::sort(plan.deletions.begin(), plan.deletions.end());
    if (!best || plan.total_cost < best->total_cost ||
        (plan.total_cost == best->total_cost &&
         std::make_pair(plan.deletions, plan.additions) <
             std::make_pair(best->deletions, best->additions)))
      best = std::move(plan);
  }
  return best;
}

}  // namespace pollctl
