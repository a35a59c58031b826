#ifndef POLLCTL_BOUND_CHANGE_HPP
#define POLLCTL_BOUND_CHANGE_HPP

#include <optional>
#include <string>
#include <vector>

#include "pollctl/geo.hpp"

namespace pollctl {

struct NearestSiteDistance {
  Rational squared;               // exact in every metric
  std::optional<Rational> value;  // the distance itself, when rational
};

// Minimum distance from the voter to any polling place.  Throws NO_SITES.
NearestSiteDistance nearest_site_distance(const GeoInstance& instance, const Voter& voter);

// V' (disabled) pays d_v - dist_v plus an arbitrarily small epsilon per
// voter; W' (enabled) pays dist_v - d_v exactly.  The epsilon never needs a
// concrete value: a plan is affordable iff base_cost < budget when V' is
// nonempty and base_cost <= budget otherwise.
struct BoundChangePlan {
  std::vector<std::string> disabled;  // V': participating voters switched off
  std::vector<std::string> enabled;   // W': non-participating voters brought in
  Rational base_cost;
  bool base_cost_exact = true;  // false on the Euclidean plane (50-digit arithmetic)
  bool strict = false;          // true iff disabled is nonempty
};

// Cheapest affordable plan making `preferred` a plurality winner, or absent.
// Voters co-located with a site participate at any bound and cannot be
// disabled.  Exact on the line and under Manhattan; the Euclidean plane runs
// on 50-digit floats (boundary-tight budgets there are the caller's risk).
std::optional<BoundChangePlan> solve_distance_bound_change(const GeoInstance& instance,
                                                           const std::string& preferred,
                                                           const Rational& budget);

// Re-simulates participation with the plan applied (disabled out, enabled
// in) and checks that `preferred` wins.
bool plan_makes_preferred_win(const GeoInstance& instance, const BoundChangePlan& plan,
                              const std::string& preferred);

struct PricedVoter {
  std::string id;
  std::vector<std::string> preferences;
  Rational cost;
};

struct PricedElection {
  std::vector<std::string> candidates;
  std::string preferred;
  Rational budget;
  std::vector<PricedVoter> registered;    // may be deleted at cost
  std::vector<PricedVoter> unregistered;  // may be added at cost
};

// Rationalized reduction to priced add/delete control.  Exact metrics only
// (METRIC_NOT_EXACT otherwise).  Picks a concrete epsilon small enough that
// the priced verdict provably equals the distance-bound-change verdict:
// besides keeping 2*eps below every nonzero |d_v - dist(x_v, l)|, eps stays
// below 1/(2*D*|V|) where D is a common denominator of the budget and all
// change amounts, so no epsilon bookkeeping can cross a lattice gap.
PricedElection to_priced_control(const GeoInstance& instance, const std::string& preferred,
                                 const Rational& budget);

struct PricedPlan {
  std::vector<std::string> deletions;
  std::vector<std::string> additions;
  Rational total_cost;
};

// Plurality target-score sweep: for each final score s of the preferred
// candidate, add the cheapest unregistered supporters up to s and delete the
// cheapest excess voters of every rival above s.  Adding voters who rank
// someone else first is never beneficial and never done.
std::optional<PricedPlan> solve_priced_add_delete(const PricedElection& pe);

}  // namespace pollctl

#endif
