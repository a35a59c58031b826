#ifndef POLLCTL_GEO_HPP
#define POLLCTL_GEO_HPP

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "pollctl/rational.hpp"

namespace pollctl {

enum class Norm { EUCLIDEAN, MANHATTAN };

struct MetricDescriptor {
  int dimension = 2;  // 1 or 2
  Norm norm = Norm::EUCLIDEAN;

  // Distances themselves stay rational (no square roots needed): the line in
  // either norm, and Manhattan in the plane.
  bool exact() const { return dimension == 1 || norm == Norm::MANHATTAN; }

  bool operator==(const MetricDescriptor&) const = default;
};

struct Point {
  std::vector<Rational> coords;

  bool operator==(const Point&) const = default;
};

Point make_point(Rational x);
Point make_point(Rational x, Rational y);

struct Voter {
  std::string id;
  Point location;
  Rational bound;                        // d_v, nonnegative
  std::vector<std::string> preferences;  // strict order, best first

  const std::string& top() const { return preferences.front(); }

  bool operator==(const Voter&) const = default;
};

struct PollingSite {
  std::string id;
  Point location;

  bool operator==(const PollingSite&) const = default;
};

struct GeoInstance {
  MetricDescriptor metric;
  std::vector<std::string> candidates;  // declaration order fixes score indices
  std::vector<Voter> voters;
  std::vector<PollingSite> sites;

  std::size_t candidate_pos(const std::string& id) const;  // throws UNKNOWN_CANDIDATE
  std::size_t site_pos(const std::string& id) const;       // throws UNKNOWN_SITE
  std::size_t voter_pos(const std::string& id) const;      // throws UNKNOWN_VOTER

  bool operator==(const GeoInstance&) const = default;
};

// Checks every structural invariant (unique ids, dimensions, preference
// permutations, nonnegative bounds).  Throws on the first violation.
void validate_instance(const GeoInstance& instance);

enum class ControlMode { CONSTRUCTIVE, DESTRUCTIVE };

struct ControlQuery {
  ControlMode mode = ControlMode::CONSTRUCTIVE;
  std::string target;
  long long min_sites = 0;  // k: lower bound on |L'|

  bool operator==(const ControlQuery&) const = default;
};

struct Selection {
  std::vector<std::string> site_ids;  // stored sorted ascending, no duplicates

  static Selection of(std::vector<std::string> ids);
  bool empty() const { return site_ids.empty(); }
  std::size_t size() const { return site_ids.size(); }
};

// Squared distance as an exact rational; Manhattan distances are squared as
// well so that both norms compare against bound^2 the same way.
Rational squared_distance(const MetricDescriptor& metric, const Point& a, const Point& b);

bool can_vote(const MetricDescriptor& metric, const Voter& voter, const PollingSite& site);

std::set<std::string> participating_voters(const GeoInstance& instance, const Selection& sel);

// Precomputed voter-site reachability; every solver works off this table so
// the rational comparisons happen once per instance.
struct ReachTable {
  // reach[v] = site indices (declaration order) within voter v's bound, ascending
  std::vector<std::vector<std::uint32_t>> reach;
  std::vector<std::uint32_t> top_candidate;  // index into instance.candidates
  std::size_t max_reach = 0;

  static ReachTable build(const GeoInstance& instance);
};

struct OverlapGraph {
  // Site-index pairs (i < j, declaration order) joined when some voter can
  // vote at both; sorted ascending.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  std::size_t max_reach = 0;  // most sites any single voter can reach

  bool edgeless() const { return edges.empty(); }
  // Sites incident to at least one overlap edge (the T of the 2^T sweep).
  std::vector<std::uint32_t> overlapping_sites() const;
};

OverlapGraph overlap_graph(const GeoInstance& instance);
OverlapGraph overlap_graph(const GeoInstance& instance, const ReachTable& table);

// Site indices sorted by id; all tie-breaking and subset enumeration uses
// this order so witnesses are deterministic.
std::vector<std::uint32_t> canonical_site_order(const GeoInstance& instance);

}  // namespace pollctl

#endif
