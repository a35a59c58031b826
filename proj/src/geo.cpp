#include "pollctl/geo.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "pollctl/error.hpp"

namespace pollctl {

namespace {

std::size_t find_id(const std::vector<std::string>& ids, const std::string& id, Errc code,
                    const char* what) {
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (ids[i] == id) return i;
  }
  throw Error(code, std::string(what) + " '" + id + "' not declared in instance");
}

Rational abs_diff(const Rational& a, const Rational& b) {
  Rational d = a - b;
  if (d < 0) d = -d;
  return d;
}

}  // namespace

Point make_point(Rational x) { return Point{{std::move(x)}}; }
Point make_point(Rational x, Rational y) { return Point{{std::move(x), std::move(y)}}; }

std::size_t GeoInstance::candidate_pos(const std::string& id) const {
  return find_id(candidates, id, Errc::UNKNOWN_CANDIDATE, "candidate");
}

std::size_t GeoInstance::site_pos(const std::string& id) const {
  for (std::size_t i = 0; i < sites.size(); ++i) {
    if (sites[i].id == id) return i;
  }
  throw Error(Errc::UNKNOWN_SITE, "site '" + id + "' not declared in instance");
}

std::size_t GeoInstance::voter_pos(const std::string& id) const {
  for (std::size_t i = 0; i < voters.size(); ++i) {
    if (voters[i].id == id) return i;
  }
  throw Error(Errc::UNKNOWN_VOTER, "voter '" + id + "' not declared in instance");
}

void validate_instance(const GeoInstance& instance) {
  const int dim = instance.metric.dimension;
  if (dim != 1 && dim != 2)
    throw Error(Errc::MALFORMED_DOCUMENT, "metric dimension must be 1 or 2");
  if (instance.candidates.empty())
    throw Error(Errc::MALFORMED_DOCUMENT, "instance needs at least one candidate");

  std::unordered_set<std::string> seen;
  for (const auto& c : instance.candidates) {
    if (!seen.insert(c).second)
      throw Error(Errc::MALFORMED_DOCUMENT, "duplicate candidate id '" + c + "'");
  }

  seen.clear();
  for (const Voter& v : instance.voters) {
    if (!seen.insert(v.id).second)
      throw Error(Errc::MALFORMED_DOCUMENT, "duplicate voter id '" + v.id + "'");
    if (v.location.coords.size() != static_cast<std::size_t>(dim))
      throw Error(Errc::DIMENSION_MISMATCH,
                  "voter '" + v.id + "' location does not match metric dimension");
    if (v.bound < 0)
      throw Error(Errc::NEGATIVE_BOUND, "voter '" + v.id + "' has a negative distance-bound");
    if (v.preferences.size() != instance.candidates.size())
      throw Error(Errc::MALFORMED_DOCUMENT,
                  "voter '" + v.id + "' preferences are not a permutation of the candidates");
    std::unordered_set<std::string> prefs;
    for (const auto& c : v.preferences) {
      if (std::find(instance.candidates.begin(), instance.candidates.end(), c) ==
          instance.candidates.end())
        throw Error(Errc::UNKNOWN_CANDIDATE,
                    "voter '" + v.id + "' ranks unknown candidate '" + c + "'");
      if (!prefs.insert(c).second)
        throw Error(Errc::MALFORMED_DOCUMENT,
                    "voter '" + v.id + "' ranks candidate '" + c + "' twice");
    }
  }

  seen.clear();
  for (const PollingSite& s : instance.sites) {
    if (!seen.insert(s.id).second)
      throw Error(Errc::MALFORMED_DOCUMENT, "duplicate site id '" + s.id + "'");
    if (s.location.coords.size() != static_cast<std::size_t>(dim))
      throw Error(Errc::DIMENSION_MISMATCH,
                  "site '" + s.id + "' location does not match metric dimension");
  }
}

Selection Selection::of(std::vector<std::string> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return Selection{std::move(ids)};
}

Rational squared_distance(const MetricDescriptor& metric, const Point& a, const Point& b) {
  const auto dim = static_cast<std::size_t>(metric.dimension);
  if (a.coords.size() != dim || b.coords.size() != dim)
    throw Error(Errc::DIMENSION_MISMATCH, "point dimension does not match metric");
  if (metric.norm == Norm::EUCLIDEAN) {
    Rational acc = 0;
    for (std::size_t i = 0; i < dim; ++i) {
      Rational d = a.coords[i] - b.coords[i];
      acc += d * d;
    }
    return acc;
  }
  Rational acc = 0;
  for (std::size_t i = 0; i < dim; ++i) acc += abs_diff(a.coords[i], b.coords[i]);
  return acc * acc;
}

bool can_vote(const MetricDescriptor& metric, const Voter& voter, const PollingSite& site) {
  return squared_distance(metric, voter.location, site.location) <= voter.bound * voter.bound;
}

std::set<std::string> participating_voters(const GeoInstance& instance, const Selection& sel) {
  std::vector<std::size_t> chosen;
  chosen.reserve(sel.site_ids.size());
  for (const auto& id : sel.site_ids) chosen.push_back(instance.site_pos(id));

  std::set<std::string> out;
  for (const Voter& v : instance.voters) {
    for (std::size_t s : chosen) {
      if (can_vote(instance.metric, v, instance.sites[s])) {
        out.insert(v.id);
        break;
      }
    }
  }
  return out;
}

ReachTable ReachTable::build(const GeoInstance& instance) {
  ReachTable t;
  t.reach.resize(instance.voters.size());
  t.top_candidate.resize(instance.voters.size());

  std::unordered_map<std::string, std::uint32_t> cand_index;
  for (std::size_t i = 0; i < instance.candidates.size(); ++i)
    cand_index[instance.candidates[i]] = static_cast<std::uint32_t>(i);

  for (std::size_t v = 0; v < instance.voters.size(); ++v) {
    const Voter& voter = instance.voters[v];
    t.top_candidate[v] = cand_index.at(voter.top());
    Rational bound_sq = voter.bound * voter.bound;
    for (std::size_t s = 0; s < instance.sites.size(); ++s) {
      if (squared_distance(instance.metric, voter.location, instance.sites[s].location) <=
          bound_sq)
        t.reach[v].push_back(static_cast<std::uint32_t>(s));
    }
    t.max_reach = std::max(t.max_reach, t.reach[v].size());
  }
  return t;
}

OverlapGraph overlap_graph(const GeoInstance& instance) {
  return overlap_graph(instance, ReachTable::build(instance));
}

OverlapGraph overlap_graph(const GeoInstance& instance, const ReachTable& table) {
  (void)instance;
  OverlapGraph g;
  g.max_reach = table.max_reach;
  std::set<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (const auto& sites : table.reach) {
    for (std::size_t i = 0; i < sites.size(); ++i)
      for (std::size_t j = i + 1; j < sites.size(); ++j)
        edges.emplace(sites[i], sites[j]);
  }
  g.edges.assign(edges.begin(), edges.end());
  return g;
}

std::vector<std::uint32_t> OverlapGraph::overlapping_sites() const {
  std::set<std::uint32_t> t;
  for (const auto& [a, b] : edges) {
    t.insert(a);
    t.insert(b);
  }
  return {t.begin(), t.end()};
}

std::vector<std::uint32_t> canonical_site_order(const GeoInstance& instance) {
  std::vector<std::uint32_t> order(instance.sites.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<std::uint32_t>(i);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return instance.sites[a].id < instance.sites[b].id;
  });
  return order;
}

}  // namespace pollctl
