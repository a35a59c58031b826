#include "pollctl/reductions.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "pollctl/error.hpp"
#include "pollctl/exact_json.hpp"

namespace pollctl {

namespace {

Rational rat_abs(const Rational& q) { return q < 0 ? -q : q; }

bool is_integer(const Rational& q) { return denominator(q) == 1; }

struct Segment {
  Rational x1, y1, x2, y2;  // endpoints, normalized so (x1,y1) <= (x2,y2)
  bool horizontal;
};

Segment edge_segment(const GridGraph& g, std::size_t e) {
  const Point& a = g.vertices[g.vertex_pos(g.edges[e].first)].location;
  const Point& b = g.vertices[g.vertex_pos(g.edges[e].second)].location;
  Segment s{a.coords[0], a.coords[1], b.coords[0], b.coords[1], false};
  if (s.y1 == s.y2) {
    s.horizontal = true;
    if (s.x1 > s.x2) std::swap(s.x1, s.x2);
  } else {
    if (s.y1 > s.y2) std::swap(s.y1, s.y2);
  }
  return s;
}

bool endpoint_of(const Segment& s, const Rational& x, const Rational& y) {
  return (x == s.x1 && y == s.y1) || (x == s.x2 && y == s.y2);
}

void check_pair(const Segment& a, const Segment& b, std::size_t ea, std::size_t eb) {
  auto fail = [&] {
    throw Error(Errc::MALFORMED_GRAPH, "edges " + std::to_string(ea) + " and " +
                                           std::to_string(eb) +
                                           " intersect away from a shared endpoint");
  };
  if (a.horizontal && b.horizontal) {
    if (a.y1 != b.y1) return;
    Rational lo = std::max(a.x1, b.x1), hi = std::min(a.x2, b.x2);
    if (lo > hi) return;
    if (lo < hi) fail();  // collinear overlap
    if (!endpoint_of(a, lo, a.y1) || !endpoint_of(b, lo, b.y1)) fail();
  } else if (!a.horizontal && !b.horizontal) {
    if (a.x1 != b.x1) return;
    Rational lo = std::max(a.y1, b.y1), hi = std::min(a.y2, b.y2);
    if (lo > hi) return;
    if (lo < hi) fail();
    if (!endpoint_of(a, a.x1, lo) || !endpoint_of(b, b.x1, lo)) fail();
  } else {
    const Segment& h = a.horizontal ? a : b;
    const Segment& v = a.horizontal ? b : a;
    if (v.x1 < h.x1 || v.x1 > h.x2 || h.y1 < v.y1 || h.y1 > v.y2) return;
    if (!endpoint_of(h, v.x1, h.y1) || !endpoint_of(v, v.x1, h.y1)) fail();
  }
}

std::string fresh_id(std::unordered_set<std::string>& used, long long& counter) {
  for (;;) {
    std::string id = "w" + std::to_string(++counter);
    if (used.insert(id).second) return id;
  }
}

Point lerp(const Point& a, const Point& b, const Rational& t) {
  return Point{{a.coords[0] + (b.coords[0] - a.coords[0]) * t,
                a.coords[1] + (b.coords[1] - a.coords[1]) * t}};
}

bool lex_less(const Point& a, const Point& b) {
  if (a.coords[0] != b.coords[0]) return a.coords[0] < b.coords[0];
  return a.coords[1] < b.coords[1];
}

std::vector<std::string> prefs_with_top(const std::vector<std::string>& candidates,
                                        const std::string& top) {
  std::vector<std::string> prefs{top};
  for (const auto& c : candidates)
    if (c != top) prefs.push_back(c);
  return prefs;
}

void validate_std_election(const StdElection& e) {
  if (e.candidates.empty())
    throw Error(Errc::MALFORMED_DOCUMENT, "election needs at least one candidate");
  std::unordered_set<std::string> seen(e.candidates.begin(), e.candidates.end());
  if (seen.size() != e.candidates.size())
    throw Error(Errc::MALFORMED_DOCUMENT, "duplicate candidate id");
  if (e.delete_limit < 0)
    throw Error(Errc::MALFORMED_DOCUMENT, "delete limit must be nonnegative");
  if (!seen.count(e.preferred))
    throw Error(Errc::UNKNOWN_CANDIDATE, "preferred candidate '" + e.preferred + "' not declared");
  std::unordered_set<std::string> voter_ids;
  for (const StdVoter& v : e.voters) {
    if (!voter_ids.insert(v.id).second)
      throw Error(Errc::MALFORMED_DOCUMENT, "duplicate voter id '" + v.id + "'");
    if (v.preferences.size() != e.candidates.size())
      throw Error(Errc::MALFORMED_DOCUMENT,
                  "voter '" + v.id + "' preferences are not a permutation of the candidates");
    std::unordered_set<std::string> prefs;
    for (const auto& c : v.preferences) {
      if (!seen.count(c))
        throw Error(Errc::UNKNOWN_CANDIDATE, "voter '" + v.id + "' ranks unknown '" + c + "'");
      if (!prefs.insert(c).second)
        throw Error(Errc::MALFORMED_DOCUMENT, "voter '" + v.id + "' ranks '" + c + "' twice");
    }
  }
}

// Plurality winner check under the nonunique-winner model; an empty
// electorate makes everyone a winner at score zero.
bool preferred_wins(const std::vector<std::string>& candidates,
                    const std::vector<const StdVoter*>& voters, const std::string& preferred) {
  std::unordered_map<std::string, long long> counts;
  for (const StdVoter* v : voters) ++counts[v->preferences.front()];
  long long best = 0;
  for (const auto& [_, c] : counts) best = std::max(best, c);
  auto it = counts.find(preferred);
  long long mine = it == counts.end() ? 0 : it->second;
  (void)candidates;
  return mine == best;
}

bool next_combination_idx(std::vector<std::size_t>& c, std::size_t n) {
  std::size_t s = c.size();
  for (std::size_t i = s; i-- > 0;) {
    if (c[i] < n - s + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < s; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::size_t GridGraph::vertex_pos(const std::string& id) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i].id == id) return i;
  throw Error(Errc::MALFORMED_GRAPH, "unknown vertex id '" + id + "'");
}

void validate_grid_graph(const GridGraph& g) {
  std::unordered_set<std::string> ids;
  std::set<std::pair<std::string, std::string>> locations_seen;
  for (const GridVertex& v : g.vertices) {
    if (!ids.insert(v.id).second)
      throw Error(Errc::MALFORMED_GRAPH, "duplicate vertex id '" + v.id + "'");
    if (v.location.coords.size() != 2)
      throw Error(Errc::MALFORMED_GRAPH, "vertex '" + v.id + "' must have a 2-d location");
  }
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < g.vertices.size(); ++j)
      if (g.vertices[i].location == g.vertices[j].location)
        throw Error(Errc::MALFORMED_GRAPH, "vertices '" + g.vertices[i].id + "' and '" +
                                               g.vertices[j].id + "' share a location");

  std::unordered_map<std::string, int> degree;
  std::set<std::pair<std::string, std::string>> edge_keys;
  for (const auto& [u, v] : g.edges) {
    if (u == v) throw Error(Errc::MALFORMED_GRAPH, "self-loop at '" + u + "'");
    const Point& pu = g.vertices[g.vertex_pos(u)].location;
    const Point& pv = g.vertices[g.vertex_pos(v)].location;
    bool horizontal = pu.coords[1] == pv.coords[1] && pu.coords[0] != pv.coords[0];
    bool vertical = pu.coords[0] == pv.coords[0] && pu.coords[1] != pv.coords[1];
    if (!horizontal && !vertical)
      throw Error(Errc::MALFORMED_GRAPH, "edge (" + u + "," + v + ") is not axis-aligned");
    auto key = std::minmax(u, v);
    if (!edge_keys.insert(key).second)
      throw Error(Errc::MALFORMED_GRAPH, "duplicate edge (" + u + "," + v + ")");
    if (++degree[u] > 3 || ++degree[v] > 3)
      throw Error(Errc::MALFORMED_GRAPH, "graph is not cubic: degree above 3");
  }

  std::vector<Segment> segments;
  segments.reserve(g.edges.size());
  for (std::size_t e = 0; e < g.edges.size(); ++e) segments.push_back(edge_segment(g, e));

  for (std::size_t e = 0; e < segments.size(); ++e) {
    const Segment& s = segments[e];
    for (const GridVertex& w : g.vertices) {
      if (w.id == g.edges[e].first || w.id == g.edges[e].second) continue;
      const Rational& wx = w.location.coords[0];
      const Rational& wy = w.location.coords[1];
      bool interior = s.horizontal ? (wy == s.y1 && s.x1 < wx && wx < s.x2)
                                   : (wx == s.x1 && s.y1 < wy && wy < s.y2);
      if (interior)
        throw Error(Errc::MALFORMED_GRAPH,
                    "vertex '" + w.id + "' lies in the interior of an edge");
    }
  }
  for (std::size_t i = 0; i < segments.size(); ++i)
    for (std::size_t j = i + 1; j < segments.size(); ++j)
      check_pair(segments[i], segments[j], i, j);
}

void validate_restricted_graph(const GridGraph& g) {
  validate_grid_graph(g);
  const Rational one(1), three_halves(3, 2);
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    Segment s = edge_segment(g, e);
    Rational len = s.horizontal ? s.x2 - s.x1 : s.y2 - s.y1;
    if (len != one && len != three_halves)
      throw Error(Errc::MALFORMED_GRAPH, "edge lengths must be exactly 1 or 3/2");
    const Rational& line = s.horizontal ? s.y1 : s.x1;
    if (!is_integer(line))
      throw Error(Errc::MALFORMED_GRAPH, "edges must lie on integer gridlines");
  }
}

SubdivisionResult subdivide_rectilinear(const GridGraph& g, long long k) {
  validate_grid_graph(g);
  for (const GridVertex& v : g.vertices)
    if (!is_integer(v.location.coords[0]) || !is_integer(v.location.coords[1]))
      throw Error(Errc::MALFORMED_GRAPH, "subdivision requires integer vertex coordinates");

  SubdivisionResult out;
  std::unordered_set<std::string> used;
  for (const GridVertex& v : g.vertices) used.insert(v.id);
  long long counter = 0;

  const Rational three(3);
  for (const GridVertex& v : g.vertices)
    out.graph.vertices.push_back(
        {v.id, Point{{v.location.coords[0] * three, v.location.coords[1] * three}}});

  long long t = 0;
  for (const auto& [u, v] : g.edges) {
    const Point& pu = g.vertices[g.vertex_pos(u)].location;
    const Point& pv = g.vertices[g.vertex_pos(v)].location;
    bool u_first = lex_less(pu, pv);
    const Point& a = u_first ? pu : pv;
    const Point& b = u_first ? pv : pu;
    const std::string& a_id = u_first ? u : v;
    const std::string& b_id = u_first ? v : u;

    Rational len = rat_abs(b.coords[0] - a.coords[0]) + rat_abs(b.coords[1] - a.coords[1]);
    long long length = numerator(len).convert_to<long long>();

    // integer gridline crossings, then the parity midpoint next to the
    // lexicographically smaller endpoint when the crossing count is odd
    std::vector<Rational> breaks;
    for (long long i = 0; i <= length; ++i) breaks.emplace_back(i);
    if (length % 2 == 0) breaks.emplace_back(1, 2);
    std::sort(breaks.begin(), breaks.end());

    std::vector<Rational> refined;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
      refined.push_back(breaks[i]);
      if (breaks[i + 1] - breaks[i] == 1) {
        refined.push_back(breaks[i] + Rational(1, 3));
        refined.push_back(breaks[i] + Rational(2, 3));
      }
    }
    refined.push_back(breaks.back());

    std::string prev = a_id;
    for (std::size_t i = 1; i + 1 < refined.size(); ++i) {
      Point pos = lerp(a, b, refined[i] / len);
      std::string id = fresh_id(used, counter);
      out.graph.vertices.push_back(
          {id, Point{{pos.coords[0] * three, pos.coords[1] * three}}});
      out.graph.edges.emplace_back(prev, id);
      prev = id;
      ++t;
    }
    out.graph.edges.emplace_back(prev, b_id);
  }

  if (t % 2 != 0) throw std::logic_error("subdivision produced an odd vertex count");
  out.added_vertices = t;
  out.k_hat = k + t / 2;
  validate_restricted_graph(out.graph);
  return out;
}

VcReduction vc_to_ppc(const GridGraph& restricted, long long k) {
  validate_restricted_graph(restricted);
  if (k < 0) throw Error(Errc::INVALID_ARGUMENT, "cover size must be nonnegative");

  VcReduction out;
  GeoInstance& inst = out.instance;
  // Manhattan keeps every relevant distance on the gridlines: under the
  // Euclidean norm a site r-voter sitting 1/4 from a shared vertex would
  // diagonally reach the perpendicular edge's near site (sqrt(1/8) < 3/8)
  // and the vote counting would no longer close.
  inst.metric = {2, Norm::MANHATTAN};
  inst.candidates = {"p", "r"};
  const std::vector<std::string> r_prefs{"r", "p"};
  const std::vector<std::string> p_prefs{"p", "r"};
  const Rational bound(3, 8);

  for (const GridVertex& v : restricted.vertices)
    inst.voters.push_back({"r_at_" + v.id, v.location, bound, r_prefs});

  for (std::size_t e = 0; e < restricted.edges.size(); ++e) {
    const auto& [u, v] = restricted.edges[e];
    const Point& pu = restricted.vertices[restricted.vertex_pos(u)].location;
    const Point& pv = restricted.vertices[restricted.vertex_pos(v)].location;
    bool u_first = lex_less(pu, pv);
    const Point& a = u_first ? pu : pv;
    const Point& b = u_first ? pv : pu;
    const std::string& near_a = u_first ? u : v;
    const std::string& near_b = u_first ? v : u;
    std::string tag = std::to_string(e);

    inst.voters.push_back({"p" + tag, lerp(a, b, Rational(1, 2)), bound, p_prefs});
    inst.sites.push_back({"s" + tag + "a", lerp(a, b, Rational(1, 4))});
    inst.voters.push_back({"r" + tag + "a", lerp(a, b, Rational(1, 4)), bound, r_prefs});
    inst.sites.push_back({"s" + tag + "b", lerp(a, b, Rational(3, 4))});
    inst.voters.push_back({"r" + tag + "b", lerp(a, b, Rational(3, 4)), bound, r_prefs});

    out.site_map["s" + tag + "a"] = {false, u, v, near_a};
    out.site_map["s" + tag + "b"] = {false, u, v, near_b};
  }

  // Far site: 3 units left of the bounding box clears 3/2 in both norms.
  Rational min_x = 0, min_y = 0;
  if (!restricted.vertices.empty()) {
    min_x = restricted.vertices.front().location.coords[0];
    min_y = restricted.vertices.front().location.coords[1];
    for (const GridVertex& v : restricted.vertices) {
      min_x = std::min(min_x, v.location.coords[0]);
      min_y = std::min(min_y, v.location.coords[1]);
    }
  }
  Point qhat{{min_x - 3, min_y}};
  inst.sites.push_back({"qhat", qhat});
  out.site_map["qhat"] = {true, "", "", ""};
  for (long long i = 1; i <= k; ++i)
    inst.voters.push_back({"pq" + std::to_string(i), qhat, bound, p_prefs});

  out.query = {ControlMode::CONSTRUCTIVE, "p",
               static_cast<long long>(restricted.edges.size()) + 1};
  validate_instance(inst);
  return out;
}

void validate_x3c(const X3CInstance& x) {
  if (x.ground.size() % 3 != 0)
    throw Error(Errc::MALFORMED_DOCUMENT, "ground set size must be a multiple of 3");
  std::unordered_set<std::string> ground(x.ground.begin(), x.ground.end());
  if (ground.size() != x.ground.size())
    throw Error(Errc::MALFORMED_DOCUMENT, "duplicate ground element");
  for (const auto& s : x.sets) {
    if (s[0] == s[1] || s[0] == s[2] || s[1] == s[2])
      throw Error(Errc::MALFORMED_DOCUMENT, "sets must contain three distinct elements");
    for (const auto& b : s)
      if (!ground.count(b))
        throw Error(Errc::MALFORMED_DOCUMENT, "set element '" + b + "' not in the ground set");
  }
}

X3CReduction x3c_to_ppc(const X3CInstance& x) {
  validate_x3c(x);
  const long long k = x.k();
  if (k < 2) throw Error(Errc::K_TOO_SMALL, "the construction needs |B|/3 >= 2");
  for (const auto& b : x.ground)
    if (b == "p")
      throw Error(Errc::MALFORMED_DOCUMENT, "'p' is reserved for the preferred candidate");

  X3CReduction out;
  GeoInstance& inst = out.instance;
  inst.metric = {1, Norm::EUCLIDEAN};
  inst.candidates = x.ground;
  inst.candidates.push_back("p");
  const Rational bound(1, 2);

  for (std::size_t i = 0; i < x.sets.size(); ++i) {
    std::string site_id = "S" + std::to_string(i + 1);
    Point at = make_point(Rational(static_cast<long long>(i + 1)));
    inst.sites.push_back({site_id, at});
    out.site_to_set[site_id] = i;

    std::map<std::string, long long> serial;  // per-site voter numbering per candidate
    auto add_voters = [&](const std::string& top, long long count) {
      for (long long j = 0; j < count; ++j)
        inst.voters.push_back({"v" + std::to_string(i + 1) + "_" + top + "_" +
                                   std::to_string(++serial[top]),
                               at, bound, prefs_with_top(inst.candidates, top)});
    };
    for (const auto& b : x.ground) add_voters(b, k - 2);
    for (const auto& b : x.sets[i]) add_voters(b, k);
    add_voters("p", k - 1);
  }

  out.query = {ControlMode::CONSTRUCTIVE, "p", k};
  validate_instance(inst);
  return out;
}

GeoDeletionInstance std_deleting_voters_to_geo(const StdElection& e) {
  validate_std_election(e);
  GeoDeletionInstance out;
  out.delete_limit = e.delete_limit;
  out.preferred = e.preferred;
  out.instance.metric = {2, Norm::EUCLIDEAN};
  out.instance.candidates = e.candidates;
  const Rational bound(1, 2);
  for (std::size_t i = 0; i < e.voters.size(); ++i) {
    Point at = make_point(Rational(0), Rational(static_cast<long long>(i + 1)));
    out.instance.voters.push_back({e.voters[i].id, at, bound, e.voters[i].preferences});
    out.instance.sites.push_back({"pl" + std::to_string(i + 1), at});
  }
  validate_instance(out.instance);
  return out;
}

StdElection geo_deleting_voters_to_std(const GeoInstance& instance, long long delete_limit,
                                       const std::string& preferred) {
  validate_instance(instance);
  instance.candidate_pos(preferred);
  StdElection out;
  out.candidates = instance.candidates;
  out.delete_limit = delete_limit;
  out.preferred = preferred;
  ReachTable table = ReachTable::build(instance);
  for (std::size_t v = 0; v < instance.voters.size(); ++v)
    if (!table.reach[v].empty())
      out.voters.push_back({instance.voters[v].id, instance.voters[v].preferences});
  return out;
}

std::pair<std::size_t, std::vector<std::string>> min_vertex_cover(const GridGraph& g) {
  const std::size_t n = g.vertices.size();
  std::vector<std::set<int>> adj(n);
  for (const auto& [u, v] : g.edges) {
    int a = static_cast<int>(g.vertex_pos(u));
    int b = static_cast<int>(g.vertex_pos(v));
    adj[a].insert(b);
    adj[b].insert(a);
  }

  // greedy upper bound: repeatedly cover with the max-degree vertex
  std::vector<int> best_cover;
  {
    auto work = adj;
    for (;;) {
      int pivot = -1;
      std::size_t maxd = 0;
      for (int u = 0; u < static_cast<int>(n); ++u)
        if (work[u].size() > maxd) {
          maxd = work[u].size();
          pivot = u;
        }
      if (pivot < 0) break;
      best_cover.push_back(pivot);
      for (int w : work[pivot]) work[w].erase(pivot);
      work[pivot].clear();
    }
  }
  std::size_t best_size = best_cover.size();

  constexpr std::uint64_t kNodeCap = 4'000'000;
  std::uint64_t nodes = 0;

  auto matching_bound = [](const std::vector<std::set<int>>& a) {
    std::vector<char> matched(a.size(), 0);
    std::size_t m = 0;
    for (int u = 0; u < static_cast<int>(a.size()); ++u) {
      if (matched[u]) continue;
      for (int v : a[u]) {
        if (!matched[v]) {
          matched[u] = matched[v] = 1;
          ++m;
          break;
        }
      }
    }
    return m;
  };

  std::function<void(std::vector<std::set<int>>, std::vector<int>)> search =
      [&](std::vector<std::set<int>> a, std::vector<int> cover) {
        if (++nodes > kNodeCap)
          throw Error(Errc::INSTANCE_TOO_LARGE, "vertex cover search exceeded its work cap");

        auto take = [&](int v) {
          cover.push_back(v);
          for (int w : a[v]) a[w].erase(v);
          a[v].clear();
        };

        // fold pendant vertices: their neighbor belongs to some minimum cover
        bool changed = true;
        while (changed) {
          changed = false;
          for (int u = 0; u < static_cast<int>(a.size()); ++u) {
            if (a[u].size() == 1) {
              take(*a[u].begin());
              changed = true;
            }
          }
        }
        if (cover.size() >= best_size) return;

        int pivot = -1;
        std::size_t maxd = 0;
        for (int u = 0; u < static_cast<int>(a.size()); ++u)
          if (a[u].size() > maxd) {
            maxd = a[u].size();
            pivot = u;
          }
        if (pivot < 0) {
          best_size = cover.size();
          best_cover = cover;
          return;
        }
        if (cover.size() + matching_bound(a) >= best_size) return;

        {
          auto a2 = a;
          auto c2 = cover;
          c2.push_back(pivot);
          for (int w : a2[pivot]) a2[w].erase(pivot);
          a2[pivot].clear();
          search(std::move(a2), std::move(c2));
        }
        {
          std::vector<int> nbrs(a[pivot].begin(), a[pivot].end());
          auto a2 = std::move(a);
          for (int v : nbrs) {
            cover.push_back(v);
            for (int w : a2[v]) a2[w].erase(v);
            a2[v].clear();
          }
          search(std::move(a2), std::move(cover));
        }
      };
  search(adj, {});

  std::vector<std::string> ids;
  ids.reserve(best_size);
  for (int u : best_cover) ids.push_back(g.vertices[static_cast<std::size_t>(u)].id);
  std::sort(ids.begin(), ids.end());
  return {best_size, ids};
}

VertexCoverResult solve_vertex_cover_brute(const GridGraph& g, long long k) {
  auto [size, cover] = min_vertex_cover(g);
  VertexCoverResult r;
  r.yes = static_cast<long long>(size) <= k;
  if (r.yes) r.witness = cover;
  return r;
}

X3CBruteResult solve_x3c_brute(const X3CInstance& x) {
  validate_x3c(x);
  if (x.sets.size() > 20)
    throw Error(Errc::INSTANCE_TOO_LARGE, "exact cover enumeration capped at 20 sets");
  const std::size_t k = static_cast<std::size_t>(x.k());
  X3CBruteResult r;
  if (k == 0) {
    r.yes = true;
    return r;
  }
  if (x.sets.size() < k) return r;

  std::unordered_map<std::string, int> elem_index;
  for (const auto& b : x.ground) elem_index.emplace(b, static_cast<int>(elem_index.size()));

  std::vector<std::size_t> combo(k);
  for (std::size_t i = 0; i < k; ++i) combo[i] = i;
  do {
    std::vector<char> covered(x.ground.size(), 0);
    bool ok = true;
    for (std::size_t idx : combo) {
      for (const auto& b : x.sets[idx]) {
        char& c = covered[static_cast<std::size_t>(elem_index.at(b))];
        if (c) {
          ok = false;
          break;
        }
        c = 1;
      }
      if (!ok) break;
    }
    if (ok) {  // k disjoint triples cover all 3k elements exactly once
      r.yes = true;
      r.witness = combo;
      return r;
    }
  } while (next_combination_idx(combo, x.sets.size()));
  return r;
}

DeleteBruteResult solve_deleting_voters_brute(const StdElection& e) {
  validate_std_election(e);
  const std::size_t n = e.voters.size();
  if (n > 20)
    throw Error(Errc::INSTANCE_TOO_LARGE, "deleting-voters enumeration capped at 20 voters");
  const std::size_t limit = static_cast<std::size_t>(
      std::min<long long>(e.delete_limit, static_cast<long long>(n)));

  DeleteBruteResult r;
  for (std::size_t s = 0; s <= limit; ++s) {
    std::vector<std::size_t> combo(s);
    for (std::size_t i = 0; i < s; ++i) combo[i] = i;
    bool more = true;
    while (more) {
      std::vector<char> deleted(n, 0);
      for (std::size_t i : combo) deleted[i] = 1;
      std::vector<const StdVoter*> remaining;
      for (std::size_t i = 0; i < n; ++i)
        if (!deleted[i]) remaining.push_back(&e.voters[i]);
      if (preferred_wins(e.candidates, remaining, e.preferred)) {
        r.yes = true;
        for (std::size_t i : combo) r.deleted.push_back(e.voters[i].id);
        return r;
      }
      more = s > 0 && next_combination_idx(combo, n);
    }
  }
  return r;
}

DeleteBruteResult solve_geo_deleting_voters_brute(const GeoInstance& instance, long long limit,
                                                  const std::string& preferred) {
  validate_instance(instance);
  std::size_t target = instance.candidate_pos(preferred);
  const std::size_t n = instance.voters.size();
  if (n > 20)
    throw Error(Errc::INSTANCE_TOO_LARGE, "deleting-voters enumeration capped at 20 voters");
  ReachTable table = ReachTable::build(instance);

  const std::size_t cap =
      static_cast<std::size_t>(std::min<long long>(std::max<long long>(limit, 0),
                                                   static_cast<long long>(n)));
  DeleteBruteResult r;
  for (std::size_t s = 0; s <= cap; ++s) {
    std::vector<std::size_t> combo(s);
    for (std::size_t i = 0; i < s; ++i) combo[i] = i;
    bool more = true;
    while (more) {
      std::vector<char> deleted(n, 0);
      for (std::size_t i : combo) deleted[i] = 1;
      std::vector<long long> counts(instance.candidates.size(), 0);
      for (std::size_t v = 0; v < n; ++v)
        if (!deleted[v] && !table.reach[v].empty()) ++counts[table.top_candidate[v]];
      long long best = 0;
      for (long long c : counts) best = std::max(best, c);
      if (counts[target] == best) {
        r.yes = true;
        for (std::size_t i : combo) r.deleted.push_back(instance.voters[i].id);
        return r;
      }
      more = s > 0 && next_combination_idx(combo, n);
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// File formats

std::pair<GridGraph, long long> parse_grid_graph(const std::string& text) {
  ojson doc = parse_exact_json(text);
  if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges"))
    throw Error(Errc::MALFORMED_DOCUMENT, "graph document needs 'vertices' and 'edges'");
  GridGraph g;
  const ojson& verts = doc["vertices"];
  if (!verts.is_object()) throw Error(Errc::MALFORMED_DOCUMENT, "'vertices' must be an object");
  for (auto it = verts.begin(); it != verts.end(); ++it) {
    const ojson& loc = it.value();
    if (!loc.is_array() || loc.size() != 2)
      throw Error(Errc::MALFORMED_DOCUMENT, "vertex '" + it.key() + "' needs [x, y]");
    g.vertices.push_back({it.key(), Point{{rational_from_json(loc[0], "vertex " + it.key()),
                                           rational_from_json(loc[1], "vertex " + it.key())}}});
  }
  const ojson& edges = doc["edges"];
  if (!edges.is_array()) throw Error(Errc::MALFORMED_DOCUMENT, "'edges' must be an array");
  for (const auto& e : edges) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
      throw Error(Errc::MALFORMED_DOCUMENT, "each edge must be [id, id]");
    g.edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  long long k = 0;
  if (doc.contains("k")) {
    if (!doc["k"].is_number_integer() && !doc["k"].is_number_unsigned())
      throw Error(Errc::MALFORMED_DOCUMENT, "'k' must be an integer");
    k = doc["k"].get<long long>();
  }
  validate_grid_graph(g);
  return {std::move(g), k};
}

std::string serialize_grid_graph(const GridGraph& g, long long k) {
  ojson doc = ojson::object();
  ojson verts = ojson::object();
  for (const GridVertex& v : g.vertices)
    verts[v.id] = ojson::array(
        {rational_to_json(v.location.coords[0]), rational_to_json(v.location.coords[1])});
  doc["vertices"] = std::move(verts);
  ojson edges = ojson::array();
  for (const auto& [u, v] : g.edges) edges.push_back(ojson::array({u, v}));
  doc["edges"] = std::move(edges);
  doc["k"] = k;
  return doc.dump(2) + "\n";
}

X3CInstance parse_x3c(const std::string& text) {
  ojson doc = parse_exact_json(text);
  if (!doc.is_object() || !doc.contains("ground") || !doc.contains("sets"))
    throw Error(Errc::MALFORMED_DOCUMENT, "x3c document needs 'ground' and 'sets'");
  X3CInstance x;
  for (const auto& b : doc["ground"]) {
    if (!b.is_string()) throw Error(Errc::MALFORMED_DOCUMENT, "ground elements must be strings");
    x.ground.push_back(b.get<std::string>());
  }
  for (const auto& s : doc["sets"]) {
    if (!s.is_array() || s.size() != 3)
      throw Error(Errc::MALFORMED_DOCUMENT, "each set must contain exactly 3 elements");
    x.sets.push_back({s[0].get<std::string>(), s[1].get<std::string>(), s[2].get<std::string>()});
  }
  validate_x3c(x);
  return x;
}

std::string serialize_x3c(const X3CInstance& x) {
  ojson doc = ojson::object();
  doc["ground"] = x.ground;
  ojson sets = ojson::array();
  for (const auto& s : x.sets) sets.push_back(ojson::array({s[0], s[1], s[2]}));
  doc["sets"] = std::move(sets);
  return doc.dump(2) + "\n";
}

StdElection parse_std_election(const std::string& text) {
  ojson doc = parse_exact_json(text);
  if (!doc.is_object() || !doc.contains("candidates") || !doc.contains("voters"))
    throw Error(Errc::MALFORMED_DOCUMENT, "election document needs 'candidates' and 'voters'");
  StdElection e;
  for (const auto& c : doc["candidates"]) e.candidates.push_back(c.get<std::string>());
  for (const auto& v : doc["voters"]) {
    StdVoter voter;
    voter.id = v.at("id").get<std::string>();
    for (const auto& c : v.at("preferences")) voter.preferences.push_back(c.get<std::string>());
    e.voters.push_back(std::move(voter));
  }
  if (doc.contains("delete_limit")) e.delete_limit = doc["delete_limit"].get<long long>();
  if (doc.contains("preferred")) e.preferred = doc["preferred"].get<std::string>();
  validate_std_election(e);
  return e;
}

std::string serialize_std_election(const StdElection& e) {
  ojson doc = ojson::object();
  doc["candidates"] = e.candidates;
  ojson voters = ojson::array();
  for (const StdVoter& v : e.voters) {
    ojson node = ojson::object();
    node["id"] = v.id;
    node["preferences"] = v.preferences;
    voters.push_back(std::move(node));
  }
  doc["voters"] = std::move(voters);
  doc["delete_limit"] = e.delete_limit;
  doc["preferred"] = e.preferred;
  return doc.dump(2) + "\n";
}

}  // namespace pollctl
