#ifndef POLLCTL_REDUCTIONS_HPP
#define POLLCTL_REDUCTIONS_HPP

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pollctl/geo.hpp"

namespace pollctl {

// ---------------------------------------------------------------------------
// Rectilinear grid graphs (vertex-cover pipeline)

struct GridVertex {
  std::string id;
  Point location;  // dimension 2

  bool operator==(const GridVertex&) const = default;
};

struct GridGraph {
  std::vector<GridVertex> vertices;
  std::vector<std::pair<std::string, std::string>> edges;

  std::size_t vertex_pos(const std::string& id) const;  // throws MALFORMED_GRAPH
  bool operator==(const GridGraph&) const = default;
};

// Structural checks: unique ids and locations, axis-aligned positive-length
// edges, degree <= 3, no vertex interior to an edge, edges meeting only at
// shared endpoints.  Throws Error(MALFORMED_GRAPH).
void validate_grid_graph(const GridGraph& g);

// Additionally: every edge lies on an integer gridline and has length
// exactly 1 or 3/2.
void validate_restricted_graph(const GridGraph& g);

struct SubdivisionResult {
  GridGraph graph;          // restricted output, coordinates rescaled by 3
  long long k_hat = 0;      // k + t/2
  long long added_vertices = 0;  // t, always even
};

// Normal form for the planar reduction: subdivide each integer-length edge at
// gridline crossings, fix parity with one extra midpoint vertex, cut the unit
// segments in thirds, rescale by 3.  Vertex-cover size shifts by exactly t/2.
SubdivisionResult subdivide_rectilinear(const GridGraph& g, long long k);

// ---------------------------------------------------------------------------
// Restricted vertex cover -> polling place control (two candidates, plane)

struct VcSiteInfo {
  bool far = false;            // the q-hat site packed with p voters
  std::string edge_u, edge_v;  // covering edge, when !far
  std::string near_vertex;     // endpoint whose r-voter reaches this site
};

struct VcReduction {
  GeoInstance instance;
  ControlQuery query;
  std::map<std::string, VcSiteInfo> site_map;
};

// Two sites per edge at the quarter points, r-voters on every vertex and
// site, a p-voter at each edge midpoint, all with bound 3/8, plus a far site
// holding k fresh p-voters; quota |E|+1.  YES iff the graph has a vertex
// cover of size <= k.
VcReduction vc_to_ppc(const GridGraph& restricted, long long k);

// ---------------------------------------------------------------------------
// Exact Cover by 3-Sets -> polling place control (multi-candidate, line)

struct X3CInstance {
  std::vector<std::string> ground;               // B, |B| = 3k
  std::vector<std::array<std::string, 3>> sets;  // S_1..S_n

  long long k() const { return static_cast<long long>(ground.size()) / 3; }
};

void validate_x3c(const X3CInstance& x);

struct X3CReduction {
  GeoInstance instance;
  ControlQuery query;
  std::map<std::string, std::size_t> site_to_set;  // site id -> index into sets
};

// Site i at coordinate i with co-located voters of bound 1/2 (so no voter
// reaches two sites): k-2 voters per ground candidate, k more for the three
// members of S_i, k-1 for p; quota k.  Requires k >= 2.
X3CReduction x3c_to_ppc(const X3CInstance& x);

// ---------------------------------------------------------------------------
// Control by deleting voters: standard <-> geographic

struct StdVoter {
  std::string id;
  std::vector<std::string> preferences;

  bool operator==(const StdVoter&) const = default;
};

struct StdElection {
  std::vector<std::string> candidates;
  std::vector<StdVoter> voters;
  long long delete_limit = 0;
  std::string preferred;

  bool operator==(const StdElection&) const = default;
};

struct GeoDeletionInstance {
  GeoInstance instance;  // every declared site is open; no site selection here
  long long delete_limit = 0;
  std::string preferred;
};

// Voter i goes to (0, i) with bound 1/2 and a private polling place at the
// same spot; voter ids are preserved so delete sets transfer verbatim.
GeoDeletionInstance std_deleting_voters_to_geo(const StdElection& e);

// Keeps exactly the voters within their bound of some polling place.
StdElection geo_deleting_voters_to_std(const GeoInstance& instance, long long delete_limit,
                                       const std::string& preferred);

// ---------------------------------------------------------------------------
// Enumeration oracles used to certify the generators

struct VertexCoverResult {
  bool yes = false;
  std::vector<std::string> witness;  // a cover of minimum size
};

// Exact minimum vertex cover by branch-and-reduce (degree-1 folding plus
// take-v / take-N(v) branching); fine for the subdivided pipeline graphs.
std::pair<std::size_t, std::vector<std::string>> min_vertex_cover(const GridGraph& g);

VertexCoverResult solve_vertex_cover_brute(const GridGraph& g, long long k);

struct X3CBruteResult {
  bool yes = false;
  std::vector<std::size_t> witness;  // indices into sets
};

X3CBruteResult solve_x3c_brute(const X3CInstance& x);

struct DeleteBruteResult {
  bool yes = false;
  std::vector<std::string> deleted;
};

DeleteBruteResult solve_deleting_voters_brute(const StdElection& e);
DeleteBruteResult solve_geo_deleting_voters_brute(const GeoInstance& instance, long long limit,
                                                  const std::string& preferred);

// ---------------------------------------------------------------------------
// File formats (JSON, exact scalars as in instance documents)

std::pair<GridGraph, long long> parse_grid_graph(const std::string& text);
std::string serialize_grid_graph(const GridGraph& g, long long k);

X3CInstance parse_x3c(const std::string& text);
std::string serialize_x3c(const X3CInstance& x);

StdElection parse_std_election(const std::string& text);
std::string serialize_std_election(const StdElection& e);

}  // namespace pollctl

#endif
