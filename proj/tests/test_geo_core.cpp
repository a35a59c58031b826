#include <random>

#include "doctest.h"
#include "pollctl/error.hpp"
#include "pollctl/instance_io.hpp"
#include "support.hpp"

using namespace pollctl;
using namespace pollctl::test;

namespace {

MetricDescriptor euclid2{2, Norm::EUCLIDEAN};
MetricDescriptor manhattan2{2, Norm::MANHATTAN};

}  // namespace

TEST_CASE("squared_distance basics") {
  CHECK(squared_distance(euclid2, Point{{0, 0}}, Point{{0, 0}}) == 0);
  CHECK(squared_distance(euclid2, Point{{0, 0}}, Point{{3, 4}}) == 25);
  CHECK(squared_distance(manhattan2, Point{{0, 0}}, Point{{1, 2}}) == 9);
  try {
    squared_distance(euclid2, Point{{0}}, Point{{1, 2}});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DIMENSION_MISMATCH);
  }
}

TEST_CASE("can_vote boundary semantics") {
  MetricDescriptor line{1, Norm::EUCLIDEAN};
  Voter at0 = v("x", Point{{0}}, Rational(1), {"p", "r"});
  CHECK(can_vote(line, at0, {"s", Point{{1}}}));  // exactly-at-bound counts
  CHECK_FALSE(can_vote(line, at0, {"s", Point{{Rational(1000001, 1000000)}}}));
  Voter planar = v("y", Point{{0, 0}}, Rational(3, 8), {"p", "r"});
  CHECK(can_vote(euclid2, planar, {"s", Point{{Rational(1, 4), 0}}}));
}

TEST_CASE("can_vote agrees with high-precision comparison away from ties") {
  std::mt19937_64 rng(7);
  int checked = 0;
  for (int round = 0; round < 500; ++round) {
    Point a{{rnd_rational(rng, 0, 8, 16), rnd_rational(rng, 0, 8, 16)}};
    Point b{{rnd_rational(rng, 0, 8, 16), rnd_rational(rng, 0, 8, 16)}};
    Rational bound = rnd_rational(rng, 0, 8, 16);
    Norm norm = rnd_below(rng, 2) ? Norm::EUCLIDEAN : Norm::MANHATTAN;
    MetricDescriptor metric{2, norm};
    Voter voter = v("x", a, bound, {"p", "r"});
    Float50 dist = rational_sqrt_approx(squared_distance(metric, a, b));
    Float50 gap = dist - Float50(bound);
    if (gap < 0) gap = -gap;
    if (gap <= Float50("1e-12")) continue;
    ++checked;
    CHECK(can_vote(metric, voter, {"s", b}) == (dist <= Float50(bound)));
  }
  CHECK(checked > 400);
}

TEST_CASE("participating_voters on the greedy counterexample") {
  GeoInstance inst = example1_instance();
  CHECK(participating_voters(inst, Selection{}).empty());

  auto part = participating_voters(inst, Selection::of({"B", "C"}));
  CHECK(part.size() == 90);
  CHECK(part.count("p1"));         // 20-group reaches C
  CHECK(part.count("p21"));        // 30-group reaches B
  CHECK(part.count("r1"));         // 35-group reaches B and C, counted once
  CHECK(part.count("r87"));        // 5-group at B
  CHECK_FALSE(part.count("r36"));  // the 51 voters at A do not vote

  auto all = participating_voters(inst, Selection::of({"A", "B", "C"}));
  CHECK(all.size() == 141);
}

TEST_CASE("participation is a union of per-site balls") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 200; ++round) {
    GenParams params;
    params.dimension = rnd_below(rng, 2) ? 2 : 1;
    params.n_voters = rnd_below(rng, 12);
    params.n_sites = 1 + rnd_below(rng, 6);
    params.seed = rng();
    GeoInstance inst = generate_instance(params);

    std::vector<std::string> ids1, ids2;
    for (const auto& s : inst.sites) (rnd_below(rng, 2) ? ids1 : ids2).push_back(s.id);
    std::vector<std::string> both = ids1;
    both.insert(both.end(), ids2.begin(), ids2.end());

    auto a = participating_voters(inst, Selection::of(ids1));
    auto b = participating_voters(inst, Selection::of(ids2));
    std::set<std::string> expected = a;
    expected.insert(b.begin(), b.end());
    CHECK(participating_voters(inst, Selection::of(both)) == expected);
  }
}

TEST_CASE("overlap graph of the greedy counterexample is a triangle") {
  GeoInstance inst = example1_instance();
  OverlapGraph g = overlap_graph(inst);
  CHECK(g.edges.size() == 3);
  CHECK(g.max_reach == 2);
  CHECK(g.overlapping_sites().size() == 3);
}

TEST_CASE("spread instances have edgeless overlap graphs") {
  std::mt19937_64 rng(13);
  for (int round = 0; round < 50; ++round) {
    GenParams params;
    params.spread_sites = true;
    params.dimension = rnd_below(rng, 2) ? 2 : 1;
    params.n_voters = rnd_below(rng, 20);
    params.n_sites = 1 + rnd_below(rng, 8);
    params.seed = rng();
    OverlapGraph g = overlap_graph(generate_instance(params));
    CHECK(g.edgeless());
    CHECK(g.max_reach <= 1);
  }
}

TEST_CASE("edgeless iff no voter reaches two sites") {
  std::mt19937_64 rng(17);
  for (int round = 0; round < 100; ++round) {
    GenParams params;
    params.n_voters = rnd_below(rng, 10);
    params.n_sites = 1 + rnd_below(rng, 5);
    params.seed = rng();
    GeoInstance inst = generate_instance(params);
    OverlapGraph g = overlap_graph(inst);
    ReachTable table = ReachTable::build(inst);
    CHECK(g.edgeless() == (table.max_reach <= 1));
  }
}

TEST_CASE("instance document round-trips exactly") {
  GeoInstance inst = example1_instance();
  ControlQuery query = example1_query();
  ParsedInstance back = parse_instance(serialize_instance(inst, query));
  CHECK(back.instance == inst);
  REQUIRE(back.query.has_value());
  CHECK(*back.query == query);
}

TEST_CASE("the checked-in fixture matches the in-code instance") {
  ParsedInstance parsed = parse_instance(slurp(std::string(FIXTURE_DIR) + "/example1.json"));
  CHECK(parsed.instance == example1_instance());
  REQUIRE(parsed.query.has_value());
  CHECK(*parsed.query == example1_query());
}

TEST_CASE("round-trip identity on random instances") {
  std::mt19937_64 rng(23);
  for (int round = 0; round < 100; ++round) {
    GenParams params;
    params.dimension = rnd_below(rng, 2) ? 2 : 1;
    params.norm = rnd_below(rng, 2) ? Norm::EUCLIDEAN : Norm::MANHATTAN;
    params.n_voters = rnd_below(rng, 10);
    params.n_sites = rnd_below(rng, 6);
    params.n_candidates = 1 + rnd_below(rng, 4);
    params.denominator = 1 + static_cast<long long>(rnd_below(rng, 16));
    params.seed = rng();
    GeoInstance inst = generate_instance(params);
    std::optional<ControlQuery> query;
    if (rnd_below(rng, 2))
      query =
          ControlQuery{rnd_below(rng, 2) ? ControlMode::CONSTRUCTIVE : ControlMode::DESTRUCTIVE,
                       inst.candidates[rnd_below(rng, inst.candidates.size())],
                       static_cast<long long>(rnd_below(rng, params.n_sites + 2))};
    ParsedInstance back = parse_instance(serialize_instance(inst, query));
    CHECK(back.instance == inst);
    CHECK(back.query == query);
  }
}

TEST_CASE("parse errors carry distinct codes") {
  auto code_of = [](const std::string& text) {
    try {
      parse_instance(text);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::INVALID_ARGUMENT;
  };

  CHECK(code_of("{ not json") == Errc::MALFORMED_DOCUMENT);

  std::string negative_bound = R"({
    "metric": {"dimension": 1}, "candidates": ["p"],
    "voters": [{"id": "v", "location": [0], "bound": -1, "preferences": ["p"]}],
    "sites": []})";
  CHECK(code_of(negative_bound) == Errc::NEGATIVE_BOUND);

  std::string unknown_candidate = R"({
    "metric": {"dimension": 1}, "candidates": ["p"],
    "voters": [{"id": "v", "location": [0], "bound": 1, "preferences": ["q"]}],
    "sites": []})";
  CHECK(code_of(unknown_candidate) == Errc::UNKNOWN_CANDIDATE);

  std::string wrong_dim = R"({
    "metric": {"dimension": 2}, "candidates": ["p"],
    "voters": [{"id": "v", "location": [0], "bound": 1, "preferences": ["p"]}],
    "sites": []})";
  CHECK(code_of(wrong_dim) == Errc::DIMENSION_MISMATCH);
}

TEST_CASE("rational literals parse exactly") {
  std::string doc = R"({
    "metric": {"dimension": 1}, "candidates": ["p"],
    "voters": [{"id": "v", "location": [0.375], "bound": "3/8", "preferences": ["p"]}],
    "sites": [{"id": "s", "location": ["1e-3"]}]})";
  ParsedInstance parsed = parse_instance(doc);
  CHECK(parsed.instance.voters[0].bound == Rational(3, 8));
  CHECK(parsed.instance.voters[0].location.coords[0] == Rational(3, 8));
  CHECK(parsed.instance.sites[0].location.coords[0] == Rational(1, 1000));
}

TEST_CASE("duplicate ids and bad permutations are rejected") {
  GeoInstance inst = example1_instance();
  inst.voters[1].id = inst.voters[0].id;
  CHECK_THROWS_AS(validate_instance(inst), Error);

  GeoInstance perm = example1_instance();
  perm.voters[0].preferences = {"p", "p"};
  CHECK_THROWS_AS(validate_instance(perm), Error);
}
