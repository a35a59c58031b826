// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Everything asserted here is exact; no tolerances.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "pollctl/bound_change.hpp"
#include "pollctl/instance_io.hpp"
#include "pollctl/reductions.hpp"
#include "pollctl/solvers.hpp"
#include "support.hpp"

using namespace pollctl;
using namespace pollctl::test;

namespace {

int g_checks_failed = 0;

bool expect(bool ok, const std::string& what) {
  if (!ok) {
    ++g_checks_failed;
    std::cout << "    check failed: " << what << "\n";
  }
  return ok;
}

struct Criterion {
  int number;
  std::string title;
  bool (*run)();
};

// --------------------------------------------------------------------- 1
bool criterion_example1() {
  bool ok = true;
  GeoInstance inst = example1_instance();
  ControlQuery query = example1_query();

  ok &= expect(margin(inst, Selection::of({"A"}), "p", "r") == -1, "margin at A is -1");
  ok &= expect(margin(inst, Selection::of({"B"}), "p", "r") == -10, "margin at B is -10");
  ok &= expect(margin(inst, Selection::of({"C"}), "p", "r") == -15, "margin at C is -15");

  long long at_a = margin(inst, Selection::of({"A"}), "p", "r");
  ok &= expect(margin(inst, Selection::of({"A", "B"}), "p", "r") - at_a == -40,
               "after A, adding B is worth -40");
  ok &= expect(margin(inst, Selection::of({"A", "C"}), "p", "r") - at_a == -35,
               "after A, adding C is worth -35");

  ok &= expect(solve_greedy(inst, query).verdict == Verdict::UNKNOWN, "greedy gives UNKNOWN");

  for (auto* solver : {&solve_brute_force, &solve_bounded_overlap}) {
    SolveResult r = (*solver)(inst, query, {});
    ok &= expect(r.verdict == Verdict::YES, "exact solver answers YES");
    ok &= expect(r.witness && r.witness->site_ids == std::vector<std::string>{"B", "C"},
                 "witness is {B,C}");
    ok &= expect(r.board && r.board->score_of(inst, "p") == 50 &&
                     r.board->score_of(inst, "r") == 40,
                 "scoreboard is p=50, r=40");
  }
  return ok;
}

// --------------------------------------------------------------------- 2
bool criterion_x3c_scores() {
  bool ok = true;
  X3CInstance x{{"b1", "b2", "b3", "b4", "b5", "b6"},
                {{"b1", "b2", "b3"}, {"b4", "b5", "b6"}, {"b1", "b2", "b4"}}};
  X3CReduction red = x3c_to_ppc(x);
  SolveResult r = solve_brute_force(red.instance, red.query);
  ok &= expect(r.verdict == Verdict::YES, "cover instance is a YES");
  if (r.witness) {
    ScoreBoard board = plurality_scores(red.instance, *r.witness);
    for (const auto& c : red.instance.candidates)
      ok &= expect(board.score_of(red.instance, c) == 2,
                   "candidate " + c + " scores k^2-k = 2");
  } else {
    ok = false;
  }
  return ok;
}

// --------------------------------------------------------------------- 3
bool criterion_subdivision_pipeline() {
  bool ok = true;
  std::mt19937_64 rng(20240301);
  for (int round = 0; round < 100; ++round) {
    GridGraph g = random_grid_graph(rng, 8, 4);
    SubdivisionResult sub = subdivide_rectilinear(g, 0);
    ok &= expect(sub.added_vertices % 2 == 0, "t is even");

    auto [vc, cover] = min_vertex_cover(g);
    auto [vc_hat, cover_hat] = min_vertex_cover(sub.graph);
    ok &= expect(static_cast<long long>(vc_hat) ==
                     static_cast<long long>(vc) + sub.added_vertices / 2,
                 "minimum cover shifts by exactly t/2");

    long long at = static_cast<long long>(vc);
    SubdivisionResult yes_side = subdivide_rectilinear(g, at);
    ok &= expect(solve_vertex_cover_brute(g, at).yes &&
                     solve_vertex_cover_brute(yes_side.graph, yes_side.k_hat).yes,
                 "k = VC(g) stays a YES through the pipeline");
    if (at > 0) {
      SubdivisionResult no_side = subdivide_rectilinear(g, at - 1);
      ok &= expect(!solve_vertex_cover_brute(g, at - 1).yes &&
                       !solve_vertex_cover_brute(no_side.graph, no_side.k_hat).yes,
                   "k = VC(g)-1 stays a NO through the pipeline");
    }
    if (!ok) break;
  }
  return ok;
}

// --------------------------------------------------------------------- 4
bool criterion_vc_reduction() {
  bool ok = true;
  std::mt19937_64 rng(20240302);
  int produced = 0;
  while (produced < 50) {
    GridGraph g = random_restricted_graph(rng, 5);
    ++produced;
    long long k = static_cast<long long>(rnd_below(rng, g.vertices.size() + 1));
    VcReduction red = vc_to_ppc(g, k);

    bool vc_yes = solve_vertex_cover_brute(g, k).yes;
    bool ppc_yes = solve_brute_force(red.instance, red.query).verdict == Verdict::YES;
    ok &= expect(vc_yes == ppc_yes, "cover decision transports through the reduction");

    for (const auto& [site_id, info] : red.site_map) {
      if (info.far) continue;
      for (const auto& [other_id, other] : red.site_map) {
        if (other.far || other_id == site_id) continue;
        if (other.edge_u != info.edge_u || other.edge_v != info.edge_v) continue;
        const PollingSite& here = red.instance.sites[red.instance.site_pos(site_id)];
        const PollingSite& opposite = red.instance.sites[red.instance.site_pos(other_id)];
        Voter companion = v("tmp", here.location, Rational(3, 8), {"r", "p"});
        ok &= expect(!can_vote(red.instance.metric, companion, opposite),
                     "edge r-voter cannot reach the opposite site");
      }
    }
    if (!ok) break;
  }
  return ok;
}

// --------------------------------------------------------------------- 5
bool criterion_oracle_equivalence() {
  bool ok = true;
  std::mt19937_64 rng(20240303);

  auto random_query = [&](const GeoInstance& inst) {
    return ControlQuery{
        rnd_below(rng, 2) ? ControlMode::CONSTRUCTIVE : ControlMode::DESTRUCTIVE,
        inst.candidates[rnd_below(rng, inst.candidates.size())],
        static_cast<long long>(rnd_below(rng, inst.sites.size() + 2))};
  };
  auto greedy_link = [&](const GeoInstance& inst, const ControlQuery& q, bool brute_yes) {
    SolveResult greedy = solve_greedy(inst, q);
    if (greedy.verdict == Verdict::NO) return false;
    if (greedy.verdict == Verdict::YES && !brute_yes) return false;
    if (greedy.verdict == Verdict::YES && !evaluate_control(inst, q, *greedy.witness))
      return false;
    return true;
  };

  for (int round = 0; round < 500; ++round) {
    GenParams params;
    params.dimension = 1;
    params.n_candidates = 2;
    params.n_sites = 1 + rnd_below(rng, 10);
    params.n_voters = rnd_below(rng, 31);
    params.box = 12;
    params.bound_max = Rational(3);
    params.seed = rng();
    GeoInstance inst = generate_instance(params);
    ControlQuery q = random_query(inst);
    SolveResult bf = solve_brute_force(inst, q);
    SolveResult dp = solve_line_dp(inst, q);
    ok &= expect(dp.verdict == bf.verdict, "line DP agrees with brute force");
    if (dp.witness && !evaluate_control(inst, q, *dp.witness)) ok = expect(false, "DP witness");
    if (!greedy_link(inst, q, bf.verdict == Verdict::YES)) ok = expect(false, "greedy link");
    if (!ok) return ok;
  }

  for (int round = 0; round < 500; ++round) {
    GenParams params;
    params.spread_sites = true;
    params.dimension = rnd_below(rng, 2) ? 2 : 1;
    params.n_candidates = 2;
    params.n_sites = 1 + rnd_below(rng, 10);
    params.n_voters = rnd_below(rng, 31);
    params.seed = rng();
    GeoInstance inst = generate_instance(params);
    ControlQuery q = random_query(inst);
    SolveResult bf = solve_brute_force(inst, q);
    SolveResult no = solve_no_overlap(inst, q);
    ok &= expect(no.verdict == bf.verdict, "no-overlap agrees with brute force");
    if (no.witness && !evaluate_control(inst, q, *no.witness))
      ok = expect(false, "no-overlap witness");
    if (!greedy_link(inst, q, bf.verdict == Verdict::YES)) ok = expect(false, "greedy link");
    if (!ok) return ok;
  }

  for (int round = 0; round < 500; ++round) {
    GenParams params;
    params.dimension = 2;
    params.n_candidates = 2;
    params.n_sites = 1 + rnd_below(rng, 10);
    params.n_voters = rnd_below(rng, 31);
    params.box = 6;
    params.bound_max = Rational(2);
    params.seed = rng();
    GeoInstance inst = generate_instance(params);
    ControlQuery q = random_query(inst);
    SolveResult bf = solve_brute_force(inst, q);
    SolveResult bo = solve_bounded_overlap(inst, q);
    ok &= expect(bo.verdict == bf.verdict, "bounded-overlap agrees with brute force");
    if (bo.witness && !evaluate_control(inst, q, *bo.witness))
      ok = expect(false, "bounded-overlap witness");
    if (!greedy_link(inst, q, bf.verdict == Verdict::YES)) ok = expect(false, "greedy link");
    if (!ok) return ok;
  }
  return ok;
}

// --------------------------------------------------------------------- 6
bool criterion_bound_change() {
  bool ok = true;
  std::mt19937_64 rng(20240304);
  for (int round = 0; round < 300; ++round) {
    GenParams params;
    params.dimension = 1;
    params.n_candidates = 2 + rnd_below(rng, 2);
    params.n_voters = rnd_below(rng, 13);
    params.n_sites = 1 + rnd_below(rng, 4);
    params.box = 8;
    params.denominator = 4;
    params.bound_max = Rational(2);
    params.seed = rng();
    GeoInstance inst = generate_instance(params);
    std::string p = inst.candidates[rnd_below(rng, inst.candidates.size())];
    Rational budget = rnd_rational(rng, 0, 4, 8);

    auto direct = solve_distance_bound_change(inst, p, budget);
    bool priced = solve_priced_add_delete(to_priced_control(inst, p, budget)).has_value();
    ok &= expect(direct.has_value() == priced, "direct and priced verdicts agree");

    BcBruteResult brute = bound_change_brute(inst, p, budget);
    ok &= expect(direct.has_value() == brute.yes, "direct verdict matches brute force");
    if (direct) {
      ok &= expect(direct->base_cost == brute.best_base, "base cost is the brute minimum");
      ok &= expect(direct->strict == !direct->disabled.empty(), "strict iff a voter is disabled");
      ok &= expect(direct->strict ? direct->base_cost < budget : direct->base_cost <= budget,
                   "strictness bookkeeping respects the budget");
      ok &= expect(plan_makes_preferred_win(inst, *direct, p), "plan makes p a winner");
    }
    if (!ok) break;
  }
  return ok;
}

// --------------------------------------------------------------------- 7
bool criterion_deletion_roundtrip() {
  bool ok = true;
  std::mt19937_64 rng(20240305);
  for (int round = 0; round < 100; ++round) {
    StdElection e = random_std_election(rng);
    GeoDeletionInstance geo = std_deleting_voters_to_geo(e);
    ok &= expect(solve_deleting_voters_brute(e).yes ==
                     solve_geo_deleting_voters_brute(geo.instance, geo.delete_limit,
                                                     geo.preferred)
                         .yes,
                 "standard -> geographic preserves the answer");

    GenParams params;
    params.dimension = rnd_below(rng, 2) ? 2 : 1;
    params.n_candidates = 2 + rnd_below(rng, 2);
    params.n_voters = rnd_below(rng, 9);
    params.n_sites = 1 + rnd_below(rng, 4);
    params.seed = rng();
    GeoInstance inst = generate_instance(params);
    long long limit = static_cast<long long>(rnd_below(rng, params.n_voters + 1));
    std::string p = inst.candidates[rnd_below(rng, inst.candidates.size())];
    ok &= expect(solve_geo_deleting_voters_brute(inst, limit, p).yes ==
                     solve_deleting_voters_brute(geo_deleting_voters_to_std(inst, limit, p)).yes,
                 "geographic -> standard preserves the answer");
    if (!ok) break;
  }
  return ok;
}

// --------------------------------------------------------------------- 8
std::string shell(const std::string& cmd) {
  FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (!pipe) return {};
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  pclose(pipe);
  return out;
}

std::string strip_wall_time(const std::string& report) {
  std::istringstream in(report);
  std::ostringstream out;
  std::string line;
  while (std::getline(in, line))
    if (line.find("wall_time_ms") == std::string::npos) out << line << "\n";
  return out.str();
}

bool criterion_determinism() {
  bool ok = true;
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "pollctl_acceptance";
  fs::create_directories(dir);
  std::string fixture = std::string(FIXTURE_DIR) + "/example1.json";
  std::string x3c = std::string(FIXTURE_DIR) + "/x3c_k2.json";
  std::string bin = POLLCTL_BIN;

  std::vector<std::string> solve_runs, reduce_runs, gen_files;
  for (int run = 0; run < 3; ++run) {
    solve_runs.push_back(strip_wall_time(shell(bin + " solve " + fixture)));

    std::string out = (dir / ("red" + std::to_string(run) + ".json")).string();
    reduce_runs.push_back(strip_wall_time(shell(bin + " reduce x3c2ppc " + x3c + " --out " + out)));
    reduce_runs.back() += slurp(out);

    std::string gen_out = (dir / ("gen" + std::to_string(run) + ".json")).string();
    shell(bin + " gen --dim 2 --voters 12 --sites 5 --seed 42 --out " + gen_out);
    gen_files.push_back(slurp(gen_out));
  }
  ok &= expect(!solve_runs[0].empty(), "solver produced a report");
  ok &= expect(solve_runs[0] == solve_runs[1] && solve_runs[1] == solve_runs[2],
               "three solve runs hash identically");
  ok &= expect(solve_runs[0].find("\"B\"") != std::string::npos, "witness is stable");
  ok &= expect(reduce_runs[0] == reduce_runs[1] && reduce_runs[1] == reduce_runs[2],
               "three reduce runs hash identically");
  ok &= expect(!gen_files[0].empty() && gen_files[0] == gen_files[1] &&
                   gen_files[1] == gen_files[2],
               "three generator runs are byte-identical");
  return ok;
}

const Criterion kCriteria[] = {
    {1, "margins, greedy failure and exact witness on the worked instance", criterion_example1},
    {2, "exact-cover witness scores k^2-k for every candidate", criterion_x3c_scores},
    {3, "grid subdivision preserves vertex-cover answers (100 graphs)",
     criterion_subdivision_pipeline},
    {4, "vertex-cover reduction equivalence and site geometry (50 graphs)",
     criterion_vc_reduction},
    {5, "line DP / no-overlap / bounded-overlap match brute force (3x500 instances)",
     criterion_oracle_equivalence},
    {6, "distance-bound change: priced route, brute minimum and strictness (300 instances)",
     criterion_bound_change},
    {7, "deleting-voters control transfers standard <-> geographic (100 elections)",
     criterion_deletion_roundtrip},
    {8, "identical inputs give identical witnesses and reports (3 runs)",
     criterion_determinism},
};

}  // namespace

int main() {
  int failed = 0;
  for (const Criterion& c : kCriteria) {
    bool ok = false;
    try {
      ok = c.run();
    } catch (const std::exception& e) {
      std::cout << "    exception: " << e.what() << "\n";
    }
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << c.number << ": " << c.title
              << "\n";
    if (!ok) ++failed;
  }
  if (failed == 0) {
    std::cout << "RESULT: all " << std::size(kCriteria) << " acceptance criteria passed\n";
  } else {
    std::cout << "RESULT: " << failed << " criterion(s) failed, " << g_checks_failed
              << " individual checks\n";
  }
  return failed == 0 ? 0 : 1;
}
