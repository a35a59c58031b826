#include "pollctl/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "pollctl/bound_change.hpp"
#include "pollctl/digest.hpp"
#include "pollctl/error.hpp"
#include "pollctl/exact_json.hpp"
#include "pollctl/generator.hpp"
#include "pollctl/instance_io.hpp"
#include "pollctl/reductions.hpp"
#include "pollctl/solvers.hpp"
#include "pollctl/winners.hpp"

namespace pollctl {

namespace {

using Clock = std::chrono::steady_clock;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::INVALID_ARGUMENT, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::INVALID_ARGUMENT, "cannot write '" + path + "'");
  out << data;
}

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::YES: return 0;
    case Verdict::NO: return 1;
    case Verdict::UNKNOWN: return 2;
  }
  return 2;
}

ojson scores_json(const GeoInstance& instance, const ScoreBoard& board) {
  ojson out = ojson::object();
  for (std::size_t i = 0; i < instance.candidates.size(); ++i)
    out[instance.candidates[i]] = board.scores[i];
  return out;
}

void emit(std::ostream& out, ojson report, Clock::time_point t0) {
  report["wall_time_ms"] =
      std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  out << report.dump(2) << "\n";
}

std::size_t brute_cap_from_env() {
  const char* env = std::getenv("POLLCTL_BRUTE_CAP");
  if (!env || !*env) return 24;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 0)
    throw Error(Errc::INVALID_ARGUMENT, "POLLCTL_BRUTE_CAP must be a nonnegative integer");
  return static_cast<std::size_t>(v);
}

Selection selection_from_witness_doc(const ojson& doc) {
  const ojson* node = &doc;
  if (doc.is_object() && doc.contains("witness")) node = &doc["witness"];
  if (!node->is_object() || !node->contains("site_ids") || !(*node)["site_ids"].is_array())
    throw Error(Errc::MALFORMED_DOCUMENT, "witness document needs witness.site_ids");
  std::vector<std::string> ids;
  for (const auto& s : (*node)["site_ids"]) ids.push_back(s.get<std::string>());
  return Selection::of(std::move(ids));
}

struct SolveArgs {
  std::string instance_path;
  std::string algorithm = "auto";
  std::size_t overlap_budget = 20;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
};

int cmd_solve(const SolveArgs& a, std::ostream& out) {
  auto t0 = Clock::now();
  std::string text = read_file(a.instance_path);
  ParsedInstance parsed = parse_instance(text);
  if (!parsed.query)
    throw Error(Errc::MISSING_QUERY, "instance file carries no control query");

  SolveOptions opts;
  opts.threads = a.threads;
  opts.overlap_budget = a.overlap_budget;
  opts.brute_cap = brute_cap_from_env();

  SolveResult result;
  if (a.algorithm == "auto") {
    result = solve_auto(parsed.instance, *parsed.query, opts);
  } else if (a.algorithm == "line-dp") {
    result = solve_line_dp(parsed.instance, *parsed.query, opts);
  } else if (a.algorithm == "no-overlap") {
    result = solve_no_overlap(parsed.instance, *parsed.query, opts);
  } else if (a.algorithm == "bounded-overlap") {
    result = solve_bounded_overlap(parsed.instance, *parsed.query, opts);
  } else if (a.algorithm == "greedy") {
    result = solve_greedy(parsed.instance, *parsed.query, opts);
  } else if (a.algorithm == "brute") {
    result = solve_brute_force(parsed.instance, *parsed.query, opts);
  } else {
    throw Error(Errc::INVALID_ARGUMENT, "unknown algorithm '" + a.algorithm + "'");
  }

  ojson report = ojson::object();
  report["command"] = "solve";
  report["arguments"] = {{"instance", a.instance_path},
                         {"algorithm", a.algorithm},
                         {"overlap_budget", a.overlap_budget}};
  report["instance_digest"] = content_digest(text);
  report["algorithm"] = result.algorithm;
  report["verdict"] = verdict_name(result.verdict);
  if (result.witness) report["witness"] = {{"site_ids", result.witness->site_ids}};
  if (result.board) {
    report["scores"] = scores_json(parsed.instance, *result.board);
    report["participating"] = result.board->total_participating;
  }
  report["states_explored"] = result.states_explored;
  if (result.verdict == Verdict::UNKNOWN)
    report["note"] = "the greedy pass is only a heuristic: overlap between "
                     "polling place neighborhoods defeats it, so UNKNOWN is not NO";
  emit(out, std::move(report), t0);
  return exit_code(result.verdict);
}

int cmd_winner(const std::string& instance_path, const std::vector<std::string>& select,
               std::ostream& out) {
  auto t0 = Clock::now();
  std::string text = read_file(instance_path);
  ParsedInstance parsed = parse_instance(text);
  Selection sel = Selection::of(select);
  for (const auto& id : sel.site_ids) parsed.instance.site_pos(id);  // UNKNOWN_SITE check

  ScoreBoard board = plurality_scores(parsed.instance, sel);
  auto winners = winners_of(parsed.instance, board);

  ojson report = ojson::object();
  report["command"] = "winner";
  report["arguments"] = {{"instance", instance_path}, {"selection", sel.site_ids}};
  report["instance_digest"] = content_digest(text);
  report["scores"] = scores_json(parsed.instance, board);
  report["participating"] = board.total_participating;
  report["winners"] = std::vector<std::string>(winners.begin(), winners.end());
  emit(out, std::move(report), t0);
  return 0;
}

int cmd_verify(const std::string& instance_path, const std::string& witness_path,
               std::ostream& out) {
  auto t0 = Clock::now();
  std::string text = read_file(instance_path);
  ParsedInstance parsed = parse_instance(text);
  if (!parsed.query)
    throw Error(Errc::MISSING_QUERY, "instance file carries no control query");
  Selection sel = selection_from_witness_doc(parse_exact_json(read_file(witness_path)));
  for (const auto& id : sel.site_ids) parsed.instance.site_pos(id);

  ojson report = ojson::object();
  report["command"] = "verify";
  report["arguments"] = {{"instance", instance_path}, {"witness", witness_path}};
  report["instance_digest"] = content_digest(text);

  bool pass = true;
  std::string reason;
  if (static_cast<long long>(sel.size()) < parsed.query->min_sites) {
    pass = false;
    reason = "SIZE";
  } else if (!evaluate_control(parsed.instance, *parsed.query, sel)) {
    pass = false;
    reason = "GOAL";
  }
  report["result"] = pass ? "PASS" : "FAIL";
  if (!pass) report["reason"] = reason;
  ScoreBoard board = plurality_scores(parsed.instance, sel);
  report["scores"] = scores_json(parsed.instance, board);
  emit(out, std::move(report), t0);
  return pass ? 0 : 1;
}

struct GenArgs {
  GenParams params;
  std::string bound_range = "0..2";
  std::string norm = "EUCLIDEAN";
  std::string query;  // "mode:target:k" or empty
  std::string out_path;
};

int cmd_gen(GenArgs a, std::ostream& out) {
  auto t0 = Clock::now();
  auto sep = a.bound_range.find("..");
  if (sep == std::string::npos)
    throw Error(Errc::INVALID_ARGUMENT, "--bound-range expects the form a..b");
  a.params.bound_min = rational_from_string(a.bound_range.substr(0, sep));
  a.params.bound_max = rational_from_string(a.bound_range.substr(sep + 2));
  if (a.norm == "MANHATTAN") {
    a.params.norm = Norm::MANHATTAN;
  } else if (a.norm != "EUCLIDEAN") {
    throw Error(Errc::INVALID_ARGUMENT, "--norm must be EUCLIDEAN or MANHATTAN");
  }

  GeoInstance inst = generate_instance(a.params);
  std::optional<ControlQuery> query;
  if (!a.query.empty()) {
    auto c1 = a.query.find(':');
    auto c2 = a.query.rfind(':');
    if (c1 == std::string::npos || c2 == c1)
      throw Error(Errc::INVALID_ARGUMENT, "--query expects mode:target:k");
    ControlQuery q;
    std::string mode = a.query.substr(0, c1);
    if (mode == "constructive") {
      q.mode = ControlMode::CONSTRUCTIVE;
    } else if (mode == "destructive") {
      q.mode = ControlMode::DESTRUCTIVE;
    } else {
      throw Error(Errc::INVALID_ARGUMENT, "query mode must be constructive or destructive");
    }
    q.target = a.query.substr(c1 + 1, c2 - c1 - 1);
    q.min_sites = std::stoll(a.query.substr(c2 + 1));
    inst.candidate_pos(q.target);
    query = q;
  }

  std::string doc = serialize_instance(inst, query);
  write_file(a.out_path, doc);

  ojson report = ojson::object();
  report["command"] = "gen";
  report["arguments"] = {{"dim", a.params.dimension},
                         {"voters", a.params.n_voters},
                         {"sites", a.params.n_sites},
                         {"candidates", a.params.n_candidates},
                         {"seed", a.params.seed},
                         {"bound_range", a.bound_range},
                         {"spread", a.params.spread_sites}};
  report["out"] = a.out_path;
  report["instance_digest"] = content_digest(doc);
  emit(out, std::move(report), t0);
  return 0;
}

struct ReduceArgs {
  std::string kind;
  std::string input_path;
  std::string out_path;
  std::string map_path;
  std::string target;
  long long limit = 0;
};

int cmd_reduce(const ReduceArgs& a, std::ostream& out) {
  auto t0 = Clock::now();
  std::string text = read_file(a.input_path);

  ojson report = ojson::object();
  report["command"] = "reduce";
  report["arguments"] = {{"kind", a.kind}, {"input", a.input_path}};
  report["input_digest"] = content_digest(text);

  std::string artifact;
  if (a.kind == "vc2ppc") {
    auto [graph, k] = parse_grid_graph(text);
    VcReduction red = vc_to_ppc(graph, k);
    artifact = serialize_instance(red.instance, red.query);
    report["quota"] = red.query.min_sites;
    if (!a.map_path.empty()) {
      ojson map = ojson::object();
      ojson sites = ojson::object();
      for (const auto& [id, info] : red.site_map) {
        if (info.far) {
          sites[id] = {{"kind", "far"}};
        } else {
          sites[id] = {{"kind", "edge"},
                       {"edge", ojson::array({info.edge_u, info.edge_v})},
                       {"near", info.near_vertex}};
        }
      }
      map["sites"] = std::move(sites);
      map["k"] = k;
      write_file(a.map_path, map.dump(2) + "\n");
    }
  } else if (a.kind == "x3c2ppc") {
    X3CInstance x = parse_x3c(text);
    X3CReduction red = x3c_to_ppc(x);
    artifact = serialize_instance(red.instance, red.query);
    report["quota"] = red.query.min_sites;
    if (!a.map_path.empty()) {
      ojson map = ojson::object();
      ojson sites = ojson::object();
      for (const auto& [id, idx] : red.site_to_set) {
        sites[id] = {{"set_index", idx},
                     {"set", ojson::array({x.sets[idx][0], x.sets[idx][1], x.sets[idx][2]})}};
      }
      map["sites"] = std::move(sites);
      write_file(a.map_path, map.dump(2) + "\n");
    }
  } else if (a.kind == "subdivide") {
    auto [graph, k] = parse_grid_graph(text);
    SubdivisionResult sub = subdivide_rectilinear(graph, k);
    artifact = serialize_grid_graph(sub.graph, sub.k_hat);
    report["k_hat"] = sub.k_hat;
    report["added_vertices"] = sub.added_vertices;
  } else if (a.kind == "geo2std") {
    ParsedInstance parsed = parse_instance(text);
    if (a.target.empty())
      throw Error(Errc::INVALID_ARGUMENT, "geo2std needs --target");
    StdElection e = geo_deleting_voters_to_std(parsed.instance, a.limit, a.target);
    artifact = serialize_std_election(e);
    report["kept_voters"] = e.voters.size();
  } else if (a.kind == "std2geo") {
    StdElection e = parse_std_election(text);
    GeoDeletionInstance geo = std_deleting_voters_to_geo(e);
    artifact = serialize_instance(geo.instance, std::nullopt);
    report["delete_limit"] = geo.delete_limit;
    report["preferred"] = geo.preferred;
  } else {
    throw Error(Errc::INVALID_ARGUMENT,
                "kind must be one of vc2ppc, x3c2ppc, subdivide, geo2std, std2geo");
  }

  if (a.out_path.empty())
    throw Error(Errc::INVALID_ARGUMENT, "reduce needs --out");
  write_file(a.out_path, artifact);
  report["out"] = a.out_path;
  report["out_digest"] = content_digest(artifact);
  emit(out, std::move(report), t0);
  return 0;
}

struct BoundChangeArgs {
  std::string instance_path;
  std::string target;
  std::string budget;
  bool via_priced = false;
};

int cmd_bound_change(const BoundChangeArgs& a, std::ostream& out) {
  auto t0 = Clock::now();
  std::string text = read_file(a.instance_path);
  ParsedInstance parsed = parse_instance(text);
  Rational budget = rational_from_string(a.budget);

  ojson report = ojson::object();
  report["command"] = "bound-change";
  report["arguments"] = {{"instance", a.instance_path},
                         {"target", a.target},
                         {"budget", a.budget},
                         {"via_priced", a.via_priced}};
  report["instance_digest"] = content_digest(text);

  bool yes;
  if (a.via_priced) {
    PricedElection pe = to_priced_control(parsed.instance, a.target, budget);
    auto plan = solve_priced_add_delete(pe);
    yes = plan.has_value();
    report["budget_hat"] = rational_to_string(pe.budget);
    if (plan) {
      report["plan"] = {{"deletions", plan->deletions},
                        {"additions", plan->additions},
                        {"total_cost", rational_to_string(plan->total_cost)}};
    }
  } else {
    auto plan = solve_distance_bound_change(parsed.instance, a.target, budget);
    yes = plan.has_value();
    if (plan) {
      report["plan"] = {{"disabled", plan->disabled},
                        {"enabled", plan->enabled},
                        {"base_cost", rational_to_string(plan->base_cost)},
                        {"base_cost_exact", plan->base_cost_exact},
                        {"strict", plan->strict}};
    }
  }
  report["verdict"] = yes ? "YES" : "NO";
  emit(out, std::move(report), t0);
  return yes ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"pollctl: polling place control solver"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "decide a control query");
  solve->add_option("instance", solve_args.instance_path, "instance file")->required();
  solve->add_option("--algorithm", solve_args.algorithm,
                    "auto|line-dp|no-overlap|bounded-overlap|greedy|brute");
  solve->add_option("--overlap-budget", solve_args.overlap_budget,
                    "max overlapping sites for the subset sweep");
  solve->add_option("--threads", solve_args.threads, "worker threads for subset sweeps");

  std::string winner_instance;
  std::vector<std::string> winner_select;
  auto* winner = app.add_subcommand("winner", "score a fixed selection");
  winner->add_option("instance", winner_instance, "instance file")->required();
  winner->add_option("--select", winner_select, "site ids to open")->delimiter(',');

  std::string verify_instance, verify_witness;
  auto* verify = app.add_subcommand("verify", "check a witness against the query");
  verify->add_option("instance", verify_instance, "instance file")->required();
  verify->add_option("witness", verify_witness, "witness or report file")->required();

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "generate a random instance");
  gen->add_option("--dim", gen_args.params.dimension, "1 or 2");
  gen->add_option("--voters", gen_args.params.n_voters, "voter count");
  gen->add_option("--sites", gen_args.params.n_sites, "site count");
  gen->add_option("--candidates", gen_args.params.n_candidates, "candidate count");
  gen->add_option("--seed", gen_args.params.seed, "rng seed");
  gen->add_option("--bound-range", gen_args.bound_range, "a..b rational bounds");
  gen->add_option("--box", gen_args.params.box, "coordinate box size");
  gen->add_option("--denom", gen_args.params.denominator, "coordinate grid denominator");
  gen->add_option("--norm", gen_args.norm, "EUCLIDEAN or MANHATTAN");
  gen->add_flag("--spread", gen_args.params.spread_sites, "space sites so no voter reaches two");
  gen->add_option("--query", gen_args.query, "attach a query, mode:target:k");
  gen->add_option("--out", gen_args.out_path, "output instance file")->required();

  ReduceArgs reduce_args;
  auto* reduce = app.add_subcommand("reduce", "run an instance transformation");
  reduce->add_option("kind", reduce_args.kind, "vc2ppc|x3c2ppc|subdivide|geo2std|std2geo")
      ->required();
  reduce->add_option("input", reduce_args.input_path, "input file")->required();
  reduce->add_option("--out", reduce_args.out_path, "output file");
  reduce->add_option("--map", reduce_args.map_path, "witness map file");
  reduce->add_option("--target", reduce_args.target, "preferred candidate (geo2std)");
  reduce->add_option("--limit", reduce_args.limit, "delete limit (geo2std)");

  BoundChangeArgs bc_args;
  auto* bc = app.add_subcommand("bound-change", "constructive control by distance-bound change");
  bc->add_option("instance", bc_args.instance_path, "instance file")->required();
  bc->add_option("--target", bc_args.target, "preferred candidate")->required();
  bc->add_option("--budget", bc_args.budget, "rational budget")->required();
  bc->add_flag("--via-priced", bc_args.via_priced, "route through priced add/delete control");

  std::vector<const char*> argv;
  argv.push_back("pollctl");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 10 + static_cast<int>(Errc::INVALID_ARGUMENT);
  }

  try {
    if (solve->parsed()) return cmd_solve(solve_args, out);
    if (winner->parsed()) return cmd_winner(winner_instance, winner_select, out);
    if (verify->parsed()) return cmd_verify(verify_instance, verify_witness, out);
    if (gen->parsed()) return cmd_gen(gen_args, out);
    if (reduce->parsed()) return cmd_reduce(reduce_args, out);
    if (bc->parsed()) return cmd_bound_change(bc_args, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 10 + static_cast<int>(e.code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 70;
  }
  err << "error: no subcommand\n";
  return 10 + static_cast<int>(Errc::INVALID_ARGUMENT);
}

}  // namespace pollctl
