#include "pollctl/instance_io.hpp"

#include <algorithm>

#include "pollctl/error.hpp"
#include "pollctl/exact_json.hpp"

namespace pollctl {

namespace {

const ojson& require(const ojson& node, const char* key, const std::string& where) {
  auto it = node.find(key);
  if (!node.is_object() || it == node.end())
    throw Error(Errc::MALFORMED_DOCUMENT, where + ": missing key '" + key + "'");
  return *it;
}

long long int_field(const ojson& value, const std::string& where) {
  if (!value.is_number_integer() && !value.is_number_unsigned())
    throw Error(Errc::MALFORMED_DOCUMENT, where + ": expected an integer");
  return value.get<long long>();
}

std::string string_field(const ojson& value, const std::string& where) {
  if (!value.is_string())
    throw Error(Errc::MALFORMED_DOCUMENT, where + ": expected a string");
  return value.get<std::string>();
}

Point point_field(const ojson& value, const std::string& where) {
  if (!value.is_array() || value.empty() || value.size() > 2)
    throw Error(Errc::MALFORMED_DOCUMENT, where + ": location must be an array of 1 or 2 scalars");
  Point p;
  for (const auto& c : value) p.coords.push_back(rational_from_json(c, where));
  return p;
}

Norm norm_from_string(const std::string& s) {
  if (s == "EUCLIDEAN") return Norm::EUCLIDEAN;
  if (s == "MANHATTAN") return Norm::MANHATTAN;
  throw Error(Errc::MALFORMED_DOCUMENT, "unknown norm '" + s + "'");
}

ControlQuery parse_query(const ojson& node, const GeoInstance& instance) {
  ControlQuery q;
  std::string mode = string_field(require(node, "mode", "query"), "query.mode");
  if (mode == "CONSTRUCTIVE") {
    q.mode = ControlMode::CONSTRUCTIVE;
  } else if (mode == "DESTRUCTIVE") {
    q.mode = ControlMode::DESTRUCTIVE;
  } else {
    throw Error(Errc::MALFORMED_DOCUMENT, "query.mode must be CONSTRUCTIVE or DESTRUCTIVE");
  }
  q.target = string_field(require(node, "target", "query"), "query.target");
  instance.candidate_pos(q.target);  // throws UNKNOWN_CANDIDATE
  q.min_sites = int_field(require(node, "min_sites", "query"), "query.min_sites");
  if (q.min_sites < 0)
    throw Error(Errc::MALFORMED_DOCUMENT, "query.min_sites must be nonnegative");
  return q;
}

}  // namespace

ParsedInstance parse_instance(const std::string& text) {
  ojson doc = parse_exact_json(text);
  if (!doc.is_object()) throw Error(Errc::MALFORMED_DOCUMENT, "top level must be an object");

  ParsedInstance out;
  GeoInstance& inst = out.instance;

  const ojson& metric = require(doc, "metric", "document");
  long long dim = int_field(require(metric, "dimension", "metric"), "metric.dimension");
  if (dim != 1 && dim != 2)
    throw Error(Errc::MALFORMED_DOCUMENT, "metric.dimension must be 1 or 2");
  inst.metric.dimension = static_cast<int>(dim);
  inst.metric.norm = metric.contains("norm")
                         ? norm_from_string(string_field(metric["norm"], "metric.norm"))
                         : Norm::EUCLIDEAN;

  const ojson& cands = require(doc, "candidates", "document");
  if (!cands.is_array())
    throw Error(Errc::MALFORMED_DOCUMENT, "candidates must be an array");
  for (const auto& c : cands) inst.candidates.push_back(string_field(c, "candidates[]"));

  const ojson& voters = require(doc, "voters", "document");
  if (!voters.is_array()) throw Error(Errc::MALFORMED_DOCUMENT, "voters must be an array");
  for (const auto& v : voters) {
    Voter voter;
    voter.id = string_field(require(v, "id", "voter"), "voter.id");
    voter.location = point_field(require(v, "location", "voter " + voter.id), "voter " + voter.id);
    voter.bound = rational_from_json(require(v, "bound", "voter " + voter.id),
                                     "voter " + voter.id + " bound");
    if (voter.bound < 0)
      throw Error(Errc::NEGATIVE_BOUND, "voter '" + voter.id + "' has a negative distance-bound");
    const ojson& prefs = require(v, "preferences", "voter " + voter.id);
    if (!prefs.is_array())
      throw Error(Errc::MALFORMED_DOCUMENT, "voter " + voter.id + ": preferences must be an array");
    for (const auto& c : prefs) voter.preferences.push_back(string_field(c, "preferences[]"));
    inst.voters.push_back(std::move(voter));
  }

  const ojson& sites = require(doc, "sites", "document");
  if (!sites.is_array()) throw Error(Errc::MALFORMED_DOCUMENT, "sites must be an array");
  for (const auto& s : sites) {
    PollingSite site;
    site.id = string_field(require(s, "id", "site"), "site.id");
    site.location = point_field(require(s, "location", "site " + site.id), "site " + site.id);
    inst.sites.push_back(std::move(site));
  }

  validate_instance(inst);

  if (doc.contains("query")) out.query = parse_query(doc["query"], inst);
  return out;
}

std::string serialize_instance(const GeoInstance& instance,
                               const std::optional<ControlQuery>& query) {
  ojson doc = ojson::object();
  doc["metric"] = {{"dimension", instance.metric.dimension},
                   {"norm", instance.metric.norm == Norm::EUCLIDEAN ? "EUCLIDEAN" : "MANHATTAN"}};
  doc["candidates"] = instance.candidates;

  ojson voters = ojson::array();
  for (const Voter& v : instance.voters) {
    ojson node = ojson::object();
    node["id"] = v.id;
    ojson loc = ojson::array();
    for (const Rational& c : v.location.coords) loc.push_back(rational_to_json(c));
    node["location"] = std::move(loc);
    node["bound"] = rational_to_json(v.bound);
    node["preferences"] = v.preferences;
    voters.push_back(std::move(node));
  }
  doc["voters"] = std::move(voters);

  ojson sites = ojson::array();
  for (const PollingSite& s : instance.sites) {
    ojson node = ojson::object();
    node["id"] = s.id;
    ojson loc = ojson::array();
    for (const Rational& c : s.location.coords) loc.push_back(rational_to_json(c));
    node["location"] = std::move(loc);
    sites.push_back(std::move(node));
  }
  doc["sites"] = std::move(sites);

  if (query) {
    doc["query"] = {
        {"mode", query->mode == ControlMode::CONSTRUCTIVE ? "CONSTRUCTIVE" : "DESTRUCTIVE"},
        {"target", query->target},
        {"min_sites", query->min_sites}};
  }
  return doc.dump(2) + "\n";
}

}  // namespace pollctl
