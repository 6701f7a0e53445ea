#include "creasim/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "creasim/errors.hpp"
#include "creasim/version.hpp"

namespace creasim {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw ConfigError(path, msg);
}

void write_escaped(const std::string& s, std::string& out) {
  out += '"';
  for (unsigned char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\b': out += "\\b"; break;
      case '\f': out += "\\f"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (c < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += static_cast<char>(c);
        }
    }
  }
  out += '"';
}

void write_value(const json& j, std::string& out) {
  switch (j.type()) {
    case json::value_t::null:
      out += "null";
      break;
    case json::value_t::boolean:
      out += j.get<bool>() ? "true" : "false";
      break;
    case json::value_t::number_integer: {
      char buf[32];
      auto res = std::to_chars(buf, buf + sizeof buf, j.get<std::int64_t>());
      out.append(buf, res.ptr);
      break;
    }
    case json::value_t::number_unsigned: {
      char buf[32];
      auto res = std::to_chars(buf, buf + sizeof buf, j.get<std::uint64_t>());
      out.append(buf, res.ptr);
      break;
    }
    case json::value_t::number_float:
      out += canonical_double(j.get<double>());
      break;
    case json::value_t::string:
      write_escaped(j.get<std::string>(), out);
      break;
    case json::value_t::array: {
      out += '[';
      bool first = true;
      for (const auto& item : j) {
        if (!first) out += ',';
        first = false;
        write_value(item, out);
      }
      out += ']';
      break;
    }
    case json::value_t::object: {
      out += '{';
      bool first = true;
      for (const auto& [key, value] : j.items()) {  // std::map storage: sorted
        if (!first) out += ',';
        first = false;
        write_escaped(key, out);
        out += ':';
        write_value(value, out);
      }
      out += '}';
      break;
    }
    default:
      throw std::invalid_argument("canonical json: unsupported value type");
  }
}

// -- parse helpers ---------------------------------------------------------

std::string child(const std::string& path, const char* key) {
  return path.empty() ? key : path + "." + key;
}

std::string index(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

void check_keys(const json& j, std::initializer_list<const char*> allowed,
                const std::string& path) {
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (std::find_if(allowed.begin(), allowed.end(),
                     [&](const char* k) { return key == k; }) == allowed.end()) {
      fail(child(path, key.c_str()), "unknown key");
    }
  }
}

const json& member(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(child(path, key), "missing");
  return *it;
}

const json* opt_member(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  return it == j.end() ? nullptr : &*it;
}

std::int64_t as_int(const json& v, const std::string& path) {
  if (!v.is_number_integer() && !v.is_number_unsigned()) fail(path, "expected an integer");
  return v.get<std::int64_t>();
}

std::uint64_t as_u64(const json& v, const std::string& path) {
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_number_integer()) {
    auto x = v.get<std::int64_t>();
    if (x < 0) fail(path, "expected a non-negative integer");
    return static_cast<std::uint64_t>(x);
  }
  fail(path, "expected a non-negative integer");
}

double as_double(const json& v, const std::string& path) {
  if (!v.is_number()) fail(path, "expected a number");
  return v.get<double>();
}

bool as_bool(const json& v, const std::string& path) {
  if (!v.is_boolean()) fail(path, "expected a boolean");
  return v.get<bool>();
}

std::string as_string(const json& v, const std::string& path) {
  if (!v.is_string()) fail(path, "expected a string");
  return v.get<std::string>();
}

const json& as_array(const json& v, const std::string& path) {
  if (!v.is_array()) fail(path, "expected an array");
  return v;
}

template <typename F>
auto rewrap(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    fail(path, e.what());
  }
}

// -- constraint json -------------------------------------------------------

json weighted_constraint_json(const WeightedConstraint& wc) {
  json j;
  j["weight"] = wc.weight;
  j["center"] = wc.region.center;
  j["radius"] = wc.region.radius;
  return j;
}

WeightedConstraint parse_weighted_constraint(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  check_keys(j, {"weight", "center", "radius"}, path);
  WeightedConstraint wc;
  if (const json* w = opt_member(j, "weight", path)) wc.weight = as_double(*w, child(path, "weight"));
  const json& center = as_array(member(j, "center", path), child(path, "center"));
  wc.region.center.clear();
  for (std::size_t i = 0; i < center.size(); ++i) {
    wc.region.center.push_back(as_double(center[i], index(child(path, "center"), i)));
  }
  wc.region.radius = as_double(member(j, "radius", path), child(path, "radius"));
  return wc;
}

json internal_config_json(const InternalConfig& ic) {
  json groups = json::array();
  for (const auto& g : ic.groups) {
    json group = json::array();
    for (const auto& wc : g) group.push_back(weighted_constraint_json(wc));
    groups.push_back(std::move(group));
  }
  json j;
  j["groups"] = std::move(groups);
  return j;
}

InternalConfig parse_internal_config(const json& j, int d, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  check_keys(j, {"groups"}, path);
  InternalConfig ic;
  const json& groups = as_array(member(j, "groups", path), child(path, "groups"));
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    const std::string gpath = index(child(path, "groups"), gi);
    const json& group = as_array(groups[gi], gpath);
    ConstraintGroup cg;
    for (std::size_t ci = 0; ci < group.size(); ++ci) {
      cg.push_back(parse_weighted_constraint(group[ci], index(gpath, ci)));
    }
    ic.groups.push_back(std::move(cg));
  }
  rewrap(path, [&] { ic.validate(d); return 0; });
  return ic;
}

json external_config_json(const ExternalConfig& ec) {
  json constraints = json::array();
  for (const auto& wc : ec.constraints) constraints.push_back(weighted_constraint_json(wc));
  json j;
  j["constraints"] = std::move(constraints);
  return j;
}

ExternalConfig parse_external_config(const json& j, int d, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  check_keys(j, {"constraints"}, path);
  ExternalConfig ec;
  const json& constraints = as_array(member(j, "constraints", path), child(path, "constraints"));
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    ec.constraints.push_back(
        parse_weighted_constraint(constraints[i], index(child(path, "constraints"), i)));
  }
  rewrap(path, [&] { ec.validate(d); return 0; });
  return ec;
}

json params_json(const OperatorParams& p) {
  json j;
  j["lambda"] = p.lambda;
  j["theta"] = p.theta;
  j["theta_min"] = p.theta_min;
  j["theta_max"] = p.theta_max;
  j["beta"] = p.beta;
  j["candidates"] = p.candidates;
  j["max_attempts"] = p.max_attempts;
  j["eta_center"] = p.eta_center;
  j["eta_theta"] = p.eta_theta;
  j["eta_beta"] = p.eta_beta;
  j["beta_min"] = p.beta_min;
  j["beta_max"] = p.beta_max;
  return j;
}

OperatorParams parse_params(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  check_keys(j,
             {"lambda", "theta", "theta_min", "theta_max", "beta", "candidates", "max_attempts",
              "eta_center", "eta_theta", "eta_beta", "beta_min", "beta_max"},
             path);
  OperatorParams p;
  if (const json* v = opt_member(j, "lambda", path)) p.lambda = as_double(*v, child(path, "lambda"));
  if (const json* v = opt_member(j, "theta", path)) p.theta = as_double(*v, child(path, "theta"));
  if (const json* v = opt_member(j, "theta_min", path)) p.theta_min = as_double(*v, child(path, "theta_min"));
  if (const json* v = opt_member(j, "theta_max", path)) p.theta_max = as_double(*v, child(path, "theta_max"));
  if (const json* v = opt_member(j, "beta", path)) p.beta = as_double(*v, child(path, "beta"));
  if (const json* v = opt_member(j, "candidates", path)) p.candidates = static_cast<int>(as_int(*v, child(path, "candidates")));
  if (const json* v = opt_member(j, "max_attempts", path)) p.max_attempts = static_cast<int>(as_int(*v, child(path, "max_attempts")));
  if (const json* v = opt_member(j, "eta_center", path)) p.eta_center = as_double(*v, child(path, "eta_center"));
  if (const json* v = opt_member(j, "eta_theta", path)) p.eta_theta = as_double(*v, child(path, "eta_theta"));
  if (const json* v = opt_member(j, "eta_beta", path)) p.eta_beta = as_double(*v, child(path, "eta_beta"));
  if (const json* v = opt_member(j, "beta_min", path)) p.beta_min = as_double(*v, child(path, "beta_min"));
  if (const json* v = opt_member(j, "beta_max", path)) p.beta_max = as_double(*v, child(path, "beta_max"));
  rewrap(path, [&] { p.validate(); return 0; });
  return p;
}

json update_flags_json(const UpdateFlags& f) {
  json j;
  j["external"] = f.external;
  j["evaluation"] = f.evaluation;
  j["generation"] = f.generation;
  return j;
}

UpdateFlags parse_update_flags(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  check_keys(j, {"external", "evaluation", "generation"}, path);
  UpdateFlags f;
  if (const json* v = opt_member(j, "external", path)) f.external = as_bool(*v, child(path, "external"));
  if (const json* v = opt_member(j, "evaluation", path)) f.evaluation = as_bool(*v, child(path, "evaluation"));
  if (const json* v = opt_member(j, "generation", path)) f.generation = as_bool(*v, child(path, "generation"));
  return f;
}

// -- artefacts and evaluations ----------------------------------------------

json artefact_json(const Artefact& a) {
  if (a.is_empty()) return nullptr;
  return json(a.coords());
}

Artefact parse_artefact(const json& j, const std::string& path) {
  if (j.is_null()) return Artefact::empty();
  const json& arr = as_array(j, path);
  std::vector<int> coords;
  coords.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    coords.push_back(static_cast<int>(as_int(arr[i], index(path, i))));
  }
  return Artefact::point(std::move(coords));
}

EvalClass parse_eval_class(const json& j, const std::string& path) {
  const std::string s = as_string(j, path);
  if (s == "+") return EvalClass::Positive;
  if (s == "-") return EvalClass::Negative;
  if (s == "null") return EvalClass::NonDecidable;
  fail(path, "expected \"+\", \"-\" or \"null\"");
}

EventType parse_event_type(const json& j, const std::string& path) {
  const std::string s = as_string(j, path);
  if (s == "generated") return EventType::Generated;
  if (s == "produced_empty") return EventType::ProducedEmpty;
  if (s == "observed") return EventType::Observed;
  if (s == "evaluated") return EventType::Evaluated;
  if (s == "updated") return EventType::Updated;
  if (s == "p_creative") return EventType::PCreative;
  if (s == "h_creative") return EventType::HCreative;
  fail(path, "unknown event type '" + s + "'");
}

UpdateTarget parse_update_target(const json& j, const std::string& path) {
  const std::string s = as_string(j, path);
  if (s == "external") return UpdateTarget::External;
  if (s == "evaluation") return UpdateTarget::Evaluation;
  if (s == "generation") return UpdateTarget::Generation;
  fail(path, "unknown update target '" + s + "'");
}

}  // namespace

std::string canonical_double(double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("canonical json: non-finite number");
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::string canonical_dump(const json& j) {
  std::string out;
  write_value(j, out);
  return out;
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string fnv1a64_hex(std::string_view bytes) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(bytes)));
  return buf;
}

std::string read_text_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw ConfigError(p.string(), "cannot read file");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw ConfigError(p.string(), "read failed");
  return std::move(ss).str();
}

void write_text_file(const std::filesystem::path& p, std::string_view content) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open for writing: " + p.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.flush();
  if (!out) throw std::runtime_error("write failed: " + p.string());
}

std::string iso8601_utc_now() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// -- config ------------------------------------------------------------------

AgentSpec parse_agent_spec(const json& j, int d, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  check_keys(j, {"category", "archetype", "internal", "external", "params", "update", "self_update"},
             path);
  AgentSpec spec;
  if (const json* v = opt_member(j, "category", path)) {
    spec.category = rewrap(child(path, "category"),
                           [&] { return category_from_string(as_string(*v, child(path, "category"))); });
  }
  if (const json* v = opt_member(j, "archetype", path)) {
    spec.archetype = rewrap(child(path, "archetype"),
                            [&] { return archetype_from_string(as_string(*v, child(path, "archetype"))); });
  }
  spec.internal = parse_internal_config(member(j, "internal", path), d, child(path, "internal"));
  if (const json* v = opt_member(j, "external", path)) {
    spec.external = parse_external_config(*v, d, child(path, "external"));
  }
  if (const json* v = opt_member(j, "params", path)) {
    spec.params = parse_params(*v, child(path, "params"));
  }
  if (const json* v = opt_member(j, "update", path)) {
    spec.update = parse_update_flags(*v, child(path, "update"));
  }
  if (const json* v = opt_member(j, "self_update", path)) {
    spec.self_update = as_bool(*v, child(path, "self_update"));
  }
  return spec;
}

json agent_spec_json(const AgentSpec& spec) {
  json j;
  j["category"] = to_string(spec.category);
  j["archetype"] = to_string(spec.archetype);
  j["internal"] = internal_config_json(spec.internal);
  j["external"] = external_config_json(spec.external);
  j["params"] = params_json(spec.params);
  j["update"] = update_flags_json(spec.update);
  j["self_update"] = spec.self_update;
  return j;
}

SocietyConfig parse_society_config(const json& j, const std::filesystem::path& base_dir) {
  if (!j.is_object()) fail("", "expected a config object");
  check_keys(j, {"space", "graph", "agents", "rounds", "seed", "snapshot_every", "espace_cap"}, "");

  SocietyConfig cfg;

  const json& space = member(j, "space", "");
  check_keys(space, {"d", "rho"}, "space");
  cfg.space.d = static_cast<int>(as_int(member(space, "d", "space"), "space.d"));
  cfg.space.rho = static_cast<int>(as_int(member(space, "rho", "space"), "space.rho"));
  rewrap("space", [&] { cfg.space.validate(); return 0; });

  const json& graph = member(j, "graph", "");
  const std::string type = as_string(member(graph, "type", "graph"), "graph.type");
  if (type == "ba") {
    check_keys(graph, {"type", "nodes", "m", "seed"}, "graph");
    BaGraphSpec ba;
    ba.nodes = static_cast<int>(as_int(member(graph, "nodes", "graph"), "graph.nodes"));
    ba.m = static_cast<int>(as_int(member(graph, "m", "graph"), "graph.m"));
    if (const json* v = opt_member(graph, "seed", "graph")) ba.seed = as_u64(*v, "graph.seed");
    cfg.graph = ba;
  } else if (type == "explicit") {
    check_keys(graph, {"type", "nodes", "edges"}, "graph");
    ExplicitGraphSpec ex;
    ex.nodes = static_cast<int>(as_int(member(graph, "nodes", "graph"), "graph.nodes"));
    const json& edges = as_array(member(graph, "edges", "graph"), "graph.edges");
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const std::string epath = index("graph.edges", i);
      const json& pair = as_array(edges[i], epath);
      if (pair.size() != 2) fail(epath, "expected a pair [a, b]");
      ex.edges.emplace_back(static_cast<int>(as_int(pair[0], index(epath, 0))),
                            static_cast<int>(as_int(pair[1], index(epath, 1))));
    }
    cfg.graph = ex;
  } else if (type == "file") {
    check_keys(graph, {"type", "path"}, "graph");
    const std::filesystem::path ref = as_string(member(graph, "path", "graph"), "graph.path");
    const auto resolved = ref.is_absolute() ? ref : base_dir / ref;
    const json gj = rewrap("graph.path", [&] { return json::parse(read_text_file(resolved)); });
    Graph g = parse_graph_json(gj, "graph.path");
    ExplicitGraphSpec ex;
    ex.nodes = g.node_count();
    ex.edges = g.edges();
    cfg.graph = ex;
  } else {
    fail("graph.type", "expected \"ba\", \"explicit\" or \"file\"");
  }

  const json& agents = as_array(member(j, "agents", ""), "agents");
  for (std::size_t i = 0; i < agents.size(); ++i) {
    cfg.agents.push_back(parse_agent_spec(agents[i], cfg.space.d, index("agents", i)));
  }

  cfg.rounds = static_cast<int>(as_int(member(j, "rounds", ""), "rounds"));
  if (const json* v = opt_member(j, "seed", "")) cfg.seed = as_u64(*v, "seed");
  if (const json* v = opt_member(j, "snapshot_every", "")) {
    cfg.snapshot_every = static_cast<int>(as_int(*v, "snapshot_every"));
  }
  if (const json* v = opt_member(j, "espace_cap", "")) cfg.espace_cap = as_int(*v, "espace_cap");

  rewrap("", [&] { cfg.validate(); return 0; });
  return cfg;
}

SocietyConfig load_society_config(const std::filesystem::path& file) {
  const std::string text = read_text_file(file);
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    throw ConfigError(file.string(), std::string("invalid json: ") + e.what());
  }
  return parse_society_config(j, file.has_parent_path() ? file.parent_path() : ".");
}

json society_config_json(const SocietyConfig& cfg) {
  json j;
  json space;
  space["d"] = cfg.space.d;
  space["rho"] = cfg.space.rho;
  j["space"] = std::move(space);

  json graph;
  if (const auto* ba = std::get_if<BaGraphSpec>(&cfg.graph)) {
    graph["type"] = "ba";
    graph["nodes"] = ba->nodes;
    graph["m"] = ba->m;
    graph["seed"] = ba->seed;
  } else {
    const auto& ex = std::get<ExplicitGraphSpec>(cfg.graph);
    graph["type"] = "explicit";
    graph["nodes"] = ex.nodes;
    json edges = json::array();
    for (const auto& [a, b] : ex.edges) edges.push_back(json::array({a, b}));
    graph["edges"] = std::move(edges);
  }
  j["graph"] = std::move(graph);

  json agents = json::array();
  for (const auto& spec : cfg.agents) agents.push_back(agent_spec_json(spec));
  j["agents"] = std::move(agents);

  j["rounds"] = cfg.rounds;
  j["seed"] = cfg.seed;
  j["snapshot_every"] = cfg.snapshot_every;
  j["espace_cap"] = cfg.espace_cap;
  return j;
}

// -- graph file ----------------------------------------------------------------

json graph_json(const Graph& g, int m, std::uint64_t seed) {
  json j;
  j["n"] = g.node_count();
  j["m"] = m;
  j["seed"] = seed;
  json edges = json::array();
  for (const auto& [a, b] : g.edges()) edges.push_back(json::array({a, b}));
  j["edges"] = std::move(edges);
  return j;
}

Graph parse_graph_json(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  check_keys(j, {"n", "m", "seed", "edges"}, path);
  const int n = static_cast<int>(as_int(member(j, "n", path), child(path, "n")));
  const json& edges = as_array(member(j, "edges", path), child(path, "edges"));
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string epath = index(child(path, "edges"), i);
    const json& pair = as_array(edges[i], epath);
    if (pair.size() != 2) fail(epath, "expected a pair [a, b]");
    pairs.emplace_back(static_cast<int>(as_int(pair[0], index(epath, 0))),
                       static_cast<int>(as_int(pair[1], index(epath, 1))));
  }
  return rewrap(path, [&] { return Graph(n, std::move(pairs)); });
}

// -- run artifacts ---------------------------------------------------------------

json event_json(const Event& e) {
  json j;
  j["tick"] = e.tick;
  j["seq"] = e.seq;
  j["type"] = to_string(e.type);
  j["agent"] = e.agent;
  switch (e.type) {
    case EventType::Generated:
      j["artefact"] = artefact_json(*e.artefact);
      j["attempts"] = *e.attempts;
      j["class"] = to_string(e.eval->cls);
      j["strength"] = e.eval->strength;
      break;
    case EventType::ProducedEmpty:
      j["artefact"] = nullptr;
      break;
    case EventType::Observed:
      j["artefact_id"] = *e.artefact_id;
      j["stored"] = *e.stored;
      break;
    case EventType::Evaluated:
      j["artefact_id"] = *e.artefact_id;
      j["class"] = to_string(e.eval->cls);
      j["strength"] = e.eval->strength;
      break;
    case EventType::Updated:
      j["artefact_id"] = *e.artefact_id;
      j["target"] = to_string(*e.target);
      break;
    case EventType::PCreative:
    case EventType::HCreative:
      j["artefact_id"] = *e.artefact_id;
      break;
  }
  return j;
}

std::string serialize_events(const std::vector<Event>& events) {
  std::string out;
  for (const auto& e : events) {
    out += canonical_dump(event_json(e));
    out += '\n';
  }
  return out;
}

std::vector<Event> parse_events(const std::string& jsonl) {
  std::vector<Event> events;
  std::int64_t next_artefact_id = 0;
  std::istringstream in(jsonl);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const std::string path = "events.jsonl:" + std::to_string(lineno);
    json j = rewrap(path, [&] { return json::parse(line); });
    if (!j.is_object()) fail(path, "expected an object");

    Event e;
    e.type = parse_event_type(member(j, "type", path), child(path, "type"));
    e.tick = static_cast<int>(as_int(member(j, "tick", path), child(path, "tick")));
    e.seq = as_int(member(j, "seq", path), child(path, "seq"));
    e.agent = static_cast<int>(as_int(member(j, "agent", path), child(path, "agent")));
    switch (e.type) {
      case EventType::Generated:
        e.artefact = parse_artefact(member(j, "artefact", path), child(path, "artefact"));
        if (e.artefact->is_empty()) fail(child(path, "artefact"), "generated artefact cannot be null");
        e.attempts = static_cast<int>(as_int(member(j, "attempts", path), child(path, "attempts")));
        e.eval = Evaluation{parse_eval_class(member(j, "class", path), child(path, "class")),
                            as_double(member(j, "strength", path), child(path, "strength"))};
        e.artefact_id = next_artefact_id++;  // registration order, implicit in the format
        break;
      case EventType::ProducedEmpty:
        e.artefact = parse_artefact(member(j, "artefact", path), child(path, "artefact"));
        if (!e.artefact->is_empty()) fail(child(path, "artefact"), "expected null");
        break;
      case EventType::Observed:
        e.artefact_id = as_int(member(j, "artefact_id", path), child(path, "artefact_id"));
        e.stored = as_bool(member(j, "stored", path), child(path, "stored"));
        break;
      case EventType::Evaluated:
        e.artefact_id = as_int(member(j, "artefact_id", path), child(path, "artefact_id"));
        e.eval = Evaluation{parse_eval_class(member(j, "class", path), child(path, "class")),
                            as_double(member(j, "strength", path), child(path, "strength"))};
        break;
      case EventType::Updated:
        e.artefact_id = as_int(member(j, "artefact_id", path), child(path, "artefact_id"));
        e.target = parse_update_target(member(j, "target", path), child(path, "target"));
        break;
      case EventType::PCreative:
      case EventType::HCreative:
        e.artefact_id = as_int(member(j, "artefact_id", path), child(path, "artefact_id"));
        break;
    }
    events.push_back(std::move(e));
  }
  return events;
}

json snapshot_json(const Snapshot& s) {
  json agents = json::array();
  for (const auto& a : s.agents) {
    json aj;
    aj["id"] = a.id;
    aj["external"] = external_config_json(a.external);
    aj["theta"] = a.theta;
    aj["beta"] = a.beta;
    aj["memory_size"] = a.memory_size;
    agents.push_back(std::move(aj));
  }
  json j;
  j["tick"] = s.tick;
  j["agents"] = std::move(agents);
  return j;
}

std::string serialize_snapshots(const std::vector<Snapshot>& snapshots) {
  std::string out;
  for (const auto& s : snapshots) {
    out += canonical_dump(snapshot_json(s));
    out += '\n';
  }
  return out;
}

std::vector<Snapshot> parse_snapshots(const std::string& jsonl) {
  std::vector<Snapshot> snapshots;
  std::istringstream in(jsonl);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const std::string path = "snapshots.jsonl:" + std::to_string(lineno);
    json j = rewrap(path, [&] { return json::parse(line); });
    if (!j.is_object()) fail(path, "expected an object");

    Snapshot s;
    s.tick = static_cast<int>(as_int(member(j, "tick", path), child(path, "tick")));
    const json& agents = as_array(member(j, "agents", path), child(path, "agents"));
    for (std::size_t i = 0; i < agents.size(); ++i) {
      const std::string apath = index(child(path, "agents"), i);
      const json& aj = agents[i];
      if (!aj.is_object()) fail(apath, "expected an object");
      AgentSnapshot as;
      as.id = static_cast<int>(as_int(member(aj, "id", apath), child(apath, "id")));
      // dimension unknown here; range checks happened when the run was built
      as.external = parse_external_config(member(aj, "external", apath), -1, child(apath, "external"));
      as.theta = as_double(member(aj, "theta", apath), child(apath, "theta"));
      as.beta = as_double(member(aj, "beta", apath), child(apath, "beta"));
      as.memory_size = as_int(member(aj, "memory_size", apath), child(apath, "memory_size"));
      s.agents.push_back(std::move(as));
    }
    snapshots.push_back(std::move(s));
  }
  return snapshots;
}

json final_state_json(const RunResult& r) {
  json agents = json::array();
  for (const auto& a : r.agents) {
    json aj;
    aj["id"] = a.id();
    aj["category"] = to_string(a.category());
    aj["archetype"] = to_string(a.archetype());
    aj["internal"] = internal_config_json(a.internal());
    aj["external"] = external_config_json(a.external());
    aj["params"] = params_json(a.params());
    aj["memory_size"] = static_cast<std::int64_t>(a.memory().size());
    agents.push_back(std::move(aj));
  }
  json registry = json::array();
  for (const auto& rec : r.registry.records()) {
    json rj;
    rj["id"] = rec.id;
    rj["artefact"] = artefact_json(rec.artefact);
    rj["creator"] = rec.creator;
    rj["tick"] = rec.tick;
    registry.push_back(std::move(rj));
  }
  json j;
  j["tick"] = r.snapshots.empty() ? 0 : r.snapshots.back().tick;
  j["agents"] = std::move(agents);
  j["registry"] = std::move(registry);
  return j;
}

std::string config_hash(const json& resolved_config) {
  return fnv1a64_hex(canonical_dump(resolved_config));
}

json manifest_json(const std::string& cfg_hash, std::uint64_t seed,
                   const std::string& started_at, const std::string& finished_at,
                   const std::vector<std::string>& outputs) {
  json j;
  j["config_hash"] = cfg_hash;
  j["seed"] = seed;
  j["version"] = kVersion;
  j["started_at"] = started_at;
  j["finished_at"] = finished_at;
  j["outputs"] = outputs;
  return j;
}

}  // namespace creasim
