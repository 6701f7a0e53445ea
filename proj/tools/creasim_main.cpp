// creasim: configuration in, simulation artifacts out. Subcommands:
// gen-network, run, analyze, classify. Exit codes: 0 ok, 2 usage/config
// problem, 3 runtime invariant violation.

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "creasim/errors.hpp"
#include "creasim/io.hpp"
#include "creasim/metrics.hpp"
#include "creasim/society.hpp"
#include "creasim/version.hpp"

namespace fs = std::filesystem;
using creasim::json;

namespace {

struct GenNetworkArgs {
  int nodes = 0;
  int m = 1;
  std::uint64_t seed = 0;
  std::string out = "graph.json";
};

int cmd_gen_network(const GenNetworkArgs& args, bool quiet) {
  if (args.m < 1) throw creasim::ConfigError("--m", "m must be >= 1");
  if (args.nodes < std::max(args.m, 2)) {
    throw creasim::ConfigError("--nodes", "nodes must be >= max(m, 2)");
  }
  creasim::Graph g = creasim::generate_ba(args.nodes, args.m, args.seed);
  const json doc = creasim::graph_json(g, args.m, args.seed);
  creasim::write_text_file(args.out, creasim::canonical_dump(doc) + "\n");
  if (!quiet) {
    const auto stats = creasim::degree_stats(g);
    std::cout << "edges=" << g.edge_count() << " max_degree=" << stats.max_degree << " -> "
              << args.out << "\n";
  }
  return 0;
}

struct RunArgs {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::string out = "out";
};

int cmd_run(const RunArgs& args, bool quiet) {
  creasim::SocietyConfig cfg = creasim::load_society_config(args.config);
  if (args.seed) cfg.seed = *args.seed;

  const json resolved = creasim::society_config_json(cfg);
  const std::string hash = creasim::config_hash(resolved);
  const std::string started_at = creasim::iso8601_utc_now();

  creasim::RunResult result = creasim::run(cfg);

  int graph_m = 0;
  std::uint64_t graph_seed = 0;
  if (const auto* ba = std::get_if<creasim::BaGraphSpec>(&result.config.graph)) {
    graph_m = ba->m;
    graph_seed = ba->seed;
  }

  const fs::path dir = args.out;
  fs::create_directories(dir);
  creasim::write_text_file(dir / "events.jsonl", creasim::serialize_events(result.events));
  creasim::write_text_file(dir / "snapshots.jsonl", creasim::serialize_snapshots(result.snapshots));
  creasim::write_text_file(dir / "final_state.json",
                           creasim::canonical_dump(creasim::final_state_json(result)) + "\n");
  creasim::write_text_file(
      dir / "graph.json",
      creasim::canonical_dump(creasim::graph_json(result.graph, graph_m, graph_seed)) + "\n");
  creasim::write_text_file(dir / "resolved_config.json", creasim::canonical_dump(resolved) + "\n");

  const std::vector<std::string> outputs = {"events.jsonl", "final_state.json", "graph.json",
                                            "resolved_config.json", "snapshots.jsonl"};
  const json manifest = creasim::manifest_json(hash, cfg.seed, started_at,
                                               creasim::iso8601_utc_now(), outputs);
  creasim::write_text_file(dir / "manifest.json", creasim::canonical_dump(manifest) + "\n");

  if (!quiet) {
    std::cout << "run " << hash << ": " << cfg.rounds << " ticks, " << result.events.size()
              << " events, " << result.registry.records().size() << " artefacts -> "
              << dir.string() << "\n";
  }
  return 0;
}

struct AnalyzeArgs {
  std::string run_dir;
  std::string out;
  std::int64_t espace_cap = 1'000'000;
};

int cmd_analyze(const AnalyzeArgs& args, bool quiet) {
  const fs::path run_dir = args.run_dir;
  const fs::path out_dir = args.out.empty() ? run_dir : fs::path(args.out);
  fs::create_directories(out_dir);

  creasim::SocietyConfig cfg = creasim::load_society_config(run_dir / "resolved_config.json");
  const json resolved = creasim::society_config_json(cfg);
  const std::string run_id = creasim::config_hash(resolved);

  const auto events = creasim::parse_events(creasim::read_text_file(run_dir / "events.jsonl"));
  const auto snapshots =
      creasim::parse_snapshots(creasim::read_text_file(run_dir / "snapshots.jsonl"));
  json graph_doc;
  try {
    graph_doc = json::parse(creasim::read_text_file(run_dir / "graph.json"));
  } catch (const creasim::ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw creasim::ConfigError((run_dir / "graph.json").string(),
                               std::string("invalid json: ") + e.what());
  }
  const creasim::Graph graph = creasim::parse_graph_json(graph_doc, "graph.json");

  // convergence (position-matched configs required; otherwise reported null)
  std::optional<std::vector<double>> convergence;
  try {
    convergence = creasim::convergence_series(snapshots, cfg.space);
  } catch (const std::exception&) {
    convergence = std::nullopt;
  }

  const creasim::CreativityCounts counts = creasim::creativity_counts(events);

  // cumulative creativity per snapshot tick
  std::vector<std::int64_t> p_cum(snapshots.size(), 0), h_cum(snapshots.size(), 0);
  for (std::size_t i = 0; i < snapshots.size(); ++i) {
    for (const auto& e : events) {
      if (e.tick > snapshots[i].tick) continue;
      if (e.type == creasim::EventType::PCreative) ++p_cum[i];
      if (e.type == creasim::EventType::HCreative) ++h_cum[i];
    }
  }

  // metrics.csv
  std::string metrics_csv =
      "run_id,tick,mean_pairwise_config_distance,p_creative_cum,h_creative_cum\n";
  for (std::size_t i = 0; i < snapshots.size(); ++i) {
    metrics_csv += run_id;
    metrics_csv += ',' + std::to_string(snapshots[i].tick) + ',';
    if (convergence) metrics_csv += creasim::canonical_double((*convergence)[i]);
    metrics_csv += ',' + std::to_string(p_cum[i]) + ',' + std::to_string(h_cum[i]) + '\n';
  }
  creasim::write_text_file(out_dir / "metrics.csv", metrics_csv);

  // influence.csv
  const auto rows = creasim::influence_by_degree(events, graph);
  std::string influence_csv =
      "agent_id,degree,influence,positive_received,negative_received,null_received\n";
  for (const auto& r : rows) {
    influence_csv += std::to_string(r.agent_id) + ',' + std::to_string(r.degree) + ',' +
                     std::to_string(r.influence) + ',' + std::to_string(r.positive_received) +
                     ',' + std::to_string(r.negative_received) + ',' +
                     std::to_string(r.null_received) + '\n';
  }
  creasim::write_text_file(out_dir / "influence.csv", influence_csv);

  // coverage against the tick-0 agent states
  json coverage = json::array();
  for (std::size_t i = 0; i < cfg.agents.size(); ++i) {
    json entry;
    entry["agent"] = static_cast<int>(i);
    try {
      creasim::Agent agent(static_cast<int>(i), cfg.agents[i], cfg.space, cfg.seed,
                           args.espace_cap);
      entry["value"] = creasim::coverage(agent, events, cfg.space, args.espace_cap);
    } catch (const std::exception&) {
      entry["value"] = nullptr;  // space not enumerable under the cap
    }
    coverage.push_back(std::move(entry));
  }

  // pooled evaluation distribution over the run's Evaluated events
  creasim::EvalDistribution pooled;
  for (const auto& e : events) {
    if (e.type == creasim::EventType::Evaluated && e.eval) pooled.add(*e.eval);
  }
  json dist;
  dist["samples"] = pooled.total();
  json pmf;
  pmf["+"] = pooled.pmf(creasim::EvalClass::Positive);
  pmf["-"] = pooled.pmf(creasim::EvalClass::Negative);
  pmf["null"] = pooled.pmf(creasim::EvalClass::NonDecidable);
  dist["pmf"] = std::move(pmf);
  dist["positive_hist"] = pooled.positive_hist;
  dist["negative_hist"] = pooled.negative_hist;

  // form matrix over category pairs present in the config
  std::set<creasim::Category> present;
  for (const auto& spec : cfg.agents) present.insert(spec.category);
  json forms = json::array();
  for (creasim::Category g : present) {
    for (creasim::Category v : present) {
      json f;
      f["generator"] = creasim::to_string(g);
      f["evaluator"] = creasim::to_string(v);
      f["form"] = creasim::to_string(creasim::classify_form(g, v));
      forms.push_back(std::move(f));
    }
  }

  json per_agent = json::array();
  for (std::size_t i = 0; i < cfg.agents.size(); ++i) {
    const int id = static_cast<int>(i);
    json c;
    c["agent"] = id;
    auto pit = counts.p_by_agent.find(id);
    auto hit = counts.h_by_agent.find(id);
    c["p"] = pit == counts.p_by_agent.end() ? 0 : pit->second;
    c["h"] = hit == counts.h_by_agent.end() ? 0 : hit->second;
    per_agent.push_back(std::move(c));
  }
  json creativity;
  creativity["p_total"] = counts.p_total;
  creativity["h_total"] = counts.h_total;
  creativity["per_agent"] = std::move(per_agent);

  json convergence_json;
  {
    json ticks = json::array();
    for (const auto& s : snapshots) ticks.push_back(s.tick);
    convergence_json["ticks"] = std::move(ticks);
    if (convergence) {
      convergence_json["values"] = *convergence;
    } else {
      convergence_json["values"] = nullptr;
    }
  }

  json report;
  report["run_id"] = run_id;
  report["creativity"] = std::move(creativity);
  report["convergence"] = std::move(convergence_json);
  report["coverage"] = std::move(coverage);
  report["eval_distribution"] = std::move(dist);
  report["forms"] = std::move(forms);
  report["notes"] = json::array({creasim::kEstimatorNote,
                                 "pooled distribution tallies peer evaluations from the run log",
                                 "coverage measured against tick-0 potential spaces"});
  creasim::write_text_file(out_dir / "report.json", creasim::canonical_dump(report) + "\n");

  if (!quiet) {
    std::cout << "analyze " << run_id << ": metrics.csv influence.csv report.json -> "
              << out_dir.string() << "\n";
  }
  return 0;
}

int cmd_classify(const std::string& config_path, bool quiet) {
  (void)quiet;  // the table is the output, --quiet does not suppress it
  creasim::SocietyConfig cfg = creasim::load_society_config(config_path);
  std::set<creasim::Category> present;
  for (const auto& spec : cfg.agents) present.insert(spec.category);
  std::cout << "generator evaluator form\n";
  for (creasim::Category g : present) {
    for (creasim::Category v : present) {
      std::cout << creasim::to_string(g) << ' ' << creasim::to_string(v) << ' '
                << creasim::to_string(creasim::classify_form(g, v)) << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"creative-society simulation toolkit"};
  app.set_version_flag("--version", creasim::kVersion);
  app.require_subcommand(1);
  app.fallthrough();

  bool quiet = false;
  app.add_flag("--quiet", quiet, "suppress informational stdout");

  GenNetworkArgs gen_args;
  CLI::App* gen = app.add_subcommand("gen-network", "generate a preferential-attachment graph");
  gen->add_option("--nodes", gen_args.nodes, "node count, must be >= max(m, 2)")->required();
  gen->add_option("--m", gen_args.m, "edges added per new node")->required();
  gen->add_option("--seed", gen_args.seed, "generator seed");
  gen->add_option("--out", gen_args.out, "output path (default graph.json)");

  RunArgs run_args;
  CLI::App* run = app.add_subcommand("run", "execute a society run");
  run->add_option("--config", run_args.config, "society config json")->required();
  std::uint64_t run_seed = 0;
  CLI::Option* seed_opt = run->add_option("--seed", run_seed, "override the config seed");
  run->add_option("--out", run_args.out, "output directory (default out)");

  AnalyzeArgs an_args;
  CLI::App* analyze = app.add_subcommand("analyze", "compute metrics from a completed run");
  analyze->add_option("--run", an_args.run_dir, "run output directory")->required();
  analyze->add_option("--out", an_args.out, "where to write tables (default: the run directory)");
  analyze->add_option("--espace-cap", an_args.espace_cap, "enumeration bound for coverage");

  std::string classify_config;
  CLI::App* classify = app.add_subcommand("classify", "print the form-of-creativity table");
  classify->add_option("--config", classify_config, "society config json")->required();

  try {
    app.parse(argc, argv);
    if (*seed_opt) run_args.seed = run_seed;

    if (gen->parsed()) return cmd_gen_network(gen_args, quiet);
    if (run->parsed()) return cmd_run(run_args, quiet);
    if (analyze->parsed()) return cmd_analyze(an_args, quiet);
    if (classify->parsed()) return cmd_classify(classify_config, quiet);
    return 2;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const creasim::ConfigError& e) {
    std::cerr << "creasim: error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "creasim: error: " << e.what() << "\n";
    return 3;
  }
}
