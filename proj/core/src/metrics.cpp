#include "creasim/metrics.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace creasim {

namespace {

std::size_t class_index(EvalClass c) { return static_cast<std::size_t>(c); }

// artefact_id -> creator, from the Generated events.
std::unordered_map<std::int64_t, int> creators(const std::vector<Event>& log) {
  std::unordered_map<std::int64_t, int> map;
  for (const auto& e : log) {
    if (e.type == EventType::Generated && e.artefact_id) map[*e.artefact_id] = e.agent;
  }
  return map;
}

}  // namespace

int strength_bin(double r) {
  if (r < 0.0 || r > 1.0) throw std::invalid_argument("strength out of [0, 1]");
  return std::min(kStrengthBins - 1, static_cast<int>(r * kStrengthBins));
}

void EvalDistribution::add(const Evaluation& e) {
  ++class_counts[class_index(e.cls)];
  if (e.cls == EvalClass::Positive) ++positive_hist[static_cast<std::size_t>(strength_bin(e.strength))];
  if (e.cls == EvalClass::Negative) ++negative_hist[static_cast<std::size_t>(strength_bin(e.strength))];
}

void EvalDistribution::merge(const EvalDistribution& other) {
  for (std::size_t i = 0; i < class_counts.size(); ++i) class_counts[i] += other.class_counts[i];
  for (std::size_t i = 0; i < positive_hist.size(); ++i) {
    positive_hist[i] += other.positive_hist[i];
    negative_hist[i] += other.negative_hist[i];
  }
}

std::int64_t EvalDistribution::total() const {
  return class_counts[0] + class_counts[1] + class_counts[2];
}

double EvalDistribution::pmf(EvalClass c) const {
  const std::int64_t n = total();
  if (n == 0) return 0.0;
  return static_cast<double>(class_counts[class_index(c)]) / static_cast<double>(n);
}

EvalPartition eval_partition(const Agent& agent, const std::vector<Artefact>& artefacts) {
  EvalPartition p;
  for (const auto& a : artefacts) {
    switch (agent.evaluate(a).cls) {
      case EvalClass::Positive: p.positive.push_back(a); break;
      case EvalClass::Negative: p.negative.push_back(a); break;
      case EvalClass::NonDecidable: p.null.push_back(a); break;
    }
  }
  return p;
}

EvalDistributionEstimate estimate_eval_distribution(const std::vector<Agent>& agents,
                                                    const std::vector<ExternalConfig>& externals,
                                                    const std::vector<Artefact>& artefacts) {
  if (agents.empty()) throw std::invalid_argument("estimator: no agents");
  if (externals.empty()) throw std::invalid_argument("estimator: no external samples");
  for (const auto& g : agents) {
    if (!(g.internal() == agents.front().internal())) {
      throw std::invalid_argument("estimator: agents must share one internal config");
    }
  }

  EvalDistributionEstimate out;
  out.per_artefact.resize(artefacts.size());
  for (std::size_t i = 0; i < artefacts.size(); ++i) {
    for (const auto& g : agents) {
      for (const auto& ec : externals) {
        out.per_artefact[i].add(g.evaluate_under(artefacts[i], ec));
      }
    }
    out.pooled.merge(out.per_artefact[i]);
  }
  return out;
}

std::vector<Artefact> union_generation_space(const std::vector<Agent>& agents,
                                             const SpaceConfig& cfg, std::int64_t cap) {
  std::set<Artefact> acc;
  for (const auto& g : agents) {
    auto space = potential_generation_space(g.internal(), g.external(), cfg, cap);
    acc.insert(space.begin(), space.end());
  }
  return {acc.begin(), acc.end()};
}

std::vector<Artefact> union_generation_space(const std::vector<AgentSpec>& specs,
                                             const SpaceConfig& cfg, std::int64_t cap) {
  std::set<Artefact> acc;
  for (const auto& s : specs) {
    auto space = potential_generation_space(s.internal, s.external, cfg, cap);
    acc.insert(space.begin(), space.end());
  }
  return {acc.begin(), acc.end()};
}

std::vector<double> convergence_series(const std::vector<Snapshot>& snapshots,
                                       const SpaceConfig& cfg) {
  std::vector<double> series;
  series.reserve(snapshots.size());
  for (const auto& snap : snapshots) {
    const auto& agents = snap.agents;
    if (agents.size() < 2) {
      series.push_back(0.0);  // no pairs to average over
      continue;
    }
    double sum = 0.0;
    std::int64_t pairs = 0;
    for (std::size_t i = 0; i < agents.size(); ++i) {
      for (std::size_t j = i + 1; j < agents.size(); ++j) {
        sum += config_distance(agents[i].external, agents[j].external, cfg);
        ++pairs;
      }
    }
    series.push_back(sum / static_cast<double>(pairs));
  }
  return series;
}

std::int64_t influence(int agent_id, const std::vector<Event>& log) {
  const auto creator = creators(log);
  std::int64_t count = 0;
  for (const auto& e : log) {
    if (e.type != EventType::Updated || !e.artefact_id) continue;
    auto it = creator.find(*e.artefact_id);
    if (it != creator.end() && it->second == agent_id && e.agent != agent_id) ++count;
  }
  return count;
}

std::vector<InfluenceRow> influence_by_degree(const std::vector<Event>& log, const Graph& graph) {
  const auto creator = creators(log);
  std::vector<InfluenceRow> rows(static_cast<std::size_t>(graph.node_count()));
  for (int i = 0; i < graph.node_count(); ++i) {
    rows[static_cast<std::size_t>(i)].agent_id = i;
    rows[static_cast<std::size_t>(i)].degree = graph.degree(i);
  }
  for (const auto& e : log) {
    if (!e.artefact_id) continue;
    auto it = creator.find(*e.artefact_id);
    if (it == creator.end()) continue;
    auto& row = rows[static_cast<std::size_t>(it->second)];
    if (e.type == EventType::Updated && e.agent != it->second) ++row.influence;
    if (e.type == EventType::Evaluated && e.eval) {
      switch (e.eval->cls) {
        case EvalClass::Positive: ++row.positive_received; break;
        case EvalClass::Negative: ++row.negative_received; break;
        case EvalClass::NonDecidable: ++row.null_received; break;
      }
    }
  }
  return rows;
}

double coverage(const Agent& agent, const std::vector<Event>& log, const SpaceConfig& cfg,
                std::int64_t cap) {
  std::size_t denom;
  if (agent.archetype() == Archetype::FiniteGenerator) {
    denom = agent.support().size();
  } else {
    denom = potential_generation_space(agent.internal(), agent.external(), cfg, cap).size();
  }
  if (denom == 0) return 0.0;

  std::unordered_set<Artefact, ArtefactHash> produced;
  for (const auto& e : log) {
    if (e.type == EventType::Generated && e.agent == agent.id() && e.artefact) {
      produced.insert(*e.artefact);
    }
  }
  return std::min(1.0, static_cast<double>(produced.size()) / static_cast<double>(denom));
}

std::string to_string(const Form& f) {
  switch (f.kind) {
    case FormKind::TwoH: return "2H";
    case FormKind::CH: return "CH";
    case FormKind::AIH: return "AIH";
    case FormKind::TwoAI: return "2AI";
    case FormKind::Other:
      return "other(" + to_string(f.generator) + "," + to_string(f.evaluator) + ")";
  }
  throw std::logic_error("unknown form");
}

Form classify_form(Category generator, Category evaluator) {
  Form f;
  f.generator = generator;
  f.evaluator = evaluator;
  if (generator == Category::Human && evaluator == Category::Human) {
    f.kind = FormKind::TwoH;
  } else if (generator == Category::Cad && evaluator == Category::Human) {
    f.kind = FormKind::CH;
  } else if (generator == Category::Ccs && evaluator == Category::Human) {
    f.kind = FormKind::AIH;
  } else if (generator == Category::Ccs && evaluator == Category::Ccs) {
    f.kind = FormKind::TwoAI;
  } else {
    f.kind = FormKind::Other;
  }
  return f;
}

CreativityCounts creativity_counts(const std::vector<Event>& log) {
  CreativityCounts c;
  for (const auto& e : log) {
    if (e.type == EventType::PCreative) {
      ++c.p_by_agent[e.agent];
      ++c.p_total;
    } else if (e.type == EventType::HCreative) {
      ++c.h_by_agent[e.agent];
      ++c.h_total;
    }
  }
  return c;
}

}  // namespace creasim
