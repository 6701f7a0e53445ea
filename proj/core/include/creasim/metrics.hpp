#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "creasim/agent.hpp"
#include "creasim/network.hpp"
#include "creasim/society.hpp"

namespace creasim {

inline constexpr int kStrengthBins = 20;

/// Attached to every estimator report: the configuration space is sampled
/// from a declared list, and each agent evaluates with its own memory.
inline constexpr const char* kEstimatorNote =
    "external configurations sampled from a declared list; each agent evaluates with its own "
    "memory";

/// Empirical class pmf plus per-class strength histograms (20 bins on [0,1]).
struct EvalDistribution {
  std::array<std::int64_t, 3> class_counts{};  // Positive, Negative, NonDecidable
  std::array<std::int64_t, kStrengthBins> positive_hist{};
  std::array<std::int64_t, kStrengthBins> negative_hist{};

  void add(const Evaluation& e);
  void merge(const EvalDistribution& other);
  std::int64_t total() const;
  /// 0 when no samples were added.
  double pmf(EvalClass c) const;
};

int strength_bin(double r);

struct EvalPartition {
  std::vector<Artefact> positive;
  std::vector<Artefact> negative;
  std::vector<Artefact> null;
};

/// Partition a finite artefact set by the agent's evaluation class.
EvalPartition eval_partition(const Agent& agent, const std::vector<Artefact>& artefacts);

struct EvalDistributionEstimate {
  std::vector<EvalDistribution> per_artefact;  // position-matched with the input sample
  EvalDistribution pooled;
};

/// Evaluate each artefact under every (agent, external sample) pair. All
/// agents must share one internal config; each keeps its own memory (see
/// kEstimatorNote).
EvalDistributionEstimate estimate_eval_distribution(const std::vector<Agent>& agents,
                                                    const std::vector<ExternalConfig>& externals,
                                                    const std::vector<Artefact>& artefacts);

std::vector<Artefact> union_generation_space(const std::vector<Agent>& agents,
                                             const SpaceConfig& cfg, std::int64_t cap);
std::vector<Artefact> union_generation_space(const std::vector<AgentSpec>& specs,
                                             const SpaceConfig& cfg, std::int64_t cap);

/// Mean pairwise config_distance per snapshot; 0 when fewer than two
/// agents. External configs must be position-matched across agents.
std::vector<double> convergence_series(const std::vector<Snapshot>& snapshots,
                                       const SpaceConfig& cfg);

/// Updated events in OTHER agents triggered by this agent's artefacts.
std::int64_t influence(int agent_id, const std::vector<Event>& log);

struct InfluenceRow {
  int agent_id = 0;
  int degree = 0;
  std::int64_t influence = 0;
  std::int64_t positive_received = 0;
  std::int64_t negative_received = 0;
  std::int64_t null_received = 0;
};

/// One row per node, ascending id. Received counts tally neighbor
/// evaluations of the agent's artefacts by class.
std::vector<InfluenceRow> influence_by_degree(const std::vector<Event>& log, const Graph& graph);

/// Distinct non-empty outputs / potential-space size, clamped to [0,1].
/// A FiniteGenerator is measured against its frozen support.
double coverage(const Agent& agent, const std::vector<Event>& log, const SpaceConfig& cfg,
                std::int64_t cap);

enum class FormKind { TwoH, CH, AIH, TwoAI, Other };

struct Form {
  FormKind kind = FormKind::Other;
  Category generator = Category::Human;
  Category evaluator = Category::Human;

  friend bool operator==(const Form&, const Form&) = default;
};

std::string to_string(const Form& f);

Form classify_form(Category generator, Category evaluator);

struct CreativityCounts {
  std::map<int, std::int64_t> p_by_agent;
  std::map<int, std::int64_t> h_by_agent;
  std::int64_t p_total = 0;
  std::int64_t h_total = 0;
};

CreativityCounts creativity_counts(const std::vector<Event>& log);

}  // namespace creasim
