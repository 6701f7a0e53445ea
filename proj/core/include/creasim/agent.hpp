#pragma once

#include <cstdint>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "creasim/constraints.hpp"
#include "creasim/rng.hpp"
#include "creasim/space.hpp"

namespace creasim {

enum class EvalClass { Positive, Negative, NonDecidable };

std::string to_string(EvalClass c);

/// Qualitative class plus strength. NonDecidable always carries strength 0.
struct Evaluation {
  EvalClass cls = EvalClass::NonDecidable;
  double strength = 0.0;

  friend bool operator==(const Evaluation&, const Evaluation&) = default;
};

/// Knobs of the generation/evaluation/update operators. The framework only
/// names the operators; these defaults pin one concrete realization.
struct OperatorParams {
  double lambda = 0.7;      // alignment vs novelty mix in the score
  double theta = 0.5;       // acceptance threshold, in (0, 1)
  double theta_min = 0.1;   // clamp bounds for threshold adaptation
  double theta_max = 0.9;
  double beta = 2.0;        // generation sharpness (selection ~ alignment^beta)
  int candidates = 16;      // points sampled per generate call
  int max_attempts = 8;     // self-filter retries in produce
  double eta_center = 0.1;  // external-center learning rate
  double eta_theta = 0.05;  // threshold learning rate
  double eta_beta = 0.1;    // sharpness learning rate
  double beta_min = 0.25;
  double beta_max = 16.0;

  void validate() const;
  friend bool operator==(const OperatorParams&, const OperatorParams&) = default;
};

/// Everything the agent has observed, with an append-order audit trail.
class Memory {
 public:
  bool contains(const Artefact& a) const { return set_.count(a) > 0; }

  /// False (and no change) when the artefact is already known.
  bool insert(const Artefact& a, int tick);

  std::size_t size() const { return set_.size(); }
  const std::vector<std::pair<int, Artefact>>& entries() const { return entries_; }

 private:
  std::unordered_set<Artefact, ArtefactHash> set_;
  std::vector<std::pair<int, Artefact>> entries_;  // (tick, artefact)
};

/// 1 on empty memory, else the minimum normalized distance to any stored
/// artefact; 0 exactly when the artefact is already known.
double novelty(const Artefact& a, const Memory& m, const SpaceConfig& cfg);

enum class Archetype {
  None,
  MisunderstoodGenius,
  AlwaysSatisfied,
  AlwaysUnsatisfied,
  FiniteGenerator,
  RandomWalk,
};

std::string to_string(Archetype a);
Archetype archetype_from_string(const std::string& s);

struct UpdateFlags {
  bool external = false;
  bool evaluation = false;
  bool generation = false;

  friend bool operator==(const UpdateFlags&, const UpdateFlags&) = default;
};

/// Declarative description of one agent; the config-file unit.
struct AgentSpec {
  Category category = Category::Human;
  Archetype archetype = Archetype::None;
  InternalConfig internal;
  ExternalConfig external;
  OperatorParams params;
  UpdateFlags update;
  bool self_update = false;

  void validate(const SpaceConfig& cfg) const;
  friend bool operator==(const AgentSpec&, const AgentSpec&) = default;
};

struct ProduceResult {
  Artefact artefact;           // empty when no attempt passed the self-filter
  int attempts = 0;
  Evaluation self_eval;        // evaluation of the accepted artefact
  bool first_time = false;     // absent from own memory before self-insertion
};

/// The creative system: constraint configurations, memory, the three
/// operators, and a private deterministic random stream. Internal
/// constraints never change after construction; everything else may.
/// One Agent belongs to one run; it is movable but not concurrently mutable.
class Agent {
 public:
  /// `enumeration_cap` bounds the support precomputation of a
  /// FiniteGenerator; other archetypes ignore it.
  Agent(int id, AgentSpec spec, const SpaceConfig& cfg, std::uint64_t run_seed,
        std::int64_t enumeration_cap);

  int id() const { return id_; }
  Category category() const { return category_; }
  Archetype archetype() const { return archetype_; }
  const SpaceConfig& space() const { return space_; }
  const InternalConfig& internal() const { return internal_; }
  const ExternalConfig& external() const { return external_; }
  const OperatorParams& params() const { return params_; }
  const Memory& memory() const { return memory_; }
  const UpdateFlags& update_flags() const { return update_flags_; }
  bool self_update() const { return self_update_; }
  const std::vector<Artefact>& support() const { return support_; }

  /// Store a received artefact. True iff it was a feasible point not yet in
  /// memory; infeasible artefacts are invisible to this agent.
  bool observe(const Artefact& a, int tick);

  /// Deterministic (c, r) judgement of an artefact against the current
  /// state. Empty or infeasible input is non-decidable.
  Evaluation evaluate(const Artefact& a) const;

  /// evaluate with a substituted external config; memory, internal
  /// constraints and params stay the agent's own.
  Evaluation evaluate_under(const Artefact& a, const ExternalConfig& ec) const;

  /// Draw candidates from the feasible grid (or the precomputed support)
  /// and pick one with probability proportional to alignment^beta.
  /// Returns the empty artefact when nothing can be produced.
  Artefact generate();

  /// generate + self-evaluate, retried up to max_attempts; the first
  /// positively self-evaluated artefact is stored in memory and returned.
  ProduceResult produce(int tick);

  void update_external(const Artefact& a, const Evaluation& e);
  void update_evaluation(const Artefact& a, const Evaluation& e);
  void update_generation(const Artefact& a, const Evaluation& e);

 private:
  Artefact random_grid_point();

  int id_;
  Category category_;
  Archetype archetype_;
  SpaceConfig space_;
  InternalConfig internal_;  // write-once: no mutating access after construction
  ExternalConfig external_;
  OperatorParams params_;
  Memory memory_;
  UpdateFlags update_flags_;
  bool self_update_;
  std::vector<Artefact> support_;  // FiniteGenerator only
  Rng rng_;
};

/// Build an agent with an archetype's defining modification applied
/// (genius: weights zeroed; finite generator: support precomputed; ...).
Agent make_archetype(Archetype kind, const AgentSpec& base, int id,
                     const SpaceConfig& cfg, std::uint64_t run_seed,
                     std::int64_t enumeration_cap);

}  // namespace creasim
