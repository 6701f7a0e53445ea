#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "creasim/agent.hpp"
#include "creasim/network.hpp"
#include "creasim/space.hpp"

namespace creasim {

struct BaGraphSpec {
  int nodes = 0;
  int m = 1;
  std::uint64_t seed = 0;

  friend bool operator==(const BaGraphSpec&, const BaGraphSpec&) = default;
};

struct ExplicitGraphSpec {
  int nodes = 0;
  std::vector<std::pair<int, int>> edges;

  friend bool operator==(const ExplicitGraphSpec&, const ExplicitGraphSpec&) = default;
};

/// File references are resolved to an explicit spec at config load time, so
/// a resolved config fully determines the run.
using GraphSpec = std::variant<BaGraphSpec, ExplicitGraphSpec>;

Graph build_graph(const GraphSpec& spec);
int graph_spec_nodes(const GraphSpec& spec);

struct SocietyConfig {
  SpaceConfig space;
  GraphSpec graph;
  std::vector<AgentSpec> agents;  // exactly one per graph node
  int rounds = 1;
  std::uint64_t seed = 0;
  int snapshot_every = 1;
  std::int64_t espace_cap = 1'000'000;  // enumeration bound for finite supports

  void validate() const;
  friend bool operator==(const SocietyConfig&, const SocietyConfig&) = default;
};

enum class EventType {
  Generated,
  ProducedEmpty,
  Observed,
  Evaluated,
  Updated,
  PCreative,
  HCreative,
};

std::string to_string(EventType t);

enum class UpdateTarget { External, Evaluation, Generation };

std::string to_string(UpdateTarget t);

/// One log record. `agent` is the subject: the producer for Generated /
/// ProducedEmpty / PCreative / HCreative, the observer / evaluator /
/// updater otherwise. Only the fields belonging to the type are set.
struct Event {
  EventType type = EventType::Generated;
  int tick = 0;
  std::int64_t seq = 0;
  int agent = 0;
  std::optional<Artefact> artefact;        // Generated; ProducedEmpty carries empty
  std::optional<std::int64_t> artefact_id; // Observed/Evaluated/Updated/PCreative/HCreative
  std::optional<int> attempts;             // Generated
  std::optional<Evaluation> eval;          // Generated (self), Evaluated
  std::optional<UpdateTarget> target;      // Updated
  std::optional<bool> stored;              // Observed
};

/// One record per successful production. Ids are global and strictly
/// increasing; the empty artefact is never registered.
struct ArtefactRecord {
  std::int64_t id = 0;
  Artefact artefact;
  int creator = 0;
  int tick = 0;
};

/// Everything society has ever seen produced, with first-creator accounting
/// for society-level novelty.
class GlobalRegistry {
 public:
  /// Appends a record; returns its id and whether the value is new to the
  /// registry (the H-novelty test).
  std::pair<std::int64_t, bool> register_artefact(const Artefact& a, int creator, int tick);

  bool contains(const Artefact& a) const;
  const std::vector<ArtefactRecord>& records() const { return records_; }

  /// Record for an id; throws on unknown ids.
  const ArtefactRecord& record(std::int64_t id) const;

 private:
  std::vector<ArtefactRecord> records_;
  std::unordered_map<Artefact, std::int64_t, ArtefactHash> first_by_value_;
};

/// True iff the point is new to society / to this agent's own memory.
/// The empty artefact is never creative.
bool is_h_creative(const GlobalRegistry& registry, const Artefact& a);
bool is_p_creative(const Agent& agent, const Artefact& a);

struct AgentSnapshot {
  int id = 0;
  ExternalConfig external;
  double theta = 0.0;
  double beta = 0.0;
  std::int64_t memory_size = 0;
};

struct Snapshot {
  int tick = 0;
  std::vector<AgentSnapshot> agents;
};

struct RunResult {
  std::vector<Event> events;
  std::vector<Snapshot> snapshots;
  GlobalRegistry registry;
  std::vector<Agent> agents;  // final states
  Graph graph;
  SocietyConfig config;       // resolved config the run was built from
};

/// One live simulation. Ticks are 1-based; snapshots are taken at tick 0
/// and after every `snapshot_every`-th tick (plus the final tick).
class Society {
 public:
  explicit Society(SocietyConfig config);

  /// Runs one tick for every agent in ascending id order, appending to the
  /// event log. Returns the events added by this call.
  std::vector<Event> step();

  int current_tick() const { return tick_; }
  const std::vector<Agent>& agents() const { return agents_; }
  const Graph& graph() const { return graph_; }
  const GlobalRegistry& registry() const { return registry_; }
  const std::vector<Event>& events() const { return events_; }

  Snapshot take_snapshot() const;

  /// Runs the configured number of rounds and moves the state out.
  RunResult finish();

 private:
  void broadcast(int creator, const Artefact& a, std::int64_t artefact_id,
                 const Evaluation& self_eval, std::vector<Event>& out);
  void apply_updates(Agent& agent, const Artefact& a, const Evaluation& e,
                     std::int64_t artefact_id, std::vector<Event>& out);
  Event base_event(EventType type, int agent);

  SocietyConfig config_;
  Graph graph_;
  std::vector<Agent> agents_;
  GlobalRegistry registry_;
  std::vector<Event> events_;
  std::vector<Snapshot> snapshots_;
  int tick_ = 0;
  std::int64_t next_seq_ = 0;
};

/// Convenience wrapper: construct, run all rounds, return the result.
RunResult run(SocietyConfig config);

}  // namespace creasim
