#include "creasim/society.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "creasim/errors.hpp"
#include "creasim/log.hpp"

namespace creasim {

Graph build_graph(const GraphSpec& spec) {
  if (const auto* ba = std::get_if<BaGraphSpec>(&spec)) {
    return generate_ba(ba->nodes, ba->m, ba->seed);
  }
  const auto& ex = std::get<ExplicitGraphSpec>(spec);
  return Graph(ex.nodes, ex.edges);
}

int graph_spec_nodes(const GraphSpec& spec) {
  if (const auto* ba = std::get_if<BaGraphSpec>(&spec)) return ba->nodes;
  return std::get<ExplicitGraphSpec>(spec).nodes;
}

void SocietyConfig::validate() const {
  space.validate();
  int n = graph_spec_nodes(graph);
  if (n <= 0) throw std::invalid_argument("society: graph must have at least one node");
  if (static_cast<int>(agents.size()) != n) {
    throw std::invalid_argument("society: agent count must equal node count");
  }
  if (rounds < 1) throw std::invalid_argument("society: rounds must be >= 1");
  if (snapshot_every <= 0) throw std::invalid_argument("society: snapshot_every must be positive");
  if (espace_cap <= 0) throw std::invalid_argument("society: espace_cap must be positive");
  for (const auto& a : agents) a.validate(space);
}

std::string to_string(EventType t) {
  switch (t) {
    case EventType::Generated: return "generated";
    case EventType::ProducedEmpty: return "produced_empty";
    case EventType::Observed: return "observed";
    case EventType::Evaluated: return "evaluated";
    case EventType::Updated: return "updated";
    case EventType::PCreative: return "p_creative";
    case EventType::HCreative: return "h_creative";
  }
  throw std::logic_error("unknown event type");
}

std::string to_string(UpdateTarget t) {
  switch (t) {
    case UpdateTarget::External: return "external";
    case UpdateTarget::Evaluation: return "evaluation";
    case UpdateTarget::Generation: return "generation";
  }
  throw std::logic_error("unknown update target");
}

std::pair<std::int64_t, bool> GlobalRegistry::register_artefact(const Artefact& a, int creator,
                                                                int tick) {
  if (a.is_empty()) throw std::invalid_argument("registry: cannot register the empty artefact");
  auto id = static_cast<std::int64_t>(records_.size());
  records_.push_back(ArtefactRecord{id, a, creator, tick});
  bool value_new = first_by_value_.emplace(a, id).second;
  return {id, value_new};
}

bool GlobalRegistry::contains(const Artefact& a) const {
  if (a.is_empty()) return false;
  return first_by_value_.count(a) > 0;
}

const ArtefactRecord& GlobalRegistry::record(std::int64_t id) const {
  if (id < 0 || id >= static_cast<std::int64_t>(records_.size())) {
    throw std::out_of_range("registry: unknown artefact id");
  }
  return records_[static_cast<std::size_t>(id)];
}

bool is_h_creative(const GlobalRegistry& registry, const Artefact& a) {
  if (a.is_empty()) return false;
  return !registry.contains(a);
}

bool is_p_creative(const Agent& agent, const Artefact& a) {
  if (a.is_empty()) return false;
  return !agent.memory().contains(a);
}

Society::Society(SocietyConfig config) : config_(std::move(config)) {
  config_.validate();
  graph_ = build_graph(config_.graph);
  agents_.reserve(config_.agents.size());
  for (std::size_t i = 0; i < config_.agents.size(); ++i) {
    agents_.emplace_back(static_cast<int>(i), config_.agents[i], config_.space, config_.seed,
                         config_.espace_cap);
  }
  snapshots_.push_back(take_snapshot());
}

Event Society::base_event(EventType type, int agent) {
  Event e;
  e.type = type;
  e.tick = tick_;
  e.seq = next_seq_++;
  e.agent = agent;
  return e;
}

std::vector<Event> Society::step() {
  ++tick_;
  std::vector<Event> added;
  for (auto& producer : agents_) {
    ProduceResult pr = producer.produce(tick_);
    if (pr.artefact.is_empty()) {
      Event e = base_event(EventType::ProducedEmpty, producer.id());
      e.artefact = Artefact::empty();
      added.push_back(std::move(e));
      continue;
    }

    bool h_novel = is_h_creative(registry_, pr.artefact);
    auto [artefact_id, value_new] = registry_.register_artefact(pr.artefact, producer.id(), tick_);
    (void)value_new;

    Event gen = base_event(EventType::Generated, producer.id());
    gen.artefact = pr.artefact;
    gen.artefact_id = artefact_id;
    gen.attempts = pr.attempts;
    gen.eval = pr.self_eval;
    added.push_back(std::move(gen));

    if (pr.first_time) {
      Event e = base_event(EventType::PCreative, producer.id());
      e.artefact_id = artefact_id;
      added.push_back(std::move(e));
    }
    if (h_novel) {
      Event e = base_event(EventType::HCreative, producer.id());
      e.artefact_id = artefact_id;
      added.push_back(std::move(e));
    }

    broadcast(producer.id(), pr.artefact, artefact_id, pr.self_eval, added);
  }
  events_.insert(events_.end(), added.begin(), added.end());
  return added;
}

void Society::broadcast(int creator, const Artefact& a, std::int64_t artefact_id,
                        const Evaluation& self_eval, std::vector<Event>& out) {
  for (int h : graph_.neighbors(creator)) {
    Agent& observer = agents_[static_cast<std::size_t>(h)];

    bool stored = observer.observe(a, tick_);
    Event obs = base_event(EventType::Observed, h);
    obs.artefact_id = artefact_id;
    obs.stored = stored;
    out.push_back(std::move(obs));

    Evaluation ev = observer.evaluate(a);
    Event evd = base_event(EventType::Evaluated, h);
    evd.artefact_id = artefact_id;
    evd.eval = ev;
    out.push_back(std::move(evd));

    if (ev.cls != EvalClass::NonDecidable) {
      apply_updates(observer, a, ev, artefact_id, out);
    }
  }

  Agent& self = agents_[static_cast<std::size_t>(creator)];
  if (self.self_update() && self_eval.cls != EvalClass::NonDecidable) {
    apply_updates(self, a, self_eval, artefact_id, out);
  }
}

void Society::apply_updates(Agent& agent, const Artefact& a, const Evaluation& e,
                            std::int64_t artefact_id, std::vector<Event>& out) {
  const UpdateFlags& flags = agent.update_flags();
  if (flags.external) {
    agent.update_external(a, e);
    Event u = base_event(EventType::Updated, agent.id());
    u.artefact_id = artefact_id;
    u.target = UpdateTarget::External;
    out.push_back(std::move(u));
  }
  if (flags.evaluation) {
    agent.update_evaluation(a, e);
    Event u = base_event(EventType::Updated, agent.id());
    u.artefact_id = artefact_id;
    u.target = UpdateTarget::Evaluation;
    out.push_back(std::move(u));
  }
  if (flags.generation) {
    agent.update_generation(a, e);
    Event u = base_event(EventType::Updated, agent.id());
    u.artefact_id = artefact_id;
    u.target = UpdateTarget::Generation;
    out.push_back(std::move(u));
  }
}

Snapshot Society::take_snapshot() const {
  Snapshot s;
  s.tick = tick_;
  s.agents.reserve(agents_.size());
  for (const auto& a : agents_) {
    AgentSnapshot as;
    as.id = a.id();
    as.external = a.external();
    as.theta = a.params().theta;
    as.beta = a.params().beta;
    as.memory_size = static_cast<std::int64_t>(a.memory().size());
    s.agents.push_back(std::move(as));
  }
  return s;
}

RunResult Society::finish() {
  for (int t = 0; t < config_.rounds; ++t) {
    step();
    bool last = t + 1 == config_.rounds;
    if (tick_ % config_.snapshot_every == 0 || last) {
      if (snapshots_.empty() || snapshots_.back().tick != tick_) {
        snapshots_.push_back(take_snapshot());
      }
    }
  }
  log_info("run complete: " + std::to_string(tick_) + " ticks, " +
           std::to_string(events_.size()) + " events, " +
           std::to_string(registry_.records().size()) + " artefacts");
  RunResult r;
  r.events = std::move(events_);
  r.snapshots = std::move(snapshots_);
  r.registry = std::move(registry_);
  r.agents = std::move(agents_);
  r.graph = std::move(graph_);
  r.config = std::move(config_);
  return r;
}

RunResult run(SocietyConfig config) {
  Society society(std::move(config));
  return society.finish();
}

}  // namespace creasim
