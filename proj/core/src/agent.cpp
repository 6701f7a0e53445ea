#include "creasim/agent.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "creasim/log.hpp"

namespace creasim {

std::string to_string(EvalClass c) {
  switch (c) {
    case EvalClass::Positive: return "+";
    case EvalClass::Negative: return "-";
    case EvalClass::NonDecidable: return "null";
  }
  throw std::logic_error("unknown eval class");
}

void OperatorParams::validate() const {
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw std::invalid_argument("params: lambda must be in [0, 1]");
  if (!(theta > 0.0 && theta < 1.0)) throw std::invalid_argument("params: theta must be in (0, 1)");
  if (!(theta_min <= theta_max)) throw std::invalid_argument("params: theta clamp bounds out of order");
  if (!(beta > 0.0)) throw std::invalid_argument("params: beta must be > 0");
  if (!(beta_min <= beta_max)) throw std::invalid_argument("params: beta clamp bounds out of order");
  if (candidates < 1) throw std::invalid_argument("params: candidates must be >= 1");
  if (max_attempts < 1) throw std::invalid_argument("params: max_attempts must be >= 1");
  if (eta_center < 0.0 || eta_theta < 0.0 || eta_beta < 0.0) {
    throw std::invalid_argument("params: learning rates must be >= 0");
  }
}

bool Memory::insert(const Artefact& a, int tick) {
  if (!set_.insert(a).second) return false;
  entries_.emplace_back(tick, a);
  return true;
}

double novelty(const Artefact& a, const Memory& m, const SpaceConfig& cfg) {
  const auto pos = real_coords(a, cfg);  // throws on empty
  if (m.entries().empty()) return 1.0;
  double min_dist = 1.0;
  for (const auto& [tick, stored] : m.entries()) {
    (void)tick;
    min_dist = std::min(min_dist, normalized_distance(pos, real_coords(stored, cfg)));
    if (min_dist == 0.0) break;
  }
  return min_dist;
}

std::string to_string(Archetype a) {
  switch (a) {
    case Archetype::None: return "None";
    case Archetype::MisunderstoodGenius: return "MisunderstoodGenius";
    case Archetype::AlwaysSatisfied: return "AlwaysSatisfied";
    case Archetype::AlwaysUnsatisfied: return "AlwaysUnsatisfied";
    case Archetype::FiniteGenerator: return "FiniteGenerator";
    case Archetype::RandomWalk: return "RandomWalk";
  }
  throw std::logic_error("unknown archetype");
}

Archetype archetype_from_string(const std::string& s) {
  if (s == "None") return Archetype::None;
  if (s == "MisunderstoodGenius") return Archetype::MisunderstoodGenius;
  if (s == "AlwaysSatisfied") return Archetype::AlwaysSatisfied;
  if (s == "AlwaysUnsatisfied") return Archetype::AlwaysUnsatisfied;
  if (s == "FiniteGenerator") return Archetype::FiniteGenerator;
  if (s == "RandomWalk") return Archetype::RandomWalk;
  throw std::invalid_argument("unknown archetype '" + s + "'");
}

void AgentSpec::validate(const SpaceConfig& cfg) const {
  internal.validate(cfg.d);
  external.validate(cfg.d);
  params.validate();
}

Agent::Agent(int id, AgentSpec spec, const SpaceConfig& cfg, std::uint64_t run_seed,
             std::int64_t enumeration_cap)
    : id_(id),
      category_(spec.category),
      archetype_(spec.archetype),
      space_(cfg),
      internal_(std::move(spec.internal)),
      external_(std::move(spec.external)),
      params_(spec.params),
      update_flags_(spec.update),
      self_update_(spec.self_update),
      rng_(derive_stream_seed(run_seed, static_cast<std::uint64_t>(id))) {
  space_.validate();
  internal_.validate(space_.d);
  external_.validate(space_.d);
  params_.validate();

  if (archetype_ == Archetype::MisunderstoodGenius) {
    for (auto& wc : external_.constraints) wc.weight = 0.0;
  }
  if (archetype_ == Archetype::FiniteGenerator) {
    support_ = potential_generation_space(internal_, external_, space_, enumeration_cap);
  }
}

bool Agent::observe(const Artefact& a, int tick) {
  if (!a.is_point()) return false;
  if (!feasible(a, internal_, space_)) return false;
  return memory_.insert(a, tick);
}

Evaluation Agent::evaluate(const Artefact& a) const { return evaluate_under(a, external_); }

Evaluation Agent::evaluate_under(const Artefact& a, const ExternalConfig& ec) const {
  if (a.is_empty() || !feasible(a, internal_, space_)) {
    return {EvalClass::NonDecidable, 0.0};
  }
  if (archetype_ == Archetype::AlwaysSatisfied) return {EvalClass::Positive, 1.0};
  if (archetype_ == Archetype::AlwaysUnsatisfied) return {EvalClass::Negative, 1.0};

  const double score = params_.lambda * alignment(a, ec, space_) +
                       (1.0 - params_.lambda) * novelty(a, memory_, space_);
  const EvalClass cls = score >= params_.theta ? EvalClass::Positive : EvalClass::Negative;
  const double span = std::max(params_.theta, 1.0 - params_.theta);
  const double strength = std::clamp(std::abs(score - params_.theta) / span, 0.0, 1.0);
  return {cls, strength};
}

Artefact Agent::random_grid_point() {
  std::vector<int> coords(space_.d);
  for (int i = 0; i < space_.d; ++i) {
    coords[i] = static_cast<int>(rng_.next_below(static_cast<std::uint64_t>(space_.rho) + 1));
  }
  return Artefact::point(std::move(coords));
}

Artefact Agent::generate() {
  std::vector<Artefact> candidates;
  candidates.reserve(static_cast<std::size_t>(params_.candidates));

  if (archetype_ == Archetype::FiniteGenerator) {
    if (support_.empty()) return Artefact::empty();
    for (int i = 0; i < params_.candidates; ++i) {
      candidates.push_back(support_[rng_.next_below(support_.size())]);
    }
  } else {
    int budget = 64 * params_.candidates;
    while (static_cast<int>(candidates.size()) < params_.candidates && budget-- > 0) {
      Artefact a = random_grid_point();
      if (feasible(a, internal_, space_)) candidates.push_back(std::move(a));
    }
    if (candidates.empty()) return Artefact::empty();
  }

  // Selection mass ~ alignment^beta. With zero total external weight the
  // alignment is the neutral constant, so the pick is uniform.
  std::vector<double> mass(candidates.size());
  double total = 0.0;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    mass[i] = std::pow(alignment(candidates[i], external_, space_), params_.beta);
    total += mass[i];
  }
  if (total <= 0.0) return Artefact::empty();

  const double u = rng_.next_real() * total;
  double acc = 0.0;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    acc += mass[i];
    if (u < acc) return candidates[i];
  }
  return candidates.back();  // u landed on the rounding edge
}

ProduceResult Agent::produce(int tick) {
  for (int attempt = 1; attempt <= params_.max_attempts; ++attempt) {
    Artefact a = generate();
    const Evaluation self = evaluate(a);
    if (self.cls == EvalClass::Positive) {
      const bool first_time = !memory_.contains(a);
      memory_.insert(a, tick);
      return {std::move(a), attempt, self, first_time};
    }
  }
  return {Artefact::empty(), params_.max_attempts, {EvalClass::NonDecidable, 0.0}, false};
}

void Agent::update_external(const Artefact& a, const Evaluation& e) {
  if (a.is_empty()) {
    log_debug("agent " + std::to_string(id_) + ": external update skipped, empty artefact");
    return;
  }

  if (archetype_ == Archetype::RandomWalk) {
    // Undirected wandering: the artefact and its evaluation are ignored.
    for (auto& wc : external_.constraints) {
      for (double& c : wc.region.center) {
        c = std::clamp(c + rng_.next_real_range(-params_.eta_center, params_.eta_center),
                       0.0, 1.0);
      }
    }
    return;
  }

  if (e.cls == EvalClass::NonDecidable) return;
  const auto pos = real_coords(a, space_);
  const double step = params_.eta_center * e.strength;
  for (auto& wc : external_.constraints) {
    for (std::size_t i = 0; i < wc.region.center.size(); ++i) {
      const double toward = pos[i] - wc.region.center[i];
      if (e.cls == EvalClass::Positive) {
        wc.region.center[i] += step * toward;
      } else {
        wc.region.center[i] = std::clamp(wc.region.center[i] - step * toward, 0.0, 1.0);
      }
    }
  }
}

void Agent::update_evaluation(const Artefact& a, const Evaluation& e) {
  (void)a;  // aspiration adaptation uses only the judgement
  switch (e.cls) {
    case EvalClass::Positive:
      params_.theta = std::min(params_.theta_max, params_.theta + params_.eta_theta * e.strength);
      break;
    case EvalClass::Negative:
      params_.theta = std::max(params_.theta_min, params_.theta - params_.eta_theta * e.strength);
      break;
    case EvalClass::NonDecidable:
      break;
  }
}

void Agent::update_generation(const Artefact& a, const Evaluation& e) {
  (void)a;
  switch (e.cls) {
    case EvalClass::Positive:
      params_.beta = std::min(params_.beta_max, params_.beta * (1.0 + params_.eta_beta * e.strength));
      break;
    case EvalClass::Negative:
      params_.beta = std::max(params_.beta_min, params_.beta / (1.0 + params_.eta_beta * e.strength));
      break;
    case EvalClass::NonDecidable:
      break;
  }
}

Agent make_archetype(Archetype kind, const AgentSpec& base, int id,
                     const SpaceConfig& cfg, std::uint64_t run_seed,
                     std::int64_t enumeration_cap) {
  AgentSpec spec = base;
  spec.archetype = kind;
  return Agent(id, std::move(spec), cfg, run_seed, enumeration_cap);
}

}  // namespace creasim
