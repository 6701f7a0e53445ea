#include "creasim/constraints.hpp"

#include <cmath>
#include <stdexcept>

namespace creasim {

void Region::validate(int d) const {
  if (d >= 0 && static_cast<int>(center.size()) != d) {
    throw std::invalid_argument("region center must have d components");
  }
  for (double c : center) {
    if (!(c >= 0.0 && c <= 1.0)) {
      throw std::invalid_argument("region center components must be in [0, 1]");
    }
  }
  if (!(radius > 0.0)) throw std::invalid_argument("region radius must be > 0");
}

void WeightedConstraint::validate(int d) const {
  if (!(weight >= 0.0 && weight <= 1.0)) {
    throw std::invalid_argument("constraint weight must be in [0, 1]");
  }
  region.validate(d);
}

void InternalConfig::validate(int d) const {
  if (groups.empty()) throw std::invalid_argument("internal config needs at least one group");
  for (const auto& group : groups) {
    if (group.empty()) throw std::invalid_argument("internal constraint group must be non-empty");
    for (const auto& wc : group) wc.validate(d);
  }
}

void ExternalConfig::validate(int d) const {
  for (const auto& wc : constraints) wc.validate(d);
}

std::string to_string(Category c) {
  switch (c) {
    case Category::Human: return "Human";
    case Category::Ccs: return "Ccs";
    case Category::Cad: return "Cad";
  }
  throw std::logic_error("unknown category");
}

Category category_from_string(const std::string& s) {
  if (s == "Human") return Category::Human;
  if (s == "Ccs") return Category::Ccs;
  if (s == "Cad") return Category::Cad;
  throw std::invalid_argument("unknown category '" + s + "' (expected Human, Ccs or Cad)");
}

double total_weight(const ExternalConfig& ec) {
  double sum = 0.0;
  for (const auto& wc : ec.constraints) sum += wc.weight;
  return sum;
}

bool feasible(const Artefact& a, const InternalConfig& ic, const SpaceConfig& cfg) {
  if (a.is_empty()) return false;
  const auto pos = real_coords(a, cfg);
  for (const auto& group : ic.groups) {
    bool all_satisfied = true;
    for (const auto& wc : group) {
      if (wc.weight <= 0.0) continue;  // inactive
      if (normalized_distance(pos, wc.region.center) > wc.region.radius) {
        all_satisfied = false;
        break;
      }
    }
    if (all_satisfied) return true;
  }
  return false;
}

double alignment(const Artefact& a, const ExternalConfig& ec, const SpaceConfig& cfg) {
  const auto pos = real_coords(a, cfg);  // throws on empty
  const double W = total_weight(ec);
  if (W <= 0.0) return kNeutralAlignment;
  double sum = 0.0;
  for (const auto& wc : ec.constraints) {
    if (wc.weight <= 0.0) continue;
    const double dist = normalized_distance(pos, wc.region.center);
    sum += wc.weight * std::max(0.0, 1.0 - dist / wc.region.radius);
  }
  return sum / W;
}

std::vector<Artefact> potential_generation_space(const InternalConfig& ic,
                                                 const ExternalConfig& ec,
                                                 const SpaceConfig& cfg,
                                                 std::int64_t cap) {
  const bool genius = total_weight(ec) <= 0.0;
  std::vector<Artefact> out;
  for (auto& a : enumerate_space(cfg, cap)) {
    if (!feasible(a, ic, cfg)) continue;
    if (genius || alignment(a, ec, cfg) > 0.0) out.push_back(std::move(a));
  }
  return out;
}

double config_distance(const ExternalConfig& a, const ExternalConfig& b,
                       const SpaceConfig& cfg) {
  (void)cfg;
  if (a.constraints.size() != b.constraints.size()) {
    throw std::invalid_argument("config_distance: constraint counts differ");
  }
  if (a.constraints.empty()) return 0.0;
  double sum = 0.0;
  for (std::size_t i = 0; i < a.constraints.size(); ++i) {
    const auto& ca = a.constraints[i];
    const auto& cb = b.constraints[i];
    sum += normalized_distance(ca.region.center, cb.region.center) +
           std::abs(ca.weight - cb.weight);
  }
  return sum / static_cast<double>(a.constraints.size());
}

CategoryTemplate make_cad_template(const InternalConfig& human,
                                   const ConstraintGroup& extension,
                                   const SpaceConfig& cfg, std::int64_t cap) {
  InternalConfig ext_only{{extension}};
  human.validate(cfg.d);
  ext_only.validate(cfg.d);
  for (const auto& a : enumerate_space(cfg, cap)) {
    if (feasible(a, human, cfg) && feasible(a, ext_only, cfg)) {
      throw std::invalid_argument(
          "cad template: extension group overlaps the human groups");
    }
  }
  InternalConfig merged = human;
  merged.groups.push_back(extension);
  return CategoryTemplate{Category::Cad, std::move(merged)};
}

}  // namespace creasim
