#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "creasim/space.hpp"

namespace creasim {

/// One rule, as a ball in normalized-distance units around a free (not
/// grid-snapped) center in [0,1]^d.
struct Region {
  std::vector<double> center;
  double radius = 0.0;  // > 0

  /// Negative d skips the dimension check (for contexts that do not know it).
  void validate(int d) const;
  friend bool operator==(const Region&, const Region&) = default;
};

struct WeightedConstraint {
  double weight = 1.0;  // in [0, 1]
  Region region;

  void validate(int d) const;
  friend bool operator==(const WeightedConstraint&, const WeightedConstraint&) = default;
};

/// Conjunction of rules: a point satisfies the group when it lies inside
/// every member ball with positive weight. Zero-weight members are inactive.
using ConstraintGroup = std::vector<WeightedConstraint>;

/// Hard "cognitive" limits. Groups are alternatives (disjunction), which is
/// what lets a computer-aided configuration be the union of a human part and
/// an extension part.
struct InternalConfig {
  std::vector<ConstraintGroup> groups;

  void validate(int d) const;
  friend bool operator==(const InternalConfig&, const InternalConfig&) = default;
};

/// Soft "cultural" preferences. May be empty or all-zero-weight: such an
/// agent (the misunderstood genius) has no cultural pull at all.
struct ExternalConfig {
  std::vector<WeightedConstraint> constraints;

  void validate(int d) const;
  friend bool operator==(const ExternalConfig&, const ExternalConfig&) = default;
};

enum class Category { Human, Ccs, Cad };

std::string to_string(Category c);
Category category_from_string(const std::string& s);

/// Internal-config template for one of the three system categories.
struct CategoryTemplate {
  Category name = Category::Human;
  InternalConfig internal;
};

/// Alignment score when no external constraint carries weight. Any constant
/// in (0,1) works; 0.5 centers the score range so a genius self-accepts.
inline constexpr double kNeutralAlignment = 0.5;

double total_weight(const ExternalConfig& ec);

/// True iff `a` is a point lying inside some group (all positive-weight
/// members satisfied). The empty artefact is never feasible.
bool feasible(const Artefact& a, const InternalConfig& ic, const SpaceConfig& cfg);

/// Weighted mean of the triangular kernel max(0, 1 - dist/radius) over the
/// constraints; kNeutralAlignment when the total weight is zero. In [0, 1].
/// Throws on the empty artefact.
double alignment(const Artefact& a, const ExternalConfig& ec, const SpaceConfig& cfg);

/// Every point that is feasible and (unless the external weights vanish)
/// has positive alignment: everything the agent can emit with nonzero
/// probability. Lexicographic order. Throws if the space exceeds `cap`.
std::vector<Artefact> potential_generation_space(const InternalConfig& ic,
                                                 const ExternalConfig& ec,
                                                 const SpaceConfig& cfg,
                                                 std::int64_t cap);

/// Mean over matched positions of center distance (normalized by sqrt(d))
/// plus weight difference. Requires equal constraint counts.
double config_distance(const ExternalConfig& a, const ExternalConfig& b,
                       const SpaceConfig& cfg);

/// Cad template: the human groups plus one extension group whose feasible
/// points are disjoint from the human ones. Disjointness is checked by
/// enumeration; throws if it fails or the space exceeds `cap`.
CategoryTemplate make_cad_template(const InternalConfig& human,
                                   const ConstraintGroup& extension,
                                   const SpaceConfig& cfg, std::int64_t cap);

}  // namespace creasim
