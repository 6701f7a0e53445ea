#pragma once

#include <cstdint>
#include <vector>

namespace creasim {

/// Finite artefact grid: points with integer coordinates in [0, rho]^d,
/// mapped to real positions in [0, 1]^d by dividing by rho.
struct SpaceConfig {
  int d = 2;     // dimensions, >= 1
  int rho = 10;  // grid resolution per dimension, >= 1

  void validate() const;

  /// (rho+1)^d, or -1 if it exceeds `cap`.
  std::int64_t point_count(std::int64_t cap) const;

  friend bool operator==(const SpaceConfig&, const SpaceConfig&) = default;
};

/// A grid point, or the distinguished empty artefact. The empty artefact is
/// a legitimate output of a producing agent but sits outside the grid: it
/// has no coordinates and no distance to anything.
class Artefact {
 public:
  Artefact() = default;  // empty

  static Artefact empty() { return Artefact{}; }
  static Artefact point(std::vector<int> coords);

  bool is_empty() const noexcept { return empty_; }
  bool is_point() const noexcept { return !empty_; }

  /// Coordinates of a point artefact; throws on the empty artefact.
  const std::vector<int>& coords() const;

  friend bool operator==(const Artefact& a, const Artefact& b) {
    return a.empty_ == b.empty_ && a.coords_ == b.coords_;
  }
  /// Lexicographic order with the empty artefact first; used only to make
  /// container contents deterministic.
  friend bool operator<(const Artefact& a, const Artefact& b) {
    if (a.empty_ != b.empty_) return a.empty_;
    return a.coords_ < b.coords_;
  }

 private:
  explicit Artefact(std::vector<int> coords)
      : coords_(std::move(coords)), empty_(false) {}

  std::vector<int> coords_;
  bool empty_ = true;
};

struct ArtefactHash {
  std::size_t operator()(const Artefact& a) const noexcept;
};

/// Real position of a point artefact: coords / rho, componentwise.
/// Throws if the artefact is empty or its coordinates do not fit `cfg`.
std::vector<double> real_coords(const Artefact& a, const SpaceConfig& cfg);

/// Euclidean distance between real vectors, normalized by sqrt(d) so the
/// maximal separation in [0,1]^d is 1 for every dimensionality.
double normalized_distance(const std::vector<double>& x, const std::vector<double>& y);

/// normalized_distance between two point artefacts. Throws on empty inputs.
double norm_distance(const Artefact& a, const Artefact& b, const SpaceConfig& cfg);

/// All (rho+1)^d points in lexicographic coordinate order.
/// Throws "space too large to enumerate" if the count exceeds `cap`.
std::vector<Artefact> enumerate_space(const SpaceConfig& cfg, std::int64_t cap);

}  // namespace creasim
