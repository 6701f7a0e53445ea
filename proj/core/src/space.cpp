#include "creasim/space.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace creasim {

void SpaceConfig::validate() const {
  if (d < 1) throw std::invalid_argument("space: d must be >= 1");
  if (rho < 1) throw std::invalid_argument("space: rho must be >= 1");
}

std::int64_t SpaceConfig::point_count(std::int64_t cap) const {
  validate();
  std::int64_t count = 1;
  for (int i = 0; i < d; ++i) {
    count *= rho + 1;
    if (count > cap) return -1;
  }
  return count;
}

Artefact Artefact::point(std::vector<int> coords) {
  if (coords.empty()) throw std::invalid_argument("artefact: a point needs coordinates");
  return Artefact(std::move(coords));
}

const std::vector<int>& Artefact::coords() const {
  if (empty_) throw std::invalid_argument("empty artefact has no coordinates");
  return coords_;
}

std::size_t ArtefactHash::operator()(const Artefact& a) const noexcept {
  // FNV-1a over the coordinate words; the empty artefact hashes to the basis.
  std::uint64_t h = 14695981039346656037ull;
  if (!a.is_empty()) {
    for (int c : a.coords()) {
      h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(c));
      h *= 1099511628211ull;
    }
  }
  return static_cast<std::size_t>(h);
}

std::vector<double> real_coords(const Artefact& a, const SpaceConfig& cfg) {
  cfg.validate();
  const auto& coords = a.coords();
  if (static_cast<int>(coords.size()) != cfg.d) {
    throw std::invalid_argument("artefact has " + std::to_string(coords.size()) +
                                " coordinates, space has d=" + std::to_string(cfg.d));
  }
  std::vector<double> out(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] < 0 || coords[i] > cfg.rho) {
      throw std::invalid_argument("artefact coordinate out of [0, rho]");
    }
    out[i] = static_cast<double>(coords[i]) / cfg.rho;
  }
  return out;
}

double normalized_distance(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.empty()) {
    throw std::invalid_argument("normalized_distance: dimension mismatch");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double diff = x[i] - y[i];
    sum += diff * diff;
  }
  return std::sqrt(sum / static_cast<double>(x.size()));
}

double norm_distance(const Artefact& a, const Artefact& b, const SpaceConfig& cfg) {
  return normalized_distance(real_coords(a, cfg), real_coords(b, cfg));
}

std::vector<Artefact> enumerate_space(const SpaceConfig& cfg, std::int64_t cap) {
  const std::int64_t count = cfg.point_count(cap);
  if (count < 0) throw std::invalid_argument("space too large to enumerate");

  std::vector<Artefact> out;
  out.reserve(static_cast<std::size_t>(count));
  std::vector<int> coords(cfg.d, 0);
  for (;;) {
    out.push_back(Artefact::point(coords));
    // lexicographic odometer, last coordinate fastest
    int i = cfg.d - 1;
    while (i >= 0 && coords[i] == cfg.rho) coords[i--] = 0;
    if (i < 0) break;
    ++coords[i];
  }
  return out;
}

}  // namespace creasim
