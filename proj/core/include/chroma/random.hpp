#pragma once

#include <cstdint>
#include <random>

#include "chroma/geom.hpp"

namespace chroma {

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Independent generator for sample `index` of a run seeded with `seed`.
/// Sampling loops draw from one stream per index so that any split of the
/// index range across workers produces the same samples.
inline std::mt19937_64 derived_stream(std::uint64_t seed, std::uint64_t index) {
  return std::mt19937_64(mix64(mix64(seed) ^ mix64(index + 0x632be59bd9b4e019ULL)));
}

inline double uniform01(std::mt19937_64& rng) {
  return std::generate_canonical<double, 53>(rng);
}

inline Point uniform_on_circle(Point center, double radius, std::mt19937_64& rng) {
  const double theta = 2.0 * 3.14159265358979323846 * uniform01(rng);
  return {center.x + radius * std::cos(theta), center.y + radius * std::sin(theta)};
}

inline Point uniform_in_disk(Point center, double radius, std::mt19937_64& rng) {
  const double r = radius * std::sqrt(uniform01(rng));
  return uniform_on_circle(center, r, rng);
}

}  // namespace chroma
