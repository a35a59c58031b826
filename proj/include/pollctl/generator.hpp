#ifndef POLLCTL_GENERATOR_HPP
#define POLLCTL_GENERATOR_HPP

#include <cstdint>
#include <random>

#include "pollctl/geo.hpp"

namespace pollctl {

struct GenParams {
  int dimension = 2;
  Norm norm = Norm::EUCLIDEAN;
  std::size_t n_voters = 10;
  std::size_t n_sites = 5;
  std::size_t n_candidates = 2;
  std::uint64_t seed = 0;
  Rational bound_min = 0;
  Rational bound_max = 2;
  long long box = 10;         // coordinates live in [0, box]
  long long denominator = 4;  // coordinate/bound grid step 1/denominator
  bool spread_sites = false;  // space sites so no voter can reach two of them
};

// Deterministic under seed: identical parameters give identical instances,
// byte for byte after serialization.
GeoInstance generate_instance(const GenParams& params);

// Uniform draw from [0, n) off a seeded engine; the tiny modulo bias is fine
// for fixture generation and keeps the byte stream platform-independent.
std::uint64_t rnd_below(std::mt19937_64& rng, std::uint64_t n);

Rational rnd_rational(std::mt19937_64& rng, const Rational& lo, const Rational& hi,
                      long long denom);

}  // namespace pollctl

#endif
