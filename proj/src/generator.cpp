#include "pollctl/generator.hpp"

#include <algorithm>

#include "pollctl/error.hpp"

namespace pollctl {

std::uint64_t rnd_below(std::mt19937_64& rng, std::uint64_t n) {
  return n == 0 ? 0 : rng() % n;
}

Rational rnd_rational(std::mt19937_64& rng, const Rational& lo, const Rational& hi,
                      long long denom) {
  if (hi < lo) throw Error(Errc::INVALID_ARGUMENT, "empty range for random rational");
  BigInt d(denom);
  BigInt a = (numerator(lo) * d) / denominator(lo);  // grid endpoints, rounded inward
  BigInt b = (numerator(hi) * d) / denominator(hi);
  if (b < a) b = a;
  BigInt span = b - a + 1;
  BigInt pick = a + BigInt(rnd_below(rng, span.convert_to<std::uint64_t>()));
  return Rational(pick) / Rational(d);
}

namespace {

Point rnd_point(std::mt19937_64& rng, int dimension, long long box, long long denom) {
  Point p;
  for (int i = 0; i < dimension; ++i)
    p.coords.push_back(rnd_rational(rng, Rational(0), Rational(box), denom));
  return p;
}

std::vector<std::string> rnd_permutation(std::mt19937_64& rng,
                                         const std::vector<std::string>& items) {
  std::vector<std::string> out = items;
  for (std::size_t i = out.size(); i > 1; --i)
    std::swap(out[i - 1], out[rnd_below(rng, i)]);
  return out;
}

}  // namespace

GeoInstance generate_instance(const GenParams& params) {
  if (params.dimension != 1 && params.dimension != 2)
    throw Error(Errc::INVALID_ARGUMENT, "dimension must be 1 or 2");
  if (params.n_candidates == 0)
    throw Error(Errc::INVALID_ARGUMENT, "need at least one candidate");
  if (params.bound_max < params.bound_min || params.bound_min < 0)
    throw Error(Errc::INVALID_ARGUMENT, "invalid bound range");
  if (params.denominator <= 0 || params.box < 0)
    throw Error(Errc::INVALID_ARGUMENT, "invalid coordinate grid");

  std::mt19937_64 rng(params.seed);
  GeoInstance inst;
  inst.metric = {params.dimension, params.norm};
  for (std::size_t c = 1; c <= params.n_candidates; ++c)
    inst.candidates.push_back("c" + std::to_string(c));

  if (params.spread_sites) {
    // Stride exceeds twice the largest bound, so two sites can never share a
    // voter; voters scatter around a random site.
    BigInt ceil_bound =
        (numerator(params.bound_max) + denominator(params.bound_max) - 1) /
        denominator(params.bound_max);
    long long stride = 2 * ceil_bound.convert_to<long long>() + 1;
    for (std::size_t s = 0; s < params.n_sites; ++s) {
      Point at = make_point(Rational(static_cast<long long>(s) * stride));
      if (params.dimension == 2) at.coords.push_back(Rational(0));
      inst.sites.push_back({"s" + std::to_string(s + 1), at});
    }
    for (std::size_t v = 0; v < params.n_voters; ++v) {
      Rational dx = rnd_rational(rng, Rational(-stride, 2), Rational(stride, 2),
                                 params.denominator);
      Rational base = params.n_sites == 0
                          ? Rational(0)
                          : inst.sites[rnd_below(rng, params.n_sites)].location.coords[0];
      Point at = make_point(base + dx);
      if (params.dimension == 2)
        at.coords.push_back(rnd_rational(rng, Rational(0), params.bound_max, params.denominator));
      inst.voters.push_back({"v" + std::to_string(v + 1), at,
                             rnd_rational(rng, params.bound_min, params.bound_max,
                                          params.denominator),
                             rnd_permutation(rng, inst.candidates)});
    }
  } else {
    for (std::size_t s = 0; s < params.n_sites; ++s)
      inst.sites.push_back({"s" + std::to_string(s + 1),
                            rnd_point(rng, params.dimension, params.box, params.denominator)});
    for (std::size_t v = 0; v < params.n_voters; ++v)
      inst.voters.push_back({"v" + std::to_string(v + 1),
                             rnd_point(rng, params.dimension, params.box, params.denominator),
                             rnd_rational(rng, params.bound_min, params.bound_max,
                                          params.denominator),
                             rnd_permutation(rng, inst.candidates)});
  }

  validate_instance(inst);
  return inst;
}

}  // namespace pollctl
