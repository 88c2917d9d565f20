#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include "nsg/constructions.hpp"
#include "nsg/semigroup.hpp"

namespace nsg::harness {

/// Seeded generator with a portable bounded draw (std::mt19937_64's output
/// sequence is fixed by the standard; the distributions are not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  Integer uniform(Integer lo, Integer hi);
  bool coin() { return (engine_() & 1U) != 0; }

 private:
  std::mt19937_64 engine_;
};

/// Multiplicity m uniform in [min_multiplicity, max_multiplicity]; further
/// generators drawn from [m + 1, 3m] until the gcd is 1, then more are added
/// while a fair coin comes up heads. Non-minimal draws are reduced away.
NumericalSemigroup random_semigroup(Rng& rng, Integer min_multiplicity, Integer max_multiplicity);

/// A valid gluing spec with factor multiplicities in [2, max_multiplicity].
/// lambda and mu are drawn among non-generator elements below 4 times the
/// factor's multiplicity. Throws Error{InvalidArgument} if none is found.
GluingSpec random_gluing_spec(Rng& rng, Integer max_multiplicity);

/// A semigroup with multiplicity in [2, max_multiplicity] and a lifting factor
/// k in [1, max_k] coprime to its multiplicity.
std::pair<NumericalSemigroup, Integer> random_lifting(Rng& rng, Integer max_multiplicity, Integer max_k);

}  // namespace nsg::harness
