#include "nsg/harness/random.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <vector>

namespace nsg::harness {

Integer Rng::uniform(Integer lo, Integer hi) {
  if (hi < lo) throw Error(ErrorCode::InvalidArgument, "empty range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<Integer>(engine_());
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return lo + static_cast<Integer>(x % span);
}

NumericalSemigroup random_semigroup(Rng& rng, Integer min_multiplicity, Integer max_multiplicity) {
  if (min_multiplicity < 2 || max_multiplicity < min_multiplicity) {
    throw Error(ErrorCode::InvalidArgument, "multiplicity range must satisfy 2 <= min <= max");
  }
  const Integer m = rng.uniform(min_multiplicity, max_multiplicity);
  std::vector<Integer> gens{m};
  while (gcd_of(gens) != 1) gens.push_back(rng.uniform(m + 1, 3 * m));
  while (static_cast<Integer>(gens.size()) < m && rng.coin()) gens.push_back(rng.uniform(m + 1, 3 * m));
  return NumericalSemigroup::from_generators(gens);
}

namespace {

Integer pick_non_generator(Rng& rng, const NumericalSemigroup& s) {
  std::vector<Integer> pool;
  const auto& gens = s.generators();
  for (Integer x = 2; x <= 4 * s.multiplicity(); ++x) {
    if (s.contains(x) && !std::binary_search(gens.begin(), gens.end(), x)) pool.push_back(x);
  }
  if (pool.empty()) return 0;
  return pool[static_cast<std::size_t>(rng.uniform(0, static_cast<Integer>(pool.size()) - 1))];
}

}  // namespace

GluingSpec random_gluing_spec(Rng& rng, Integer max_multiplicity) {
  constexpr int kAttempts = 10000;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    GluingSpec spec{random_semigroup(rng, 2, max_multiplicity), random_semigroup(rng, 2, max_multiplicity)};
    spec.lambda = pick_non_generator(rng, spec.left);
    spec.mu = pick_non_generator(rng, spec.right);
    if (spec.lambda == 0 || spec.mu == 0) continue;
    try {
      glue(spec);
      return spec;
    } catch (const Error&) {
      // rejected draw; try again
    }
  }
  throw Error(ErrorCode::InvalidArgument, "no valid gluing found");
}

std::pair<NumericalSemigroup, Integer> random_lifting(Rng& rng, Integer max_multiplicity, Integer max_k) {
  if (max_k < 1) throw Error(ErrorCode::InvalidArgument, "max k must be at least 1");
  auto s = random_semigroup(rng, 2, max_multiplicity);
  Integer k = rng.uniform(1, max_k);
  while (std::gcd(k, s.multiplicity()) != 1) k = rng.uniform(1, max_k);
  return {s, k};
}

}  // namespace nsg::harness
