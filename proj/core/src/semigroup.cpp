#include "nsg/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace nsg {

struct NumericalSemigroup::Data {
  std::vector<Integer> generators;
  bool reduced = false;
  Integer window = 0;
  std::vector<bool> member;  // member[x] for x in [0, window]
  std::vector<Integer> apery;
  Integer frobenius = -1;
};

Integer checked_mul(Integer a, Integer b) {
  Integer out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(ErrorCode::Overflow,
                "integer overflow in " + std::to_string(a) + " * " + std::to_string(b));
  }
  return out;
}

Integer checked_add(Integer a, Integer b) {
  Integer out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(ErrorCode::Overflow,
                "integer overflow in " + std::to_string(a) + " + " + std::to_string(b));
  }
  return out;
}

Integer gcd_of(std::span<const Integer> values) noexcept {
  Integer g = 0;
  for (Integer v : values) g = std::gcd(g, v);
  return g;
}

namespace {

// Keeps each generator that is not a combination of the smaller kept ones.
std::vector<Integer> minimalize(std::vector<Integer> sorted_unique) {
  const Integer top = sorted_unique.back();
  if (top > kMaxWindow) {
    throw Error(ErrorCode::WindowTooLarge, "generator " + std::to_string(top) + " too large");
  }
  std::vector<bool> reach(static_cast<std::size_t>(top) + 1, false);
  reach[0] = true;
  std::vector<Integer> kept;
  for (Integer g : sorted_unique) {
    if (reach[static_cast<std::size_t>(g)]) continue;
    kept.push_back(g);
    for (Integer x = g; x <= top; ++x) {
      if (reach[static_cast<std::size_t>(x - g)]) reach[static_cast<std::size_t>(x)] = true;
    }
  }
  return kept;
}

}  // namespace

NumericalSemigroup NumericalSemigroup::from_generators(std::initializer_list<Integer> raw) {
  return from_generators(std::span<const Integer>(raw.begin(), raw.size()));
}

NumericalSemigroup NumericalSemigroup::from_generators(std::span<const Integer> raw) {
  if (raw.empty()) throw Error(ErrorCode::EmptyInput, "no generators given");
  for (Integer g : raw) {
    if (g <= 0) {
      throw Error(ErrorCode::NonPositiveGenerator,
                  "generators must be positive, got " + std::to_string(g));
    }
  }
  if (gcd_of(raw) != 1) throw Error(ErrorCode::GcdNotOne, "gcd must be 1");

  std::vector<Integer> sorted(raw.begin(), raw.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  auto data = std::make_shared<Data>();
  data->generators = minimalize(std::move(sorted));
  // Reordering alone does not count as a reduction; duplicates do.
  data->reduced = data->generators.size() != raw.size();

  const auto& gens = data->generators;
  const Integer n1 = gens.front();
  data->window = checked_mul(n1, gens.back());
  if (data->window > kMaxWindow) {
    throw Error(ErrorCode::WindowTooLarge,
                "membership window " + std::to_string(data->window) + " exceeds limit");
  }

  const auto w = static_cast<std::size_t>(data->window);
  data->member.assign(w + 1, false);
  data->member[0] = true;
  for (std::size_t x = 1; x <= w; ++x) {
    for (Integer g : gens) {
      const auto ug = static_cast<std::size_t>(g);
      if (ug > x) break;
      if (data->member[x - ug]) {
        data->member[x] = true;
        break;
      }
    }
  }

  data->apery.assign(static_cast<std::size_t>(n1), -1);
  Integer found = 0;
  for (std::size_t x = 0; x <= w && found < n1; ++x) {
    if (!data->member[x]) continue;
    auto& slot = data->apery[x % static_cast<std::size_t>(n1)];
    if (slot < 0) {
      slot = static_cast<Integer>(x);
      ++found;
    }
  }
  if (found != n1) {
    throw Error(ErrorCode::InternalInconsistency, "Apery set does not fit in the membership window");
  }
  data->frobenius = *std::max_element(data->apery.begin(), data->apery.end()) - n1;
  return NumericalSemigroup(std::move(data));
}

const std::vector<Integer>& NumericalSemigroup::generators() const noexcept { return data_->generators; }
bool NumericalSemigroup::was_reduced() const noexcept { return data_->reduced; }
Integer NumericalSemigroup::frobenius() const noexcept { return data_->frobenius; }
const std::vector<Integer>& NumericalSemigroup::apery() const noexcept { return data_->apery; }
Integer NumericalSemigroup::window() const noexcept { return data_->window; }

bool NumericalSemigroup::contains(Integer x) const noexcept {
  if (x < 0) return false;
  if (x > data_->frobenius) return true;
  return data_->member[static_cast<std::size_t>(x)];
}

NumericalSemigroup new_semigroup(std::span<const Integer> raw_generators) {
  return NumericalSemigroup::from_generators(raw_generators);
}

std::vector<Integer> apery_set(const NumericalSemigroup& s) { return s.apery(); }

GapProfile gap_profile(const NumericalSemigroup& s) {
  GapProfile out;
  out.frobenius = s.frobenius();
  for (Integer x = 1; x <= out.frobenius; ++x) {
    if (!s.contains(x)) out.gaps.push_back(x);
  }
  out.genus = static_cast<Integer>(out.gaps.size());
  out.non_gap_count = out.frobenius + 1 - out.genus;
  return out;
}

PseudoFrobeniusSet pseudo_frobenius(const NumericalSemigroup& s) {
  if (s.is_natural()) {
    throw Error(ErrorCode::TrivialSemigroup, "N has no pseudo-Frobenius numbers");
  }
  PseudoFrobeniusSet out;
  for (Integer nu = 1; nu <= s.frobenius(); ++nu) {
    if (s.contains(nu)) continue;
    const bool maximal = std::all_of(s.generators().begin(), s.generators().end(),
                                     [&](Integer g) { return s.contains(nu + g); });
    if (maximal) out.elements.push_back(nu);
  }
  out.type = static_cast<Integer>(out.elements.size());
  return out;
}

bool is_symmetric(const NumericalSemigroup& s) noexcept {
  const Integer f = s.frobenius();
  for (Integer z = 0; z <= f; ++z) {
    if (s.contains(z) == s.contains(f - z)) return false;
  }
  return true;
}

}  // namespace nsg
