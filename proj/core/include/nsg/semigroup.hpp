#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "nsg/error.hpp"

namespace nsg {

using Integer = std::int64_t;

/// Largest membership window the library will allocate (number of entries).
inline constexpr Integer kMaxWindow = Integer{1} << 28;

/// A numerical semigroup given by its minimal generators.
///
/// Construction reduces any generating set to the unique minimal one and
/// precomputes a membership table over [0, n1 * ne], the Apery set with
/// respect to the multiplicity and the Frobenius number. The object is
/// immutable; copies share the cached tables.
///
/// The whole of N (generators {1}) is admitted, with Frobenius number -1.
class NumericalSemigroup {
 public:
  /// Builds the semigroup generated by `raw_generators`.
  /// Throws Error{EmptyInput | NonPositiveGenerator | GcdNotOne | Overflow |
  /// WindowTooLarge}.
  static NumericalSemigroup from_generators(std::span<const Integer> raw_generators);
  static NumericalSemigroup from_generators(std::initializer_list<Integer> raw_generators);

  /// Minimal generators n1 < ... < ne.
  const std::vector<Integer>& generators() const noexcept;
  Integer multiplicity() const noexcept { return generators().front(); }
  Integer largest_generator() const noexcept { return generators().back(); }
  std::size_t embedding_dimension() const noexcept { return generators().size(); }

  /// True when the raw input was not already a minimal generating set.
  bool was_reduced() const noexcept;

  bool contains(Integer x) const noexcept;
  Integer frobenius() const noexcept;

  /// Ap(S, n1): smallest element of each residue class mod n1, indexed by residue.
  const std::vector<Integer>& apery() const noexcept;

  /// Upper end W of the membership window [0, W].
  Integer window() const noexcept;

  bool is_natural() const noexcept { return generators().size() == 1 && generators()[0] == 1; }

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) noexcept {
    return a.data_ == b.data_ || a.generators() == b.generators();
  }

 private:
  struct Data;
  explicit NumericalSemigroup(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

struct GapProfile {
  std::vector<Integer> gaps;
  Integer genus = 0;
  Integer frobenius = -1;
  /// Number of semigroup elements below the Frobenius number.
  Integer non_gap_count = 0;
};

struct PseudoFrobeniusSet {
  std::vector<Integer> elements;
  Integer type = 0;
};

NumericalSemigroup new_semigroup(std::span<const Integer> raw_generators);

inline bool contains(const NumericalSemigroup& s, Integer x) noexcept { return s.contains(x); }
inline Integer frobenius(const NumericalSemigroup& s) noexcept { return s.frobenius(); }
std::vector<Integer> apery_set(const NumericalSemigroup& s);

GapProfile gap_profile(const NumericalSemigroup& s);

/// Gaps nu with nu + n_i in S for every minimal generator n_i.
/// Throws Error{TrivialSemigroup} for S = N.
PseudoFrobeniusSet pseudo_frobenius(const NumericalSemigroup& s);

/// z in S  <=>  F - z not in S, for every integer z. True for N.
bool is_symmetric(const NumericalSemigroup& s) noexcept;

Integer checked_mul(Integer a, Integer b);
Integer checked_add(Integer a, Integer b);
Integer gcd_of(std::span<const Integer> values) noexcept;

}  // namespace nsg
