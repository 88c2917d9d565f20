#pragma once

#include <span>
#include <vector>

#include "nsg/semigroup.hpp"

namespace nsg {

/// A relative ideal of a numerical semigroup S: a subset I of Z, bounded
/// below, with I + S contained in I.
///
/// Stored in canonical form as the finite part below the conductor c (the
/// smallest integer with [c, inf) inside I) plus the implicit tail [c, inf).
class RelativeIdeal {
 public:
  /// S itself, viewed as an ideal over S.
  static RelativeIdeal whole(const NumericalSemigroup& ambient);

  /// The ideal generated by `gens`, i.e. the union of g + S.
  static RelativeIdeal generated_by(const NumericalSemigroup& ambient, std::span<const Integer> gens);

  /// Builds an ideal from a membership mask over [lo, lo + mask.size()) with
  /// everything at or above lo + mask.size() included. Normalizes to canonical
  /// form and throws Error{NotAnIdeal} unless the set is S-stable.
  static RelativeIdeal from_mask(const NumericalSemigroup& ambient, Integer lo, std::vector<bool> mask);

  const NumericalSemigroup& ambient() const noexcept { return ambient_; }
  Integer min() const noexcept { return min_; }
  Integer conductor() const noexcept { return conductor_; }

  /// Sorted elements in [min, conductor).
  std::vector<Integer> head() const;

  bool contains(Integer x) const noexcept {
    if (x >= conductor_) return true;
    if (x < min_) return false;
    return mask_[static_cast<std::size_t>(x - min_)];
  }

  /// I + a.
  RelativeIdeal shifted(Integer a) const;

  friend bool operator==(const RelativeIdeal& a, const RelativeIdeal& b) noexcept {
    return a.min_ == b.min_ && a.conductor_ == b.conductor_ && a.mask_ == b.mask_ &&
           a.ambient_ == b.ambient_;
  }

 private:
  RelativeIdeal(NumericalSemigroup ambient, Integer min, Integer conductor, std::vector<bool> mask)
      : ambient_(std::move(ambient)), min_(min), conductor_(conductor), mask_(std::move(mask)) {}

  NumericalSemigroup ambient_;
  Integer min_ = 0;
  Integer conductor_ = 0;
  std::vector<bool> mask_;  // mask_[i] <=> min_ + i in I, for min_ + i < conductor_
};

struct TraceReport {
  RelativeIdeal trace;
  std::vector<Integer> trace_min_gens;
  Integer residue = 0;
  std::vector<Integer> missing;  // S \ tr(S)
  bool gorenstein = false;
  bool nearly_gorenstein = false;
  Integer gap_bound = 0;  // g(S) - n(S)
  bool question_holds = false;  // residue <= gap_bound
};

struct GapBoundCheck {
  Integer residue = 0;
  Integer gap_bound = 0;
  bool holds = false;
  Integer slack = 0;  // gap_bound - residue
};

/// K(S) = {z : F - z not in S}; contains 0, conductor F + 1.
RelativeIdeal canonical_ideal(const NumericalSemigroup& s);

/// S - I = {z : z + I inside S}.
RelativeIdeal dual_ideal(const NumericalSemigroup& s, const RelativeIdeal& ideal);

/// Minkowski sum I + J.
RelativeIdeal ideal_sum(const RelativeIdeal& i, const RelativeIdeal& j);

/// Elements x of I with x - s outside I for every nonzero s in S.
std::vector<Integer> minimal_generators(const RelativeIdeal& ideal);

/// tr(S) = K + (S - K), the residue |S \ tr(S)|, and the derived flags.
TraceReport trace_and_residue(const NumericalSemigroup& s);

GapBoundCheck gap_bound_check(const NumericalSemigroup& s);

}  // namespace nsg
