#include "nsg/ideal.hpp"

#include <algorithm>
#include <string>

namespace nsg {

namespace {

void require_same_ambient(const NumericalSemigroup& a, const NumericalSemigroup& b) {
  if (!(a == b)) throw Error(ErrorCode::AmbientMismatch, "ideals live over different semigroups");
}

std::size_t index_of(Integer x, Integer lo) { return static_cast<std::size_t>(x - lo); }

}  // namespace

RelativeIdeal RelativeIdeal::whole(const NumericalSemigroup& ambient) {
  const Integer zero = 0;
  return generated_by(ambient, std::span<const Integer>(&zero, 1));
}

RelativeIdeal RelativeIdeal::generated_by(const NumericalSemigroup& ambient,
                                          std::span<const Integer> gens) {
  if (gens.empty()) throw Error(ErrorCode::EmptyInput, "an ideal needs at least one generator");
  const Integer lo = *std::min_element(gens.begin(), gens.end());
  const Integer hi = checked_add(lo, ambient.frobenius() + 1);
  std::vector<bool> mask(index_of(hi, lo), false);
  for (Integer g : gens) {
    for (Integer x = g; x < hi; ++x) {
      if (ambient.contains(x - g)) mask[index_of(x, lo)] = true;
    }
  }
  return from_mask(ambient, lo, std::move(mask));
}

RelativeIdeal RelativeIdeal::from_mask(const NumericalSemigroup& ambient, Integer lo,
                                       std::vector<bool> mask) {
  const auto len = mask.size();
  std::size_t first = 0;
  while (first < len && !mask[first]) ++first;
  std::size_t end = len;
  while (end > first && mask[end - 1]) --end;

  const Integer min = lo + static_cast<Integer>(first);
  const Integer conductor = lo + static_cast<Integer>(end);
  std::vector<bool> trimmed(mask.begin() + static_cast<std::ptrdiff_t>(first),
                            mask.begin() + static_cast<std::ptrdiff_t>(end));
  RelativeIdeal out(ambient, min, conductor, std::move(trimmed));

  for (Integer x = min; x < conductor; ++x) {
    if (!out.contains(x)) continue;
    for (Integer g : ambient.generators()) {
      if (!out.contains(x + g)) {
        throw Error(ErrorCode::NotAnIdeal, "set is not stable: " + std::to_string(x) + " + " +
                                               std::to_string(g) + " is missing");
      }
    }
  }
  return out;
}

std::vector<Integer> RelativeIdeal::head() const {
  std::vector<Integer> out;
  for (Integer x = min_; x < conductor_; ++x) {
    if (mask_[index_of(x, min_)]) out.push_back(x);
  }
  return out;
}

RelativeIdeal RelativeIdeal::shifted(Integer a) const {
  return RelativeIdeal(ambient_, checked_add(min_, a), checked_add(conductor_, a), mask_);
}

RelativeIdeal canonical_ideal(const NumericalSemigroup& s) {
  if (s.is_natural()) throw Error(ErrorCode::TrivialSemigroup, "N has no canonical ideal here");
  const Integer f = s.frobenius();
  std::vector<bool> mask(index_of(f + 1, 0), false);
  for (Integer z = 0; z <= f; ++z) mask[index_of(z, 0)] = !s.contains(f - z);
  return RelativeIdeal::from_mask(s, 0, std::move(mask));
}

RelativeIdeal dual_ideal(const NumericalSemigroup& s, const RelativeIdeal& ideal) {
  require_same_ambient(s, ideal.ambient());
  // z + I lies in S iff z + g lies in S for every minimal generator g of I.
  const auto gens = minimal_generators(ideal);
  const Integer lo = -ideal.min();
  const Integer tail = s.frobenius() + 1 - ideal.min();
  std::vector<bool> mask(index_of(std::max(tail, lo), lo), false);
  for (Integer z = lo; z < tail; ++z) {
    mask[index_of(z, lo)] =
        std::all_of(gens.begin(), gens.end(), [&](Integer g) { return s.contains(z + g); });
  }
  return RelativeIdeal::from_mask(s, lo, std::move(mask));
}

RelativeIdeal ideal_sum(const RelativeIdeal& i, const RelativeIdeal& j) {
  require_same_ambient(i.ambient(), j.ambient());
  // I + J is the union of a + J over the minimal generators a of I.
  const auto gens = minimal_generators(i);
  const Integer lo = checked_add(i.min(), j.min());
  const Integer tail = checked_add(i.min(), j.conductor());
  std::vector<bool> mask(index_of(tail, lo), false);
  for (Integer x = lo; x < tail; ++x) {
    mask[index_of(x, lo)] =
        std::any_of(gens.begin(), gens.end(), [&](Integer a) { return j.contains(x - a); });
  }
  return RelativeIdeal::from_mask(i.ambient(), lo, std::move(mask));
}

std::vector<Integer> minimal_generators(const RelativeIdeal& ideal) {
  const auto& s = ideal.ambient();
  const Integer stop = checked_add(ideal.conductor(), s.multiplicity());
  std::vector<Integer> out;
  for (Integer x = ideal.min(); x < stop; ++x) {
    if (!ideal.contains(x)) continue;
    const bool minimal = std::none_of(s.generators().begin(), s.generators().end(),
                                      [&](Integer g) { return ideal.contains(x - g); });
    if (minimal) out.push_back(x);
  }
  return out;
}

TraceReport trace_and_residue(const NumericalSemigroup& s) {
  if (s.is_natural()) {
    auto whole = RelativeIdeal::whole(s);
    return TraceReport{whole, {0}, 0, {}, true, true, 0, true};
  }

  const auto canonical = canonical_ideal(s);
  auto trace = ideal_sum(canonical, dual_ideal(s, canonical));

  TraceReport out{trace, minimal_generators(trace)};
  if (trace.min() < 0) {
    throw Error(ErrorCode::InternalInconsistency, "trace is not contained in the semigroup");
  }
  for (Integer x = 0; x < trace.conductor(); ++x) {
    const bool in_s = s.contains(x);
    const bool in_trace = trace.contains(x);
    if (in_trace && !in_s) {
      throw Error(ErrorCode::InternalInconsistency, "trace is not contained in the semigroup");
    }
    if (in_s && !in_trace) out.missing.push_back(x);
  }
  out.residue = static_cast<Integer>(out.missing.size());
  out.gorenstein = is_symmetric(s);
  const bool trace_is_whole = trace == RelativeIdeal::whole(s);
  if (out.gorenstein != (out.residue == 0) || out.gorenstein != trace_is_whole) {
    throw Error(ErrorCode::InternalInconsistency,
                "symmetry test, residue and trace disagree on the Gorenstein property");
  }
  out.nearly_gorenstein = out.residue <= 1;

  const auto profile = gap_profile(s);
  out.gap_bound = profile.genus - profile.non_gap_count;
  out.question_holds = out.residue <= out.gap_bound;
  return out;
}

GapBoundCheck gap_bound_check(const NumericalSemigroup& s) {
  if (s.is_natural()) throw Error(ErrorCode::TrivialSemigroup, "N has no gaps");
  const auto report = trace_and_residue(s);
  return GapBoundCheck{report.residue, report.gap_bound, report.question_holds,
                       report.gap_bound - report.residue};
}

}  // namespace nsg
