#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nsg/ideal.hpp"
#include "nsg/semigroup.hpp"

namespace nsg {

/// Parameters of a gluing: the semigroup generated by mu * gens(left) and
/// lambda * gens(right).
struct GluingSpec {
  NumericalSemigroup left;
  NumericalSemigroup right;
  Integer lambda = 0;  // element of `left`, not a generator
  Integer mu = 0;      // element of `right`, not a generator
};

enum class Provenance { Gluing, Lifting };

/// Closed-form predictions for a constructed semigroup.
struct PredictedInvariants {
  Provenance provenance = Provenance::Gluing;
  NumericalSemigroup built;
  Integer frobenius = -1;
  std::vector<Integer> pf;
  std::vector<Integer> trace_min_gens;
  /// Only for gluings: the set mu * tr(left) + lambda * tr(right).
  std::optional<RelativeIdeal> trace_set;
  Integer residue = 0;
  Integer gap_bound = 0;
};

struct VerificationOutcome {
  PredictedInvariants predicted;
  TraceReport computed_trace;
  GapProfile computed_gaps;
  PseudoFrobeniusSet computed_pf;
  bool verified = false;
  std::vector<std::string> discrepancies;
};

/// Checks the gluing conditions in a fixed order and throws the matching
/// Error code on the first violation.
void validate_gluing(const GluingSpec& spec);

NumericalSemigroup glue(const GluingSpec& spec);
PredictedInvariants glued_invariants(const GluingSpec& spec);

/// <n1, k*n2, ..., k*ne>. Requires k >= 1 and gcd(k, n1) = 1.
NumericalSemigroup lift(const NumericalSemigroup& s, Integer k);
PredictedInvariants lifted_invariants(const NumericalSemigroup& s, Integer k);

/// Recomputes everything directly on `built` and compares field by field.
/// Mismatches are reported in `discrepancies`, never thrown.
VerificationOutcome verify_construction(const PredictedInvariants& predicted,
                                        const NumericalSemigroup& built);

/// <n1, n1 + d, ..., n1 + (e-1) d>, asserted minimal.
NumericalSemigroup arithmetic_semigroup(Integer n1, Integer d, Integer e);

std::string_view to_string(Provenance p) noexcept;

}  // namespace nsg
