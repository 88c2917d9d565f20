#include "nsg/constructions.hpp"

#include <algorithm>
#include <numeric>

namespace nsg {

namespace {

bool is_generator(const NumericalSemigroup& s, Integer x) {
  const auto& g = s.generators();
  return std::binary_search(g.begin(), g.end(), x);
}

std::vector<Integer> scaled(const std::vector<Integer>& values, Integer factor) {
  std::vector<Integer> out;
  out.reserve(values.size());
  for (Integer v : values) out.push_back(checked_mul(v, factor));
  return out;
}

// PF(N) is taken to be {F(N)} = {-1} so the gluing formulas stay total.
std::vector<Integer> pf_or_frobenius(const NumericalSemigroup& s) {
  if (s.is_natural()) return {-1};
  return pseudo_frobenius(s).elements;
}

Integer gap_bound_of(const NumericalSemigroup& s) {
  const auto profile = gap_profile(s);
  return profile.genus - profile.non_gap_count;
}

}  // namespace

std::string_view to_string(Provenance p) noexcept {
  return p == Provenance::Gluing ? "gluing" : "lifting";
}

void validate_gluing(const GluingSpec& spec) {
  if (spec.lambda <= 0 || spec.mu <= 0) {
    throw Error(ErrorCode::InvalidArgument, "lambda and mu must be positive");
  }
  if (!spec.left.contains(spec.lambda)) {
    throw Error(ErrorCode::LambdaNotMember, "lambda is not in the left semigroup");
  }
  if (!spec.right.contains(spec.mu)) {
    throw Error(ErrorCode::MuNotMember, "mu is not in the right semigroup");
  }
  if (is_generator(spec.left, spec.lambda)) {
    throw Error(ErrorCode::LambdaIsGenerator, "lambda is a generator");
  }
  if (is_generator(spec.right, spec.mu)) {
    throw Error(ErrorCode::MuIsGenerator, "mu is a generator");
  }
  if (std::gcd(spec.lambda, spec.mu) != 1) {
    throw Error(ErrorCode::GcdViolation, "gcd(lambda, mu) must be 1");
  }
  const auto left = scaled(spec.left.generators(), spec.mu);
  const auto right = scaled(spec.right.generators(), spec.lambda);
  for (Integer x : left) {
    if (std::binary_search(right.begin(), right.end(), x)) {
      throw Error(ErrorCode::ScaledSetsIntersect,
                  "scaled generator sets intersect at " + std::to_string(x));
    }
  }
}

NumericalSemigroup glue(const GluingSpec& spec) {
  validate_gluing(spec);
  auto gens = scaled(spec.left.generators(), spec.mu);
  const auto right = scaled(spec.right.generators(), spec.lambda);
  gens.insert(gens.end(), right.begin(), right.end());
  auto out = NumericalSemigroup::from_generators(gens);
  if (out.was_reduced()) {
    throw Error(ErrorCode::NonMinimalGluing, "scaled generators are not a minimal generating set");
  }
  return out;
}

PredictedInvariants glued_invariants(const GluingSpec& spec) {
  const auto built = glue(spec);
  const Integer lambda = spec.lambda;
  const Integer mu = spec.mu;
  const Integer mu_lambda = checked_mul(mu, lambda);

  PredictedInvariants out{Provenance::Gluing, built};
  out.frobenius = checked_add(checked_add(checked_mul(mu, spec.left.frobenius()),
                                          checked_mul(lambda, spec.right.frobenius())),
                              mu_lambda);
  for (Integer a : pf_or_frobenius(spec.left)) {
    for (Integer b : pf_or_frobenius(spec.right)) {
      out.pf.push_back(checked_add(checked_add(checked_mul(mu, a), checked_mul(lambda, b)), mu_lambda));
    }
  }
  std::sort(out.pf.begin(), out.pf.end());
  out.pf.erase(std::unique(out.pf.begin(), out.pf.end()), out.pf.end());

  const auto left = trace_and_residue(spec.left);
  const auto right = trace_and_residue(spec.right);
  out.residue = checked_add(checked_mul(mu, left.residue), checked_mul(lambda, right.residue));
  out.gap_bound = checked_add(checked_mul(mu, gap_bound_of(spec.left)),
                              checked_mul(lambda, gap_bound_of(spec.right)));

  // mu*tr1 + lambda*tr2 contains every integer from mu*c1 + lambda*c2 + (mu-1)(lambda-1)
  // on, so enumerating sums below that bound determines the set exactly.
  const Integer bound = checked_add(
      checked_add(checked_mul(mu, left.trace.conductor()), checked_mul(lambda, right.trace.conductor())),
      checked_mul(mu - 1, lambda - 1));
  std::vector<bool> mask(static_cast<std::size_t>(bound), false);
  for (Integer a = left.trace.min(); mu * a < bound; ++a) {
    if (!left.trace.contains(a)) continue;
    for (Integer b = right.trace.min(); mu * a + lambda * b < bound; ++b) {
      if (right.trace.contains(b)) mask[static_cast<std::size_t>(mu * a + lambda * b)] = true;
    }
  }
  out.trace_set = RelativeIdeal::from_mask(built, 0, std::move(mask));
  out.trace_min_gens = minimal_generators(*out.trace_set);
  return out;
}

NumericalSemigroup lift(const NumericalSemigroup& s, Integer k) {
  if (k < 1) throw Error(ErrorCode::InvalidLiftFactor, "lifting factor k must be at least 1");
  const Integer n1 = s.multiplicity();
  if (std::gcd(k, n1) != 1) throw Error(ErrorCode::GcdViolation, "gcd(k, n1) must be 1");
  std::vector<Integer> gens{n1};
  for (std::size_t i = 1; i < s.generators().size(); ++i) {
    gens.push_back(checked_mul(k, s.generators()[i]));
  }
  auto out = NumericalSemigroup::from_generators(gens);
  if (out.was_reduced()) {
    throw Error(ErrorCode::NonMinimalLift, "lifted generators are not minimal");
  }
  return out;
}

PredictedInvariants lifted_invariants(const NumericalSemigroup& s, Integer k) {
  const auto built = lift(s, k);
  const Integer shift = checked_mul(k - 1, s.multiplicity());

  PredictedInvariants out{Provenance::Lifting, built};
  out.frobenius = checked_add(checked_mul(k, s.frobenius()), shift);
  if (!s.is_natural()) {
    for (Integer f : pseudo_frobenius(s).elements) out.pf.push_back(checked_add(checked_mul(k, f), shift));
  }
  const auto report = trace_and_residue(s);
  out.residue = checked_mul(k, report.residue);
  out.gap_bound = checked_mul(k, gap_bound_of(s));
  out.trace_min_gens = scaled(report.trace_min_gens, k);
  return out;
}

VerificationOutcome verify_construction(const PredictedInvariants& predicted,
                                        const NumericalSemigroup& built) {
  VerificationOutcome out{predicted, trace_and_residue(built), gap_profile(built)};
  if (!built.is_natural()) out.computed_pf = pseudo_frobenius(built);

  auto& d = out.discrepancies;
  if (!(predicted.built == built)) d.emplace_back("semigroup");
  if (predicted.frobenius != built.frobenius()) d.emplace_back("frobenius");
  if (predicted.pf != out.computed_pf.elements) d.emplace_back("pseudo_frobenius");
  if (predicted.residue != out.computed_trace.residue) d.emplace_back("residue");
  if (predicted.gap_bound != out.computed_gaps.genus - out.computed_gaps.non_gap_count) {
    d.emplace_back("gap_bound");
  }
  if (predicted.trace_set && !(*predicted.trace_set == out.computed_trace.trace)) {
    d.emplace_back("trace_set");
  }
  if (predicted.trace_min_gens != out.computed_trace.trace_min_gens) d.emplace_back("trace_min_gens");
  out.verified = d.empty();
  return out;
}

NumericalSemigroup arithmetic_semigroup(Integer n1, Integer d, Integer e) {
  if (n1 < 2 || d < 1 || e < 2) {
    throw Error(ErrorCode::InvalidArgument, "arithmetic sequence needs n1 >= 2, d >= 1, e >= 2");
  }
  if (std::gcd(n1, d) != 1) throw Error(ErrorCode::GcdViolation, "gcd(n1, d) must be 1");
  if (e > n1) {
    throw Error(ErrorCode::NonMinimalSequence,
                "an arithmetic sequence with e > n1 is not a minimal generating set");
  }
  std::vector<Integer> gens;
  for (Integer i = 0; i < e; ++i) gens.push_back(checked_add(n1, checked_mul(i, d)));
  auto out = NumericalSemigroup::from_generators(gens);
  if (out.was_reduced()) throw Error(ErrorCode::NonMinimalSequence, "sequence is not minimal");
  return out;
}

}  // namespace nsg
