#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nsg/semigroup.hpp"

namespace nsg {

/// A monomial as a dense exponent vector over a fixed variable list.
class Monomial {
 public:
  using Exponent = std::int32_t;

  Monomial() = default;
  explicit Monomial(std::size_t variables) : exps_(variables, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}

  static Monomial variable_power(std::size_t variables, std::size_t index, Exponent power);

  std::size_t size() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const noexcept { return exps_[i]; }
  Exponent& operator[](std::size_t i) noexcept { return exps_[i]; }
  const std::vector<Exponent>& exponents() const noexcept { return exps_; }

  Integer degree() const noexcept;
  bool divides(const Monomial& other) const noexcept;
  bool coprime(const Monomial& other) const noexcept;
  bool is_one() const noexcept;

  Monomial lcm(const Monomial& other) const;
  /// this / divisor; the caller guarantees divisor.divides(*this).
  Monomial quotient(const Monomial& divisor) const;
  Monomial operator*(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Exponent> exps_;
};

/// Degree reverse lexicographic order, optionally split into an elimination
/// block order. `variable_sequence` lists variable indices from largest to
/// smallest.
class MonomialOrder {
 public:
  enum class Kind { Degrevlex, EliminationBlock };

  static MonomialOrder degrevlex(std::size_t variables);
  static MonomialOrder degrevlex(std::vector<std::size_t> variable_sequence);
  /// The first `block_split` variables of the sequence form the eliminated block.
  static MonomialOrder elimination(std::vector<std::size_t> variable_sequence, std::size_t block_split);

  Kind kind() const noexcept { return kind_; }
  const std::vector<std::size_t>& variable_sequence() const noexcept { return sequence_; }
  std::optional<std::size_t> block_split() const noexcept { return block_split_; }
  std::size_t variables() const noexcept { return sequence_.size(); }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const noexcept;
  bool less(const Monomial& a, const Monomial& b) const noexcept { return compare(a, b) < 0; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(Kind kind, std::vector<std::size_t> sequence, std::optional<std::size_t> split)
      : kind_(kind), sequence_(std::move(sequence)), block_split_(split) {}

  std::strong_ordering compare_range(const Monomial& a, const Monomial& b, std::size_t from,
                                     std::size_t to) const noexcept;

  Kind kind_ = Kind::Degrevlex;
  std::vector<std::size_t> sequence_;
  std::optional<std::size_t> block_split_;
};

/// plus - minus, with coefficients +1 and -1.
struct Binomial {
  Monomial plus;
  Monomial minus;

  /// Equal standard degree on both sides.
  bool is_homogeneous() const noexcept { return plus.degree() == minus.degree(); }
  Monomial::Exponent support(std::size_t variable) const noexcept {
    return plus[variable] + minus[variable];
  }

  friend bool operator==(const Binomial&, const Binomial&) = default;
};

/// a - b oriented so that the larger monomial comes first; nullopt when a == b.
std::optional<Binomial> oriented(Monomial a, Monomial b, const MonomialOrder& order);

struct GroebnerBasis {
  std::vector<Binomial> elements;
  MonomialOrder order = MonomialOrder::degrevlex(0);
  std::vector<bool> homogeneous;

  std::vector<Monomial> leading_monomials() const;
};

/// Reduced Groebner basis of the ideal generated by `generators`.
///
/// Pairs are processed by lcm degree, ties broken by insertion index; the
/// product criterion is the only pair filter. Output is sorted by leading
/// monomial (ascending under `order`), so the result is deterministic.
GroebnerBasis buchberger(std::span<const Binomial> generators, const MonomialOrder& order);

/// Fully reduced monomial modulo `basis` (under `order`).
Monomial normal_form(const Monomial& m, std::span<const Binomial> basis, const MonomialOrder& order);
Monomial normal_form(const Monomial& m, const GroebnerBasis& gb);

/// Remainder of b modulo the basis; nullopt means zero.
std::optional<Binomial> normal_form(const Binomial& b, std::span<const Binomial> basis,
                                    const MonomialOrder& order);
std::optional<Binomial> normal_form(const Binomial& b, const GroebnerBasis& gb);

/// S-polynomial of two oriented binomials, nullopt when it vanishes.
std::optional<Binomial> s_polynomial(const Binomial& f, const Binomial& g, const MonomialOrder& order);

/// Every S-polynomial reduces to zero modulo `basis`.
bool satisfies_buchberger_criterion(std::span<const Binomial> basis, const MonomialOrder& order);

/// sum_i m_i * n_i for a monomial in the variables x1..xe of S.
Integer gamma_degree(const Monomial& m, const NumericalSemigroup& s);

/// Minimal binomial generating set of the defining ideal I(S) of the monomial
/// curve t -> (t^n1, ..., t^ne), oriented by degrevlex x1 > ... > xe.
/// Requires e >= 2.
std::vector<Binomial> defining_ideal(const NumericalSemigroup& s);

/// Reduced Groebner basis of I(S) under degrevlex x1 > ... > xe, from the
/// Apery generating set: for every w in Ap(S, n1) and i >= 2, the relation
/// x_i * m(w) - x1^k * m(w'), where m(w) is a fixed factorization of w and
/// w + n_i = w' + k * n1 with w' in Ap(S, n1).
GroebnerBasis toric_groebner_basis(const NumericalSemigroup& s);

/// Same basis, computed by eliminating t from (x_i - t^n_i) under a block
/// order with t first. Exact but slow once generators reach the hundreds.
GroebnerBasis elimination_groebner_basis(const NumericalSemigroup& s);

/// Homogenization of the degrevlex basis with respect to a new last
/// variable x0 (index e), as a basis under degrevlex x1 > ... > xe > x0.
GroebnerBasis homogenized_gb(const NumericalSemigroup& s);

/// Drops the homogenizing variable (last index).
Binomial dehomogenize(const Binomial& b);

struct AcmReport {
  /// No leading monomial of the degrevlex basis is divisible by xe.
  bool acm = false;
  /// xe occurs in every non-homogeneous basis element.
  bool hypothesis = false;
  GroebnerBasis gb;
};

/// Requires e >= 3. `acm` is the leading-monomial criterion, not a general
/// Cohen-Macaulay decision procedure.
AcmReport acm_and_hypothesis(const NumericalSemigroup& s);

struct ClosureVerdict {
  bool acm = false;
  bool hypothesis = false;
  bool applicable = false;
  bool affine_ng = false;
  /// Present exactly when `applicable`; then equal to `affine_ng`.
  std::optional<bool> projective_ng;
};

ClosureVerdict projective_ng_verdict(const NumericalSemigroup& s);

struct ArithmeticGb {
  GroebnerBasis basis;
  /// The closed-form binomial family for the arithmetic sequence.
  std::vector<Binomial> candidate;
  bool candidate_accepted = false;
  /// Names of failed validation steps; empty when the candidate was accepted.
  std::vector<std::string> discrepancies;
};

/// Closed-form Groebner basis for <n1, n1 + d, ..., n1 + (e-1) d>, validated
/// against a computed basis; falls back to the computed basis on failure.
ArithmeticGb arithmetic_gb(Integer n1, Integer d, Integer e);

std::string to_string(const Monomial& m, std::string_view homogenizing_name = {});
std::string to_string(const Binomial& b, std::string_view homogenizing_name = {});

}  // namespace nsg
