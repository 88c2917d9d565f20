#include "nsg/toric.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

#include "nsg/constructions.hpp"
#include "nsg/ideal.hpp"

namespace nsg {

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::variable_power(std::size_t variables, std::size_t index, Exponent power) {
  Monomial m(variables);
  m.exps_[index] = power;
  return m;
}

Integer Monomial::degree() const noexcept {
  Integer d = 0;
  for (Exponent e : exps_) d += e;
  return d;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > 0 && other.exps_[i] > 0) return false;
  }
  return true;
}

bool Monomial::is_one() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial out(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] = std::max(exps_[i], other.exps_[i]);
  return out;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  Monomial out(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] = exps_[i] - divisor.exps_[i];
  return out;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (__builtin_add_overflow(exps_[i], other.exps_[i], &out.exps_[i])) {
      throw Error(ErrorCode::Overflow, "exponent overflow");
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// MonomialOrder

MonomialOrder MonomialOrder::degrevlex(std::size_t variables) {
  std::vector<std::size_t> seq(variables);
  std::iota(seq.begin(), seq.end(), std::size_t{0});
  return degrevlex(std::move(seq));
}

MonomialOrder MonomialOrder::degrevlex(std::vector<std::size_t> variable_sequence) {
  return MonomialOrder(Kind::Degrevlex, std::move(variable_sequence), std::nullopt);
}

MonomialOrder MonomialOrder::elimination(std::vector<std::size_t> variable_sequence,
                                         std::size_t block_split) {
  if (block_split == 0 || block_split >= variable_sequence.size()) {
    throw Error(ErrorCode::InvalidArgument, "elimination block split out of range");
  }
  return MonomialOrder(Kind::EliminationBlock, std::move(variable_sequence), block_split);
}

std::strong_ordering MonomialOrder::compare_range(const Monomial& a, const Monomial& b,
                                                  std::size_t from, std::size_t to) const noexcept {
  Integer da = 0;
  Integer db = 0;
  for (std::size_t k = from; k < to; ++k) {
    da += a[sequence_[k]];
    db += b[sequence_[k]];
  }
  if (da != db) return da <=> db;
  // Ties: a larger exponent on the latest differing variable makes the monomial smaller.
  for (std::size_t k = to; k-- > from;) {
    const auto v = sequence_[k];
    if (a[v] != b[v]) return b[v] <=> a[v];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const noexcept {
  if (kind_ == Kind::Degrevlex) return compare_range(a, b, 0, sequence_.size());
  const auto split = *block_split_;
  if (auto c = compare_range(a, b, 0, split); c != 0) return c;
  return compare_range(a, b, split, sequence_.size());
}

// ---------------------------------------------------------------------------
// Reduction and Buchberger

std::optional<Binomial> oriented(Monomial a, Monomial b, const MonomialOrder& order) {
  const auto c = order.compare(a, b);
  if (c == 0) return std::nullopt;
  if (c > 0) return Binomial{std::move(a), std::move(b)};
  return Binomial{std::move(b), std::move(a)};
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(elements.size());
  for (const auto& b : elements) out.push_back(b.plus);
  return out;
}

namespace {

void require_width(const Monomial& m, const MonomialOrder& order) {
  if (m.size() != order.variables()) {
    throw Error(ErrorCode::VariableMismatch, "monomial and order use different variable counts");
  }
}

// Monomial reduction against the live elements of a basis under construction.
Monomial reduce(Monomial m, const std::vector<Binomial>& basis, const std::vector<bool>* alive) {
  for (;;) {
    bool changed = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (alive && !(*alive)[i]) continue;
      if (basis[i].plus.divides(m)) {
        m = m.quotient(basis[i].plus) * basis[i].minus;
        changed = true;
        break;
      }
    }
    if (!changed) return m;
  }
}

}  // namespace

Monomial normal_form(const Monomial& m, std::span<const Binomial> basis, const MonomialOrder& order) {
  require_width(m, order);
  std::vector<Binomial> copy(basis.begin(), basis.end());
  return reduce(m, copy, nullptr);
}

Monomial normal_form(const Monomial& m, const GroebnerBasis& gb) {
  require_width(m, gb.order);
  return reduce(m, gb.elements, nullptr);
}

std::optional<Binomial> normal_form(const Binomial& b, std::span<const Binomial> basis,
                                    const MonomialOrder& order) {
  require_width(b.plus, order);
  std::vector<Binomial> copy(basis.begin(), basis.end());
  return oriented(reduce(b.plus, copy, nullptr), reduce(b.minus, copy, nullptr), order);
}

std::optional<Binomial> normal_form(const Binomial& b, const GroebnerBasis& gb) {
  require_width(b.plus, gb.order);
  return oriented(reduce(b.plus, gb.elements, nullptr), reduce(b.minus, gb.elements, nullptr),
                  gb.order);
}

std::optional<Binomial> s_polynomial(const Binomial& f, const Binomial& g, const MonomialOrder& order) {
  const auto l = f.plus.lcm(g.plus);
  return oriented(l.quotient(f.plus) * f.minus, l.quotient(g.plus) * g.minus, order);
}

bool satisfies_buchberger_criterion(std::span<const Binomial> basis, const MonomialOrder& order) {
  std::vector<Binomial> copy(basis.begin(), basis.end());
  for (std::size_t i = 0; i < copy.size(); ++i) {
    for (std::size_t j = i + 1; j < copy.size(); ++j) {
      auto s = s_polynomial(copy[i], copy[j], order);
      if (!s) continue;
      if (reduce(s->plus, copy, nullptr) != reduce(s->minus, copy, nullptr)) return false;
    }
  }
  return true;
}

GroebnerBasis buchberger(std::span<const Binomial> generators, const MonomialOrder& order) {
  std::vector<Binomial> basis;
  std::vector<bool> alive;
  // (lcm degree, first index, second index)
  std::set<std::tuple<Integer, std::size_t, std::size_t>> pairs;

  auto add = [&](Binomial b) {
    const std::size_t n = basis.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (!alive[i] || basis[i].plus.coprime(b.plus)) continue;
      pairs.emplace(basis[i].plus.lcm(b.plus).degree(), i, n);
    }
    basis.push_back(std::move(b));
    alive.push_back(true);
  };

  for (const auto& g : generators) {
    require_width(g.plus, order);
    auto b = oriented(reduce(g.plus, basis, &alive), reduce(g.minus, basis, &alive), order);
    if (b) add(std::move(*b));
  }

  while (!pairs.empty()) {
    const auto [deg, i, j] = *pairs.begin();
    pairs.erase(pairs.begin());
    auto s = s_polynomial(basis[i], basis[j], order);
    if (!s) continue;
    auto h = oriented(reduce(std::move(s->plus), basis, &alive),
                      reduce(std::move(s->minus), basis, &alive), order);
    if (h) add(std::move(*h));
  }

  // Minimal basis: drop elements whose leading monomial is a multiple of another's.
  std::vector<Binomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j || !basis[j].plus.divides(basis[i].plus)) continue;
      redundant = basis[j].plus != basis[i].plus || j < i;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }

  // Interreduce tails; leading monomials are already minimal.
  GroebnerBasis out{{}, order, {}};
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    Monomial tail = minimal[i].minus;
    std::vector<bool> others(minimal.size(), true);
    others[i] = false;
    tail = reduce(std::move(tail), minimal, &others);
    out.elements.push_back(Binomial{minimal[i].plus, std::move(tail)});
  }
  std::sort(out.elements.begin(), out.elements.end(),
            [&](const Binomial& a, const Binomial& b) { return order.less(a.plus, b.plus); });
  for (const auto& b : out.elements) out.homogeneous.push_back(b.is_homogeneous());
  return out;
}

// ---------------------------------------------------------------------------
// Toric ideals of monomial curves

Integer gamma_degree(const Monomial& m, const NumericalSemigroup& s) {
  const auto& gens = s.generators();
  if (m.size() < gens.size()) throw Error(ErrorCode::VariableMismatch, "monomial too short");
  Integer out = 0;
  for (std::size_t i = 0; i < gens.size(); ++i) out = checked_add(out, checked_mul(m[i], gens[i]));
  return out;
}

namespace {

void require_embedding_dimension(const NumericalSemigroup& s, std::size_t at_least) {
  if (s.embedding_dimension() < at_least) {
    throw Error(ErrorCode::EmbeddingDimensionTooSmall,
                "embedding dimension must be at least " + std::to_string(at_least));
  }
}

void require_balanced(const std::vector<Binomial>& elements, const NumericalSemigroup& s) {
  for (const auto& b : elements) {
    if (gamma_degree(b.plus, s) != gamma_degree(b.minus, s)) {
      throw Error(ErrorCode::InternalInconsistency, "binomial is not degree-balanced: " + to_string(b));
    }
  }
}

Monomial without_first(const Monomial& m) {
  return Monomial(std::vector<Monomial::Exponent>(m.exponents().begin() + 1, m.exponents().end()));
}

}  // namespace

GroebnerBasis toric_groebner_basis(const NumericalSemigroup& s) {
  require_embedding_dimension(s, 2);
  const auto& g = s.generators();
  const auto e = g.size();
  const Integer n1 = g[0];
  const auto& ap = s.apery();

  // m(w) = m(w - n_j) * x_j for the first j >= 2 with w - n_j in S; then
  // w - n_j is itself an Apery element.
  std::vector<Integer> ascending(ap.begin(), ap.end());
  std::sort(ascending.begin(), ascending.end());
  std::vector<Monomial> rep(static_cast<std::size_t>(n1), Monomial(e));
  for (Integer w : ascending) {
    for (std::size_t j = 1; j < e && w != 0; ++j) {
      const Integer p = w - g[j];
      if (p < 0 || !s.contains(p)) continue;
      auto m = rep[static_cast<std::size_t>(p % n1)];
      ++m[j];
      rep[static_cast<std::size_t>(w % n1)] = std::move(m);
      break;
    }
  }

  const auto order = MonomialOrder::degrevlex(e);
  std::vector<std::pair<Integer, Binomial>> relations;
  for (Integer w : ascending) {
    for (std::size_t i = 1; i < e; ++i) {
      const Integer d = w + g[i];
      const auto r = static_cast<std::size_t>(d % n1);
      auto a = rep[static_cast<std::size_t>(w % n1)];
      ++a[i];
      auto b = rep[r];
      b[0] += static_cast<Monomial::Exponent>((d - ap[r]) / n1);
      if (auto rel = oriented(std::move(a), std::move(b), order)) relations.emplace_back(d, std::move(*rel));
    }
  }
  std::stable_sort(relations.begin(), relations.end(),
                   [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<Binomial> gens;
  gens.reserve(relations.size());
  for (auto& [d, b] : relations) gens.push_back(std::move(b));
  auto out = buchberger(gens, order);
  require_balanced(out.elements, s);
  return out;
}

GroebnerBasis elimination_groebner_basis(const NumericalSemigroup& s) {
  require_embedding_dimension(s, 2);
  const auto e = s.embedding_dimension();
  // Variables: t (index 0), then x1..xe; t forms the eliminated block.
  std::vector<std::size_t> seq(e + 1);
  std::iota(seq.begin(), seq.end(), std::size_t{0});
  const auto elim = MonomialOrder::elimination(seq, 1);

  std::vector<Binomial> gens;
  for (std::size_t i = 0; i < e; ++i) {
    const auto power = static_cast<Monomial::Exponent>(s.generators()[i]);
    auto b = oriented(Monomial::variable_power(e + 1, i + 1, 1),
                      Monomial::variable_power(e + 1, 0, power), elim);
    gens.push_back(std::move(*b));
  }
  const auto full = buchberger(gens, elim);

  // The t-free part of a reduced elimination basis is the reduced basis of
  // the elimination ideal under the restricted order.
  GroebnerBasis out{{}, MonomialOrder::degrevlex(e), {}};
  for (const auto& b : full.elements) {
    if (b.plus[0] != 0 || b.minus[0] != 0) continue;
    out.elements.push_back(Binomial{without_first(b.plus), without_first(b.minus)});
    out.homogeneous.push_back(out.elements.back().is_homogeneous());
  }
  require_balanced(out.elements, s);
  return out;
}

std::vector<Binomial> defining_ideal(const NumericalSemigroup& s) {
  const auto gb = toric_groebner_basis(s);
  auto candidates = gb.elements;
  std::stable_sort(candidates.begin(), candidates.end(), [&](const Binomial& a, const Binomial& b) {
    const auto da = gamma_degree(a.plus, s);
    const auto db = gamma_degree(b.plus, s);
    if (da != db) return da < db;
    return gb.order.less(a.plus, b.plus);
  });

  // Greedy in increasing degree: an element is kept iff it is not in the ideal
  // of the elements kept before it. For a positively graded ideal this yields
  // a minimal generating set.
  std::vector<Binomial> kept;
  GroebnerBasis kept_gb{{}, gb.order, {}};
  for (const auto& c : candidates) {
    if (!kept.empty() && !normal_form(c, kept_gb)) continue;
    kept.push_back(c);
    kept_gb = buchberger(kept, gb.order);
  }
  for (const auto& b : kept) {
    if (!b.plus.coprime(b.minus)) {
      throw Error(ErrorCode::InternalInconsistency, "toric generator with a common factor: " + to_string(b));
    }
  }
  return kept;
}

Binomial dehomogenize(const Binomial& b) {
  auto drop_last = [](const Monomial& m) {
    return Monomial(std::vector<Monomial::Exponent>(m.exponents().begin(), m.exponents().end() - 1));
  };
  return Binomial{drop_last(b.plus), drop_last(b.minus)};
}

GroebnerBasis homogenized_gb(const NumericalSemigroup& s) {
  const auto affine = toric_groebner_basis(s);
  const auto e = s.embedding_dimension();
  GroebnerBasis out{{}, MonomialOrder::degrevlex(e + 1), {}};
  for (const auto& b : affine.elements) {
    std::vector<Monomial::Exponent> plus = b.plus.exponents();
    std::vector<Monomial::Exponent> minus = b.minus.exponents();
    const auto dp = b.plus.degree();
    const auto dm = b.minus.degree();
    plus.push_back(static_cast<Monomial::Exponent>(std::max<Integer>(0, dm - dp)));
    minus.push_back(static_cast<Monomial::Exponent>(std::max<Integer>(0, dp - dm)));
    auto h = oriented(Monomial(std::move(plus)), Monomial(std::move(minus)), out.order);
    if (!h || h->plus.size() != e + 1 || h->plus[e] != 0) {
      throw Error(ErrorCode::InternalInconsistency, "homogenization changed the leading monomial");
    }
    out.elements.push_back(std::move(*h));
    out.homogeneous.push_back(true);
  }
  if (!satisfies_buchberger_criterion(out.elements, out.order)) {
    throw Error(ErrorCode::InternalInconsistency, "homogenized basis is not a Groebner basis");
  }
  return out;
}

AcmReport acm_and_hypothesis(const NumericalSemigroup& s) {
  require_embedding_dimension(s, 3);
  AcmReport out{false, false, toric_groebner_basis(s)};
  const auto last = s.embedding_dimension() - 1;
  out.acm = std::none_of(out.gb.elements.begin(), out.gb.elements.end(),
                         [&](const Binomial& b) { return b.plus[last] > 0; });
  out.hypothesis = std::all_of(out.gb.elements.begin(), out.gb.elements.end(), [&](const Binomial& b) {
    return b.is_homogeneous() || b.support(last) > 0;
  });
  return out;
}

ClosureVerdict projective_ng_verdict(const NumericalSemigroup& s) {
  const auto acm = acm_and_hypothesis(s);
  ClosureVerdict out;
  out.acm = acm.acm;
  out.hypothesis = acm.hypothesis;
  out.applicable = acm.acm && acm.hypothesis;
  out.affine_ng = trace_and_residue(s).nearly_gorenstein;
  if (out.applicable) out.projective_ng = out.affine_ng;
  return out;
}

ArithmeticGb arithmetic_gb(Integer n1, Integer d, Integer e) {
  const auto s = arithmetic_semigroup(n1, d, e);
  const auto computed = toric_groebner_basis(s);
  const auto vars = static_cast<std::size_t>(e);
  const auto& order = computed.order;

  // n1 = q (e - 1) + r with r in [1, e - 1].
  const Integer q = (n1 - 1) / (e - 1);
  const Integer r = n1 - q * (e - 1);

  auto x = [&](Integer index, Integer power) {
    return Monomial::variable_power(vars, static_cast<std::size_t>(index - 1),
                                    static_cast<Monomial::Exponent>(power));
  };

  ArithmeticGb out;
  // x_i x_j - x_{i-1} x_{j+1}, 2 <= i <= j <= e-1.
  for (Integer i = 2; i <= e - 1; ++i) {
    for (Integer j = i; j <= e - 1; ++j) {
      out.candidate.push_back(Binomial{x(i, 1) * x(j, 1), x(i - 1, 1) * x(j + 1, 1)});
    }
  }
  // x1^(q+d) x_i - x_{r+i} xe^q, 1 <= i <= e - r. The index r + i is the one
  // that balances the degrees: (q + d) n1 + n_i = q ne + n_{r+i}.
  for (Integer i = 1; i <= e - r; ++i) {
    out.candidate.push_back(Binomial{x(1, q + d) * x(i, 1), x(r + i, 1) * x(e, q)});
  }
  for (auto& b : out.candidate) {
    if (auto o = oriented(b.plus, b.minus, order)) b = std::move(*o);
  }

  for (const auto& b : out.candidate) {
    if (gamma_degree(b.plus, s) != gamma_degree(b.minus, s) || normal_form(b, computed)) {
      out.discrepancies.emplace_back("not_in_ideal");
      break;
    }
  }
  if (!satisfies_buchberger_criterion(out.candidate, order)) out.discrepancies.emplace_back("not_groebner");
  for (const auto& lm : computed.leading_monomials()) {
    const bool covered = std::any_of(out.candidate.begin(), out.candidate.end(),
                                     [&](const Binomial& b) { return b.plus.divides(lm); });
    if (!covered) {
      out.discrepancies.emplace_back("leading_ideal_mismatch");
      break;
    }
  }

  out.candidate_accepted = out.discrepancies.empty();
  if (out.candidate_accepted) {
    out.basis = GroebnerBasis{out.candidate, order, {}};
    std::sort(out.basis.elements.begin(), out.basis.elements.end(),
              [&](const Binomial& a, const Binomial& b) { return order.less(a.plus, b.plus); });
    for (const auto& b : out.basis.elements) out.basis.homogeneous.push_back(b.is_homogeneous());
  } else {
    out.basis = computed;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Formatting

std::string to_string(const Monomial& m, std::string_view homogenizing_name) {
  std::string out;
  const std::size_t affine = homogenizing_name.empty() ? m.size() : m.size() - 1;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += i < affine ? "x" + std::to_string(i + 1) : std::string(homogenizing_name);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const Binomial& b, std::string_view homogenizing_name) {
  return to_string(b.plus, homogenizing_name) + " - " + to_string(b.minus, homogenizing_name);
}

}  // namespace nsg
