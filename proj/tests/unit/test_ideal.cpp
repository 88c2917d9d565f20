#include <gtest/gtest.h>

#include "../support/gen.hpp"
#include "../support/oracles.hpp"
#include "nsg/ideal.hpp"

namespace {

using nsg::Integer;
using nsg::NumericalSemigroup;
using nsg::RelativeIdeal;
using V = std::vector<Integer>;

NumericalSemigroup sg(std::initializer_list<Integer> g) { return NumericalSemigroup::from_generators(g); }

TEST(Ideal, CanonicalIdealShape) {
  const auto s = sg({3, 5, 7});
  const auto k = nsg::canonical_ideal(s);
  EXPECT_EQ(k.min(), 0);
  EXPECT_EQ(k.conductor(), 5);
  EXPECT_EQ(k.head(), (V{0, 2, 3}));
  EXPECT_FALSE(k.contains(1));
  EXPECT_FALSE(k.contains(4));
}

TEST(Ideal, FromMaskRejectsUnstableSets) {
  const auto s = sg({3, 5, 7});
  EXPECT_THROW(RelativeIdeal::from_mask(s, 0, {true, false, false, false}), nsg::Error);
  const auto ok = RelativeIdeal::from_mask(s, -2, {false, false, true, false, false, true});
  EXPECT_EQ(ok.min(), 0);
  EXPECT_EQ(ok.conductor(), 3);
  EXPECT_EQ(ok, RelativeIdeal::generated_by(s, V{0, 3, 4}));
}

TEST(Ideal, GeneratedByAndMinimalGenerators) {
  const auto s = sg({3, 5, 7});
  const auto i = RelativeIdeal::generated_by(s, V{5, 3, 10});
  EXPECT_EQ(nsg::minimal_generators(i), (V{3, 5}));
  EXPECT_EQ(nsg::minimal_generators(RelativeIdeal::whole(s)), (V{0}));
  EXPECT_EQ(nsg::minimal_generators(nsg::canonical_ideal(s)), (V{0, 2}));
}

TEST(Ideal, DualAmbientMismatch) {
  try {
    nsg::dual_ideal(sg({2, 3}), nsg::canonical_ideal(sg({3, 5, 7})));
    FAIL();
  } catch (const nsg::Error& e) {
    EXPECT_EQ(e.code(), nsg::ErrorCode::AmbientMismatch);
  }
}

TEST(Ideal, TraceExamples) {
  auto r = nsg::trace_and_residue(sg({3, 5, 7}));
  EXPECT_EQ(r.residue, 1);
  EXPECT_EQ(r.trace.head(), (V{3}));
  EXPECT_EQ(r.trace.conductor(), 5);
  EXPECT_EQ(r.missing, (V{0}));
  EXPECT_TRUE(r.nearly_gorenstein);
  EXPECT_FALSE(r.gorenstein);
  EXPECT_EQ(r.gap_bound, 1);
  EXPECT_TRUE(r.question_holds);

  r = nsg::trace_and_residue(sg({2, 3}));
  EXPECT_EQ(r.residue, 0);
  EXPECT_TRUE(r.gorenstein);

  r = nsg::trace_and_residue(sg({4, 5, 7}));
  EXPECT_EQ(r.residue, 1);
  EXPECT_EQ(r.gap_bound, 1);

  r = nsg::trace_and_residue(sg({5, 6, 7, 8, 9}));
  EXPECT_EQ(r.residue, 1);
  EXPECT_EQ(r.gap_bound, 3);

  r = nsg::trace_and_residue(sg({3, 10, 14}));
  EXPECT_EQ(r.residue, 2);
  EXPECT_EQ(r.missing, (V{0, 3}));
  EXPECT_EQ(r.trace_min_gens, (V{6, 10, 14}));

  r = nsg::trace_and_residue(sg({20, 21, 30, 35, 49}));
  EXPECT_EQ(r.residue, 7);
  EXPECT_EQ(r.missing, (V{0, 20, 30, 40, 50, 60, 80}));
}

TEST(Ideal, NaturalNumbersTrace) {
  const auto r = nsg::trace_and_residue(sg({1}));
  EXPECT_EQ(r.residue, 0);
  EXPECT_EQ(r.trace_min_gens, (V{0}));
  EXPECT_TRUE(r.gorenstein);
  EXPECT_THROW(nsg::gap_bound_check(sg({1})), nsg::Error);
}

TEST(Ideal, GapBoundCanFail) {
  // Smallest-genus failures of res <= g - n found by the genus-tree hunt.
  const auto s = sg({13, 14, 15, 16, 17, 18, 21, 23});
  const auto r = nsg::trace_and_residue(s);
  EXPECT_EQ(r.residue, 9);
  EXPECT_EQ(r.gap_bound, 8);
  EXPECT_FALSE(r.question_holds);
  EXPECT_EQ(oracle::minkowski_trace(s.generators()).residue, 9);
  const auto c = nsg::gap_bound_check(s);
  EXPECT_FALSE(c.holds);
  EXPECT_EQ(c.slack, -1);
}

TEST(Ideal, GapBoundCheck) {
  const auto c = nsg::gap_bound_check(sg({3, 10, 14}));
  EXPECT_EQ(c.residue, 2);
  EXPECT_EQ(c.gap_bound, 2);
  EXPECT_EQ(c.slack, 0);
  EXPECT_TRUE(c.holds);
}

// Elements z of [-4w, 4w] with z + J inside I, where J is scanned over [-4w, 8w].
std::vector<Integer> colon(const RelativeIdeal& i, const RelativeIdeal& j, Integer w) {
  std::vector<Integer> out;
  for (Integer z = -4 * w; z <= 4 * w; ++z) {
    bool ok = true;
    for (Integer y = j.min(); y <= 8 * w && ok; ++y) ok = !j.contains(y) || i.contains(z + y);
    if (ok) out.push_back(z);
  }
  return out;
}

TEST(Ideal, DoubleDualOfCanonicalIsLarger) {
  const auto s = sg({3, 5, 7});
  const auto k = nsg::canonical_ideal(s);
  const auto dk = nsg::dual_ideal(s, k);
  EXPECT_EQ(dk.head(), (V{3}));
  const auto ddk = nsg::dual_ideal(s, dk);
  EXPECT_FALSE(k.contains(4));
  EXPECT_TRUE(ddk.contains(4));
}

class IdealProperties : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(IdealProperties, TraceMatchesMinkowskiOracle) {
  testgen::Draw draw(GetParam());
  for (int round = 0; round < 25; ++round) {
    const auto raw = testgen::generators(draw, 2, 9);
    const auto s = NumericalSemigroup::from_generators(raw);
    SCOPED_TRACE(::testing::PrintToString(s.generators()));
    const auto ref = oracle::minkowski_trace(s.generators());
    const auto r = nsg::trace_and_residue(s);
    EXPECT_EQ(r.residue, ref.residue);
    EXPECT_EQ(r.missing, ref.missing);
    for (Integer x = 0; x <= 2 * s.window(); ++x) {
      ASSERT_EQ(r.trace.contains(x), ref.trace.count(x) == 1) << x;
    }
  }
}

TEST_P(IdealProperties, AlgebraicIdentities) {
  testgen::Draw draw(GetParam() + 1000);
  for (int round = 0; round < 40; ++round) {
    const auto s = NumericalSemigroup::from_generators(testgen::generators(draw, 2, 12));
    SCOPED_TRACE(::testing::PrintToString(s.generators()));
    const auto k = nsg::canonical_ideal(s);
    const auto dk = nsg::dual_ideal(s, k);
    // S - (S - K) contains K, and taking the dual a third time changes nothing.
    const auto ddk = nsg::dual_ideal(s, dk);
    for (Integer x = -s.window(); x <= s.window(); ++x) {
      if (k.contains(x)) EXPECT_TRUE(ddk.contains(x)) << x;
    }
    EXPECT_EQ(nsg::dual_ideal(s, ddk), dk);
    // K-duality: K - (K - I) = I, for I = S and I = S - K.
    for (const auto& i : {RelativeIdeal::whole(s), dk}) {
      const auto ki = colon(k, i, s.window());
      for (Integer x = -s.window(); x <= s.window(); ++x) {
        bool in = true;
        for (Integer y : ki) {
          if (!k.contains(x + y)) { in = false; break; }
        }
        EXPECT_EQ(in, i.contains(x)) << x;
      }
    }
    // K contains S; S - K is inside S.
    for (Integer x = -s.window(); x <= s.window(); ++x) {
      if (s.contains(x)) EXPECT_TRUE(k.contains(x)) << x;
      if (dk.contains(x)) EXPECT_TRUE(s.contains(x)) << x;
    }
    // Shift invariance of the trace.
    const auto r = nsg::trace_and_residue(s);
    const auto expected = nsg::ideal_sum(k, dk);
    EXPECT_EQ(r.trace, expected);
    for (Integer a : {Integer{1}, s.multiplicity(), std::max<Integer>(s.frobenius(), 1)}) {
      const auto ka = k.shifted(a);
      EXPECT_EQ(nsg::ideal_sum(ka, nsg::dual_ideal(s, ka)), r.trace) << "shift " << a;
    }
    // Gorenstein triad.
    EXPECT_EQ(nsg::is_symmetric(s), r.residue == 0);
    EXPECT_EQ(r.residue == 0, r.trace == RelativeIdeal::whole(s));
    EXPECT_EQ(r.gorenstein, nsg::is_symmetric(s));
    // Sum is commutative.
    EXPECT_EQ(nsg::ideal_sum(dk, k), r.trace);
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, IdealProperties, ::testing::Values(5, 11, 23));

}  // namespace
