#include <amalgam/amalgam.hpp>

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace amalgam;

namespace {

oracle::ElemSet as_set(const Ideal& i) { return {i.elements().begin(), i.elements().end()}; }

std::vector<FiniteRing> lattice_rings() {
  std::vector<FiniteRing> out;
  for (int n = 2; n <= 16; ++n) out.push_back(make_zmod(n));
  const FiniteRing z2 = make_zmod(2);
  out.push_back(make_product({z2, z2}));
  out.push_back(make_product({z2, z2, z2}));
  out.push_back(make_product({make_zmod(2), make_zmod(4)}));
  out.push_back(make_product({make_zmod(3), make_zmod(3)}));
  out.push_back(make_trivial_extension(z2, FiniteModule::of_quotient(zero_ideal(z2))));
  const FiniteRing z4 = make_zmod(4);
  out.push_back(make_trivial_extension(z4, FiniteModule::of_quotient(ideal_generated(z4, {2}))));
  out.push_back(make_duplication(z4, ideal_generated(z4, {2})).ring());
  const FiniteRing z6 = make_zmod(6);
  out.push_back(make_duplication(z6, ideal_generated(z6, {3})).ring());
  return out;
}

}  // namespace

TEST(IdealGenerated, FourAndSixInZ12) {
  const FiniteRing r = make_zmod(12);
  const Ideal i = ideal_generated(r, {4, 6});
  EXPECT_EQ(as_set(i), oracle::zmod_ideal(12, {4, 6}));
  EXPECT_EQ(i.elements(), (std::vector<Elem>{0, 2, 4, 6, 8, 10}));
  EXPECT_EQ(as_set(i), oracle::closure(r, {4, 6}));
}

TEST(IdealGenerated, EmptyAndUnitGenerators) {
  const FiniteRing r = make_zmod(6);
  EXPECT_TRUE(ideal_generated(r, std::span<const Elem>{}).is_zero());
  EXPECT_TRUE(ideal_generated(r, {1}).is_whole());
}

TEST(IdealGenerated, RejectsForeignElements) {
  const FiniteRing a = make_zmod(6);
  const FiniteRing b = make_zmod(6);
  EXPECT_THROW(ideal_generated(a, std::vector<RingElem>{b.elem(2)}), RingMismatch);
  EXPECT_THROW(ideal_generated(a, {7}), AlgebraError);
}

TEST(IdealGenerated, MatchesGcdOracleOnZmod) {
  for (int n = 2; n <= 30; ++n) {
    const FiniteRing r = make_zmod(n);
    for (Elem x = 0; x < static_cast<Elem>(n); ++x)
      for (Elem y = x; y < static_cast<Elem>(n); ++y)
        ASSERT_EQ(as_set(ideal_generated(r, {x, y})), oracle::zmod_ideal(n, {x, y}));
  }
}

TEST(IdealGenerated, IdempotentAndMinimal) {
  for (const auto& r : lattice_rings()) {
    const auto ideals = enumerate_ideals(r);
    for (Elem x = 0; x < r.order(); ++x) {
      const Ideal i = ideal_generated(r, {x});
      ASSERT_EQ(ideal_generated(r, std::span<const Elem>(i.elements())), i);
      ASSERT_EQ(as_set(i), oracle::closure(r, {x}));
      for (const auto& k : ideals)
        if (k.contains(x)) ASSERT_TRUE(i.subset_of(k));
    }
  }
}

TEST(IdealSum, Examples) {
  const FiniteRing r = make_zmod(12);
  const Ideal four = ideal_generated(r, {4});
  const Ideal six = ideal_generated(r, {6});
  EXPECT_EQ(ideal_sum(four, six), ideal_generated(r, {2}));
  EXPECT_EQ(ideal_sum(four, zero_ideal(r)), four);
  EXPECT_TRUE(ideal_sum(four, whole_ideal(r)).is_whole());
  EXPECT_THROW(ideal_sum(four, zero_ideal(make_zmod(12))), RingMismatch);
}

TEST(Enumerate, Z12HasDivisorLattice) {
  const auto ideals = enumerate_ideals(make_zmod(12));
  ASSERT_EQ(ideals.size(), 6u);
  std::vector<std::size_t> sizes;
  for (const auto& i : ideals) sizes.push_back(i.size());
  // (0),(6),(4),(3),(2),(1)
  EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 2, 3, 4, 6, 12}));
  EXPECT_EQ(ideals[1].elements(), (std::vector<Elem>{0, 6}));
  EXPECT_EQ(ideals[2].elements(), (std::vector<Elem>{0, 4, 8}));
}

TEST(Enumerate, SmallCases) {
  EXPECT_EQ(enumerate_ideals(make_zmod(2)).size(), 2u);
  EXPECT_EQ(enumerate_ideals(make_product({make_zmod(2), make_zmod(2)})).size(), 4u);
}

TEST(Enumerate, AgreesWithIndependentEnumeration) {
  for (const auto& r : lattice_rings()) {
    std::set<oracle::ElemSet> mine;
    for (const auto& i : enumerate_ideals(r)) ASSERT_TRUE(mine.insert(as_set(i)).second) << "duplicate";
    ASSERT_EQ(mine, oracle::all_ideals(r)) << r.label();
  }
  for (int n = 2; n <= 60; ++n) ASSERT_EQ(enumerate_ideals(make_zmod(n)).size(), oracle::divisor_count(n));
}

TEST(Enumerate, CeilingIsEnforced) {
  EXPECT_THROW(enumerate_ideals(make_zmod(600)), CeilingExceeded);
  EXPECT_EQ(enumerate_ideals(make_zmod(600), 600).size(), oracle::divisor_count(600));
  EXPECT_THROW(enumerate_ideals(make_zmod(20), 10), CeilingExceeded);
}

TEST(Enumerate, OrderIsCanonical) {
  for (const auto& r : lattice_rings()) {
    const auto ideals = enumerate_ideals(r);
    for (std::size_t i = 1; i < ideals.size(); ++i) ASSERT_TRUE(canonical_less(ideals[i - 1], ideals[i]));
  }
}

TEST(Ideal, SizeDividesOrder) {
  for (const auto& r : lattice_rings())
    for (const auto& i : enumerate_ideals(r)) ASSERT_EQ(r.order() % i.size(), 0u);
}

TEST(IsPrime, Examples) {
  const FiniteRing r = make_zmod(12);
  EXPECT_TRUE(is_prime(ideal_generated(r, {2})));
  const Ideal four = ideal_generated(r, {4});
  EXPECT_FALSE(is_prime(four));
  const auto w = primality_witness(four);
  ASSERT_TRUE(w);
  EXPECT_EQ(*w, (std::pair<Elem, Elem>{2, 2}));
  EXPECT_FALSE(is_prime(whole_ideal(r)));
}

TEST(IsPrime, AgreesWithOracle) {
  for (const auto& r : lattice_rings())
    for (const auto& i : enumerate_ideals(r)) ASSERT_EQ(is_prime(i), oracle::prime(r, as_set(i)));
  for (int n = 2; n <= 40; ++n) ASSERT_EQ(spectrum(make_zmod(n)).size(), oracle::prime_divisor_count(n));
}

TEST(IsMaximal, Examples) {
  EXPECT_TRUE(is_maximal(ideal_generated(make_zmod(4), {2})));
  EXPECT_FALSE(is_maximal(ideal_generated(make_zmod(12), {4})));
  EXPECT_FALSE(is_maximal(zero_ideal(make_zmod(6))));
}

TEST(IsMaximal, AgreesWithContainmentAndQuotientField) {
  for (const auto& r : lattice_rings()) {
    const auto all = oracle::all_ideals(r);
    for (const auto& i : enumerate_ideals(r)) {
      ASSERT_EQ(is_maximal(i), oracle::maximal(r, as_set(i), all));
      if (i.is_proper()) ASSERT_EQ(is_maximal(i), quotient_is_field(i));
    }
  }
}

TEST(Spectrum, EveryPrimeIsMaximal) {
  for (const auto& r : lattice_rings()) {
    const LatticeInfo l = analyze_lattice(r);
    EXPECT_EQ(l.primes, l.maximals) << r.label();
  }
}

TEST(Nilradical, Examples) {
  EXPECT_EQ(nilradical(make_zmod(8)).elements(), (std::vector<Elem>{0, 2, 4, 6}));
  EXPECT_TRUE(nilradical(make_zmod(6)).is_zero());
  const FiniteRing z2 = make_zmod(2);
  const FiniteRing t = make_trivial_extension(z2, FiniteModule::of_quotient(zero_ideal(z2)));
  EXPECT_EQ(nilradical(t), module_ideal(t));
}

TEST(Nilradical, EqualsIntersectionOfPrimesAndOracle) {
  for (const auto& r : lattice_rings()) {
    const Ideal n = nilradical(r);
    EXPECT_EQ(as_set(n), oracle::nilpotents(r));
    EXPECT_EQ(n, intersection_of(r, spectrum(r))) << r.label();
  }
}

TEST(IdealOps, IntersectionImagePreimage) {
  const FiniteRing z12 = make_zmod(12);
  EXPECT_EQ(ideal_intersection(ideal_generated(z12, {2}), ideal_generated(z12, {3})), ideal_generated(z12, {6}));
  const FiniteRing z8 = make_zmod(8);
  const Quotient q = make_quotient(z8, ideal_generated(z8, {4}));
  EXPECT_EQ(ideal_preimage(q.surjection, zero_ideal(q.ring)), ideal_generated(z8, {4}));
  const RingHom id = identity_hom(z12);
  EXPECT_EQ(ideal_image(id, ideal_generated(z12, {2})), ideal_generated(z12, {2}));
}

TEST(IdealOps, ImageRequiresSurjection) {
  const FiniteRing z2 = make_zmod(2);
  const FiniteRing t = make_trivial_extension(z2, FiniteModule::of_quotient(zero_ideal(z2)));
  const RingHom emb = trivial_extension_embedding(t);
  EXPECT_THROW(ideal_image(emb, whole_ideal(z2)), AlgebraError);
}

TEST(IdealOps, MakeIdealValidates) {
  const FiniteRing z6 = make_zmod(6);
  EXPECT_THROW(make_ideal(z6, {0, 1}), AlgebraError);
  EXPECT_THROW(make_ideal(z6, {2, 4}), AlgebraError);
  EXPECT_NO_THROW(make_ideal(z6, {0, 2, 4}));
}

TEST(IdealOps, CrossRingIsAnError) {
  const FiniteRing a = make_zmod(6);
  const FiniteRing b = make_zmod(6);
  EXPECT_THROW(ideal_intersection(whole_ideal(a), whole_ideal(b)), RingMismatch);
  EXPECT_FALSE(whole_ideal(a) == whole_ideal(b));
}
