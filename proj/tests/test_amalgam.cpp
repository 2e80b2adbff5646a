#include <amalgam/amalgam.hpp>

#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"

using namespace amalgam;

namespace {

FiniteRing boolean_power(int n) {
  std::vector<FiniteRing> fs(n, make_zmod(2));
  return make_product(fs);
}

RingHom diagonal(const FiniteRing& a, const FiniteRing& b) {
  const auto& p = b.structure<ProductRing>();
  std::vector<Elem> t(a.order());
  for (Elem x = 0; x < t.size(); ++x) t[x] = p.compose(std::vector<Elem>(p.factors.size(), x));
  return make_hom(a, b, t);
}

Amalgamation boolean_example(int n) {
  const FiniteRing a = make_zmod(2);
  const FiniteRing b = boolean_power(n);
  return make_amalgamation(a, b, diagonal(a, b), whole_ideal(b));
}

Amalgamation square_zero_example() {
  const FiniteRing a = make_zmod(2);
  const FiniteRing b = make_trivial_extension(a, FiniteModule::of_quotient(zero_ideal(a)));
  return make_amalgamation(a, b, trivial_extension_embedding(b), module_ideal(b));
}

Amalgamation dupl(int n, Elem g) {
  const FiniteRing a = make_zmod(n);
  return make_duplication(a, ideal_generated(a, {g}));
}

std::vector<Amalgamation> sample() {
  std::vector<Amalgamation> out;
  out.push_back(dupl(4, 2));
  out.push_back(dupl(6, 3));
  out.push_back(dupl(8, 2));
  out.push_back(dupl(12, 4));
  out.push_back(dupl(9, 0));
  for (int n = 1; n <= 3; ++n) out.push_back(boolean_example(n));
  out.push_back(square_zero_example());
  const FiniteRing z12 = make_zmod(12);
  const Quotient q = make_quotient(z12, ideal_generated(z12, {4}));
  for (const auto& j : enumerate_ideals(q.ring)) out.push_back(make_amalgamation(z12, q.ring, q.surjection, j));
  const FiniteRing z4 = make_zmod(4);
  const FiniteRing t = make_trivial_extension(z4, FiniteModule::of_ideal(ideal_generated(z4, {2})));
  out.push_back(make_amalgamation(z4, t, trivial_extension_embedding(t), module_ideal(t)));
  return out;
}

/// The pairs (a, f(a)+j) computed straight from A, B, f, J.
std::set<std::pair<Elem, Elem>> pair_carrier(const Amalgamation& am) {
  std::set<std::pair<Elem, Elem>> out;
  for (Elem a = 0; a < am.a_ring().order(); ++a)
    for (Elem j : am.j_ideal().elements()) out.insert({a, am.b_ring().add(am.hom()(a), j)});
  return out;
}

}  // namespace

TEST(Amalgamation, BooleanExampleHasOrder16) {
  EXPECT_EQ(boolean_example(3).ring().order(), 16u);
}

TEST(Amalgamation, ZeroIdealGivesGraphOfF) {
  const FiniteRing a = make_zmod(2);
  const FiniteRing b = boolean_power(3);
  const Amalgamation am = make_amalgamation(a, b, diagonal(a, b), zero_ideal(b));
  EXPECT_EQ(am.ring().order(), a.order());
  for (Elem x = 0; x < am.ring().order(); ++x) EXPECT_EQ(am.second(x), am.hom()(am.first(x)));
}

TEST(Amalgamation, DuplicationOrders) {
  EXPECT_EQ(dupl(4, 2).ring().order(), 8u);
  EXPECT_EQ(dupl(6, 3).ring().order(), 12u);
  for (int n = 2; n <= 10; ++n) EXPECT_EQ(dupl(n, 0).ring().order(), static_cast<std::size_t>(n));
}

TEST(Amalgamation, CarrierIsTheSubringOfPairs) {
  for (const auto& am : sample()) {
    const auto pairs = pair_carrier(am);
    const FiniteRing& a = am.a_ring();
    const FiniteRing& b = am.b_ring();
    const FiniteRing& r = am.ring();
    ASSERT_EQ(r.order(), pairs.size());
    ASSERT_EQ(r.order(), a.order() * am.j_ideal().size());
    std::set<std::pair<Elem, Elem>> seen;
    for (Elem x = 0; x < r.order(); ++x) seen.insert({am.first(x), am.second(x)});
    ASSERT_EQ(seen, pairs);
    ASSERT_EQ(am.first(r.one()), a.one());
    ASSERT_EQ(am.second(r.one()), b.one());
    ASSERT_EQ(r.zero(), am.from_pair(0, 0));
    for (Elem x = 0; x < r.order(); ++x)
      for (Elem y = 0; y < r.order(); ++y) {
        const Elem s = r.add(x, y);
        const Elem p = r.mul(x, y);
        ASSERT_EQ(am.first(s), a.add(am.first(x), am.first(y)));
        ASSERT_EQ(am.second(s), b.add(am.second(x), am.second(y)));
        ASSERT_EQ(am.first(p), a.mul(am.first(x), am.first(y)));
        ASSERT_EQ(am.second(p), b.mul(am.second(x), am.second(y)));
      }
    ASSERT_TRUE(check_ring_axioms(r, 5).ok);
  }
}

TEST(Amalgamation, ProjectionKernelIsZeroTimesJ) {
  for (const auto& am : sample()) {
    std::vector<Elem> zj;
    for (Elem j : am.j_ideal().elements()) zj.push_back(am.from_pair(0, j));
    EXPECT_EQ(kernel(am.projection_a()), make_ideal(am.ring(), zj));
    EXPECT_TRUE(am.projection_a().is_surjective());
    EXPECT_EQ(make_quotient(am.ring(), kernel(am.projection_a())).ring.order(), am.a_ring().order());
    EXPECT_TRUE(am.projection_subring().is_surjective());
  }
}

TEST(Amalgamation, RejectsMismatchedInputs) {
  const FiniteRing a = make_zmod(4);
  const FiniteRing b = make_zmod(4);
  const FiniteRing c = make_zmod(4);
  const RingHom f = identity_hom(a);
  EXPECT_THROW(make_amalgamation(a, b, f, whole_ideal(a)), RingMismatch);
  EXPECT_THROW(make_amalgamation(a, a, f, whole_ideal(c)), RingMismatch);
  EXPECT_THROW(make_duplication(a, whole_ideal(b)), RingMismatch);
}

TEST(Amalgamation, DuplicationEqualsIdentityAmalgamation) {
  for (int n = 2; n <= 12; ++n) {
    const FiniteRing a = make_zmod(n);
    for (const auto& i : enumerate_ideals(a)) {
      const Amalgamation d = make_duplication(a, i);
      const Amalgamation m = make_amalgamation(a, a, identity_hom(a), i);
      ASSERT_EQ(d.ring().order(), m.ring().order());
      for (Elem x = 0; x < d.ring().order(); ++x) {
        ASSERT_EQ(d.first(x), m.first(x));
        ASSERT_EQ(d.second(x), m.second(x));
        for (Elem y = 0; y < d.ring().order(); ++y) {
          ASSERT_EQ(d.ring().add(x, y), m.ring().add(x, y));
          ASSERT_EQ(d.ring().mul(x, y), m.ring().mul(x, y));
        }
      }
    }
  }
}

TEST(SubringFAPlusJ, SurjectiveFGivesAllOfB) {
  const FiniteRing z12 = make_zmod(12);
  const Quotient q = make_quotient(z12, ideal_generated(z12, {3}));
  const FAPlusJ s = subring_fA_plus_J(q.surjection, zero_ideal(q.ring));
  EXPECT_EQ(s.ring.order(), q.ring.order());
}

TEST(SubringFAPlusJ, DiagonalWithTwoFreeCoordinates) {
  const FiniteRing a = make_zmod(2);
  const FiniteRing b = boolean_power(3);
  const RingHom f = diagonal(a, b);
  const auto& p = b.structure<ProductRing>();
  std::vector<Elem> gens{p.compose(std::vector<Elem>{1, 0, 0}), p.compose(std::vector<Elem>{0, 1, 0})};
  const Ideal j = ideal_generated(b, std::span<const Elem>(gens));
  ASSERT_EQ(j.size(), 4u);
  std::set<Elem> direct;
  for (Elem x = 0; x < 2; ++x)
    for (Elem y : j.elements()) direct.insert(b.add(f(x), y));
  const FAPlusJ s = subring_fA_plus_J(f, j);
  EXPECT_EQ(s.ring.order(), direct.size());
  EXPECT_EQ(s.ring.order(), 8u);
  EXPECT_EQ(s.j_ideal.size(), j.size());
  EXPECT_TRUE(check_ring_axioms(s.ring).ok);
}

TEST(SubringFAPlusJ, EmbeddingIntoTrivialExtensionCoversB) {
  const Amalgamation am = square_zero_example();
  EXPECT_EQ(am.fa_plus_j().ring.order(), 4u);
  EXPECT_EQ(am.fa_plus_j().ring.order(), am.b_ring().order());
}

TEST(ExtendPrimeA, DuplicationOfZ4) {
  const Amalgamation am = dupl(4, 2);
  const Ideal p = extend_prime_A(am, ideal_generated(am.a_ring(), {2}));
  std::set<std::pair<Elem, Elem>> pairs;
  for (Elem x : p.elements()) pairs.insert({am.first(x), am.second(x)});
  EXPECT_EQ(pairs, (std::set<std::pair<Elem, Elem>>{{0, 0}, {0, 2}, {2, 0}, {2, 2}}));
  EXPECT_TRUE(is_maximal(p));
  EXPECT_EQ(make_quotient(am.ring(), p).ring.order(), 2u);
}

TEST(ExtendPrimeA, DegenerateCases) {
  const Amalgamation am = dupl(6, 0);
  EXPECT_TRUE(extend_prime_A(am, zero_ideal(am.a_ring())).is_zero());
  EXPECT_TRUE(extend_prime_A(am, whole_ideal(am.a_ring())).is_whole());
}

TEST(ExtendPrimeA, PullsBackToP) {
  for (const auto& am : sample())
    for (const auto& p : enumerate_ideals(am.a_ring())) {
      const Ideal e = extend_prime_A(am, p);
      std::set<Elem> firsts;
      for (Elem x : e.elements()) firsts.insert(am.first(x));
      ASSERT_EQ(std::vector<Elem>(firsts.begin(), firsts.end()), p.elements());
      if (is_prime(p)) ASSERT_TRUE(is_prime(e));
    }
}

TEST(ExtendPrimeB, WholeBGivesWholeRing) {
  const Amalgamation am = boolean_example(3);
  EXPECT_TRUE(extend_prime_B(am, whole_ideal(am.b_ring())).is_whole());
}

TEST(ExtendPrimeB, BooleanPrimeOffJ) {
  const Amalgamation am = boolean_example(3);
  const auto& p = am.b_ring().structure<ProductRing>();
  std::vector<Elem> gens{p.compose(std::vector<Elem>{1, 0, 0}), p.compose(std::vector<Elem>{0, 1, 0})};
  const Ideal q = ideal_generated(am.b_ring(), std::span<const Elem>(gens));
  ASSERT_TRUE(is_prime(q));
  ASSERT_FALSE(am.j_ideal().subset_of(q));
  const Ideal qbar = extend_prime_B(am, q);
  EXPECT_TRUE(is_prime(qbar));
  for (Elem x = 0; x < am.ring().order(); ++x) EXPECT_EQ(qbar.contains(x), q.contains(am.second(x)));
}

TEST(ExtendPrimeB, PrimesContainingJStayPrime) {
  for (const auto& am : sample())
    for (const auto& q : spectrum(am.b_ring())) {
      const Ideal qbar = extend_prime_B(am, q);
      if (am.j_ideal().subset_of(q)) {
        EXPECT_TRUE(is_prime(qbar)) << am.describe() << " " << q.format();
      }
    }
}

TEST(ClassifySpectrum, DuplicationOfZ4) {
  const SpectrumClassification c = classify_spectrum(dupl(4, 2));
  EXPECT_TRUE(c.consistent());
  EXPECT_EQ(c.direct_spec.size(), 1u);
}

TEST(ClassifySpectrum, ZeroJ) {
  const FiniteRing a = make_zmod(6);
  const FiniteRing b = make_product({make_zmod(2), make_zmod(3)});
  std::vector<Elem> t(6);
  const auto& p = b.structure<ProductRing>();
  for (Elem x = 0; x < 6; ++x) t[x] = p.compose(std::vector<Elem>{x % 2, x % 3});
  const Amalgamation am = make_amalgamation(a, b, make_hom(a, b, t), zero_ideal(b));
  const SpectrumClassification c = classify_spectrum(am);
  EXPECT_TRUE(c.consistent());
  for (const auto& x : c.classified_spec) EXPECT_EQ(x.route, ClassifiedIdeal::Route::extend_a);
}

TEST(ClassifySpectrum, BooleanExample) {
  const SpectrumClassification c = classify_spectrum(boolean_example(3));
  EXPECT_TRUE(c.consistent());
  EXPECT_EQ(c.direct_spec.size(), c.direct_max.size());
  EXPECT_EQ(c.direct_spec.size(), 4u);
}

TEST(ClassifySpectrum, ConsistentOnSample) {
  for (const auto& am : sample()) EXPECT_EQ(classify_spectrum(am).discrepancies(), 0u) << am.describe();
}

TEST(ClassifySpectrum, CeilingApplies) {
  EXPECT_THROW(classify_spectrum(boolean_example(3), 8), CeilingExceeded);
}
