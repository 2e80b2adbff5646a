// Copyright 2026 The amalgam-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// The amalgamated algebra A ⋈^f J = {(a, f(a)+j) : a ∈ A, j ∈ J} ⊆ A × B,
// the subring f(A)+J of B, and the two families of prime ideals that make
// up its spectrum.

#ifndef AMALGAM_AMALGAMATION_HPP
#define AMALGAM_AMALGAMATION_HPP

#include <amalgam/hom.hpp>
#include <amalgam/ideal.hpp>
#include <amalgam/lattice.hpp>
#include <amalgam/quotient.hpp>
#include <amalgam/ring.hpp>

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace amalgam {

/// f(A)+J as a ring of its own, its inclusion into B, and J as an ideal of it.
struct FAPlusJ {
  FiniteRing ring;
  RingHom inclusion;
  Ideal j_ideal;

  /// Index in f(A)+J of an element of B, or kNoElem.
  Elem position(Elem b) const { return ring.structure<SubRing>().position[b]; }
};

/// The subring {f(a) + j} of f's target.
inline FAPlusJ subring_fA_plus_J(const RingHom& f, const Ideal& J, const ConstructionOptions& opts = {}) {
  const FiniteRing& b = f.target();
  if (!(J.ring() == b)) throw RingMismatch("J must be an ideal of the homomorphism's target");
  detail::ElemSet seen(b.order());
  std::vector<Elem> members;
  for (Elem a = 0; a < f.source().order(); ++a)
    for (Elem j : J.elements()) {
      const Elem s = b.add(f(a), j);
      if (seen.insert(s)) members.push_back(s);
    }
  FiniteRing s = make_subring(b, std::move(members), "f(A)+J in " + b.label(), opts);
  const auto& sub = s.structure<SubRing>();
  RingHom incl = make_hom(s, b, sub.members);
  std::vector<Elem> j_local;
  for (Elem j : J.elements()) j_local.push_back(sub.position[j]);
  Ideal j_ideal = make_ideal(s, std::move(j_local));
  return FAPlusJ{std::move(s), std::move(incl), std::move(j_ideal)};
}

class AmalgamationRing final : public detail::RingImpl {
 public:
  AmalgamationRing(FiniteRing a, FiniteRing b, RingHom hom, Ideal j)
      : RingImpl(RingKind::amalgamation, a.order() * j.size(),
                 a.label() + " bowtie^f " + detail_label(j)),
        A(std::move(a)),
        B(std::move(b)),
        f(std::move(hom)),
        J(std::move(j)),
        j_position(B.order(), kNoElem) {
    for (Elem p = 0; p < J.size(); ++p) j_position[J.elements()[p]] = p;
  }

  FiniteRing A;
  FiniteRing B;
  RingHom f;
  Ideal J;
  std::vector<Elem> j_position;

  Elem first(Elem x) const { return static_cast<Elem>(x / J.size()); }
  Elem j_part(Elem x) const { return J.elements()[x % J.size()]; }
  Elem second(Elem x) const { return B.add(f(first(x)), j_part(x)); }

  /// Index of (a, b), or kNoElem when b - f(a) lies outside J.
  Elem from_pair(Elem a, Elem b) const {
    const Elem p = j_position[B.sub(b, f(a))];
    return p == kNoElem ? kNoElem : static_cast<Elem>(std::size_t{a} * J.size() + p);
  }

  Elem compute_one() const { return from_pair(A.one(), B.one()); }
  std::string format(Elem x) const override {
    return "(" + A.format(first(x)) + "," + B.format(second(x)) + ")";
  }

 protected:
  Elem do_add(Elem x, Elem y) const override {
    return from_pair(A.add(first(x), first(y)), B.add(second(x), second(y)));
  }
  Elem do_mul(Elem x, Elem y) const override {
    return from_pair(A.mul(first(x), first(y)), B.mul(second(x), second(y)));
  }
  Elem do_neg(Elem x) const override { return from_pair(A.neg(first(x)), B.neg(second(x))); }

 private:
  static std::string detail_label(const Ideal& j) {
    return j.is_whole() ? j.ring().label() : detail::short_ideal_label(j);
  }
};

/// A ⋈^f J with back-references to A, B, f and J. Every invariant is checked
/// at construction.
class Amalgamation {
 public:
  const FiniteRing& ring() const noexcept { return ring_; }
  const FiniteRing& a_ring() const noexcept { return impl().A; }
  const FiniteRing& b_ring() const noexcept { return impl().B; }
  const RingHom& hom() const noexcept { return impl().f; }
  const Ideal& j_ideal() const noexcept { return impl().J; }
  const FAPlusJ& fa_plus_j() const noexcept { return *subring_; }

  Elem first(Elem x) const { return impl().first(x); }
  Elem second(Elem x) const { return impl().second(x); }
  Elem from_pair(Elem a, Elem b) const { return impl().from_pair(a, b); }
  /// (a, f(a)+j) for j in J.
  Elem element(Elem a, Elem j) const { return from_pair(a, b_ring().add(hom()(a), j)); }

  /// (a, f(a)+j) ↦ a.
  const RingHom& projection_a() const noexcept { return *proj_a_; }
  /// (a, f(a)+j) ↦ f(a)+j, landing in f(A)+J.
  const RingHom& projection_subring() const noexcept { return *proj_s_; }

  std::string describe() const { return ring_.label(); }

 private:
  friend Amalgamation make_amalgamation(const FiniteRing&, const FiniteRing&, const RingHom&, const Ideal&,
                                        const ConstructionOptions&);

  explicit Amalgamation(FiniteRing r) : ring_(std::move(r)) {}
  const AmalgamationRing& impl() const { return ring_.structure<AmalgamationRing>(); }

  FiniteRing ring_;
  std::optional<FAPlusJ> subring_;
  std::optional<RingHom> proj_a_;
  std::optional<RingHom> proj_s_;
};

inline Amalgamation make_amalgamation(const FiniteRing& a, const FiniteRing& b, const RingHom& f, const Ideal& j,
                                      const ConstructionOptions& opts = {}) {
  if (!(f.source() == a) || !(f.target() == b))
    throw RingMismatch("homomorphism endpoints do not match A -> B");
  if (!(j.ring() == b)) throw RingMismatch("J must be an ideal of B");
  FiniteRing r = detail::finalize_ring<AmalgamationRing>(opts, a, b, f, j);
  const auto& impl = r.structure<AmalgamationRing>();

  // |carrier| = |A|·|J| holds by the indexing; closure under the ring
  // operations is checked pair by pair.
  const auto n = static_cast<Elem>(r.order());
  if (r.one() == kNoElem) throw AlgebraError("(1,1) is not in the amalgamation");
  for (Elem x = 0; x < n; ++x) {
    if (r.neg(x) == kNoElem) throw AlgebraError("amalgamation not closed under negation");
    for (Elem y = x; y < n; ++y)
      if (r.add(x, y) == kNoElem || r.mul(x, y) == kNoElem)
        throw AlgebraError("amalgamation carrier not closed under + and *");
  }

  Amalgamation out(r);
  out.subring_ = subring_fA_plus_J(f, j, opts);
  std::vector<Elem> pa(n), ps(n);
  for (Elem x = 0; x < n; ++x) {
    pa[x] = impl.first(x);
    ps[x] = out.subring_->position(impl.second(x));
  }
  out.proj_a_ = make_hom(r, a, std::move(pa));
  out.proj_s_ = make_hom(r, out.subring_->ring, std::move(ps));
  return out;
}

/// A ⋈ I = A ⋈^id I.
inline Amalgamation make_duplication(const FiniteRing& a, const Ideal& i, const ConstructionOptions& opts = {}) {
  if (!(i.ring() == a)) throw RingMismatch("I must be an ideal of A");
  return make_amalgamation(a, a, identity_hom(a), i, opts);
}

/// P'^f = {(p, f(p)+j) : p ∈ P, j ∈ J}. Primality of P transfers; checked.
inline Ideal extend_prime_A(const Amalgamation& am, const Ideal& p) {
  if (!(p.ring() == am.a_ring())) throw RingMismatch("P must be an ideal of A");
  std::vector<Elem> out;
  out.reserve(p.size() * am.j_ideal().size());
  for (Elem a : p.elements())
    for (Elem j : am.j_ideal().elements()) out.push_back(am.element(a, j));
  Ideal result = Ideal::trusted(am.ring(), std::move(out));
  if (is_prime(p) && !is_prime(result))
    throw AlgebraError("extension of the prime " + p.format() + " is not prime");
  return result;
}

/// Q̄^f = {(a, f(a)+j) : f(a)+j ∈ Q}. Prime when Q is prime and J ⊄ Q; checked.
inline Ideal extend_prime_B(const Amalgamation& am, const Ideal& q) {
  if (!(q.ring() == am.b_ring())) throw RingMismatch("Q must be an ideal of B");
  std::vector<Elem> out;
  for (Elem x = 0; x < am.ring().order(); ++x)
    if (q.contains(am.second(x))) out.push_back(x);
  Ideal result = Ideal::trusted(am.ring(), std::move(out));
  if (is_prime(q) && !am.j_ideal().subset_of(q) && !is_prime(result))
    throw AlgebraError("contraction along the prime " + q.format() + " is not prime");
  return result;
}

/// One candidate prime of the amalgamation with the ideal it came from.
struct ClassifiedIdeal {
  enum class Route { extend_a, extend_b };
  Route route;
  Ideal source;  // P of A or Q of B
  Ideal ideal;   // P'^f or Q̄^f
};

/// Direct Spec/Max of the amalgamation against the two-family description.
struct SpectrumClassification {
  std::vector<Ideal> direct_spec;
  std::vector<Ideal> direct_max;
  std::vector<ClassifiedIdeal> classified_spec;
  std::vector<ClassifiedIdeal> classified_max;
  std::vector<Ideal> spec_missing;     // direct primes no candidate produced
  std::vector<Ideal> spec_unexpected;  // candidates that are not direct primes
  std::vector<Ideal> max_missing;
  std::vector<Ideal> max_unexpected;

  bool consistent() const {
    return spec_missing.empty() && spec_unexpected.empty() && max_missing.empty() && max_unexpected.empty();
  }
  std::size_t discrepancies() const {
    return spec_missing.size() + spec_unexpected.size() + max_missing.size() + max_unexpected.size();
  }
};

namespace detail {

inline void diff_families(const std::vector<Ideal>& direct, const std::vector<ClassifiedIdeal>& classified,
                          std::vector<Ideal>& missing, std::vector<Ideal>& unexpected) {
  auto in_classified = [&](const Ideal& I) {
    return std::any_of(classified.begin(), classified.end(), [&](const auto& c) { return c.ideal == I; });
  };
  auto in_direct = [&](const Ideal& I) { return std::find(direct.begin(), direct.end(), I) != direct.end(); };
  for (const auto& I : direct)
    if (!in_classified(I)) missing.push_back(I);
  for (const auto& c : classified)
    if (!in_direct(c.ideal) &&
        std::find(unexpected.begin(), unexpected.end(), c.ideal) == unexpected.end())
      unexpected.push_back(c.ideal);
}

}  // namespace detail

/// Same as classify_spectrum(am, ceiling) with the three lattices supplied.
inline SpectrumClassification classify_spectrum(const Amalgamation& am, const LatticeInfo& amalg_lattice,
                                                const LatticeInfo& a_lattice, const LatticeInfo& b_lattice) {
  SpectrumClassification rep;
  rep.direct_spec = amalg_lattice.primes;
  rep.direct_max = amalg_lattice.maximals;
  const Ideal& j = am.j_ideal();
  using Route = ClassifiedIdeal::Route;
  for (const auto& p : a_lattice.primes) rep.classified_spec.push_back({Route::extend_a, p, extend_prime_A(am, p)});
  for (const auto& q : b_lattice.primes)
    if (!j.subset_of(q)) rep.classified_spec.push_back({Route::extend_b, q, extend_prime_B(am, q)});
  for (const auto& p : a_lattice.maximals) rep.classified_max.push_back({Route::extend_a, p, extend_prime_A(am, p)});
  for (const auto& q : b_lattice.maximals)
    if (!j.subset_of(q)) rep.classified_max.push_back({Route::extend_b, q, extend_prime_B(am, q)});
  detail::diff_families(rep.direct_spec, rep.classified_spec, rep.spec_missing, rep.spec_unexpected);
  detail::diff_families(rep.direct_max, rep.classified_max, rep.max_missing, rep.max_unexpected);
  return rep;
}

/// Computes Spec and Max of the amalgamation directly and from the primes of
/// A and B, itemizing every disagreement.
inline SpectrumClassification classify_spectrum(const Amalgamation& am, std::size_t ceiling = kDefaultCeiling) {
  require_within_ceiling(am.ring(), ceiling);
  require_within_ceiling(am.a_ring(), ceiling);
  require_within_ceiling(am.b_ring(), ceiling);
  return classify_spectrum(am, analyze_lattice(am.ring(), ceiling), analyze_lattice(am.a_ring(), ceiling),
                           analyze_lattice(am.b_ring(), ceiling));
}

}  // namespace amalgam

#endif  // AMALGAM_AMALGAMATION_HPP
