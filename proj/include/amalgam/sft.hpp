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

// SFT certificates. An ideal I is SFT when some finitely generated F ⊆ I and
// some k ≥ 1 give x^k ∈ F for every x ∈ I; a certificate is the pair
// (generators of F, k). The combinators below build certificates for
// quotients, sums and amalgamations out of certificates for the pieces, and
// every one of them re-verifies its output before returning it.

#ifndef AMALGAM_SFT_HPP
#define AMALGAM_SFT_HPP

#include <amalgam/amalgamation.hpp>
#include <amalgam/error.hpp>
#include <amalgam/ideal.hpp>
#include <amalgam/lattice.hpp>
#include <amalgam/predicates.hpp>
#include <amalgam/quotient.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace amalgam {

struct SftCertificate {
  Ideal target;
  std::vector<Elem> generators;
  std::uint64_t exponent = 1;

  const FiniteRing& ambient() const noexcept { return target.ring(); }

  std::string format_generators() const {
    std::string s = "{";
    for (std::size_t i = 0; i < generators.size(); ++i) {
      if (i) s += ',';
      s += ambient().format(generators[i]);
    }
    return s + "}";
  }
};

/// Result of verify_certificate: on failure, the offending element and why.
struct CertCheck {
  bool ok = true;
  std::optional<Elem> witness;
  std::string reason;

  explicit operator bool() const noexcept { return ok; }
};

/// (generators) ⊆ target and x^k ∈ (generators) for all x in target.
inline CertCheck verify_certificate(const SftCertificate& cert) {
  const FiniteRing& r = cert.ambient();
  for (Elem g : cert.generators)
    if (g >= r.order()) throw RingMismatch("certificate generator outside the ambient ring");
  if (cert.exponent == 0) return {false, std::nullopt, "exponent must be positive"};
  for (Elem g : cert.generators)
    if (!cert.target.contains(g)) return {false, g, "generator " + r.format(g) + " lies outside the target ideal"};
  const Ideal f = ideal_generated(r, std::span<const Elem>(cert.generators));
  for (Elem x : cert.target.elements())
    if (!f.contains(r.pow(x, cert.exponent)))
      return {false, x,
              r.format(x) + "^" + std::to_string(cert.exponent) + " is not in the ideal generated by " +
                  cert.format_generators()};
  return {};
}

namespace detail {

inline SftCertificate checked(SftCertificate cert, const char* combinator) {
  if (auto c = verify_certificate(cert); !c)
    throw CertificateFailure(std::string(combinator) + " produced a certificate that does not verify: " + c.reason);
  return cert;
}

inline void require_verified(const SftCertificate& cert, const char* what) {
  if (auto c = verify_certificate(cert); !c)
    throw AlgebraError(std::string(what) + " input certificate does not verify: " + c.reason);
}

/// Greedy minimal-ish generating set: walk the elements in canonical order and
/// keep each one not already in the ideal generated so far.
inline std::vector<Elem> greedy_generators(const FiniteRing& r, const std::vector<Elem>& elements) {
  detail::IdealBuilder b(r);
  std::vector<Elem> gens;
  for (Elem x : elements) {
    if (b.contains(x)) continue;
    gens.push_back(x);
    b.absorb_generator(x);
  }
  return gens;
}

inline void push_unique(std::vector<Elem>& v, Elem x) {
  if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
}

}  // namespace detail

/// Exponent 1 and a greedy generating set of I itself.
inline SftCertificate trivial_certificate(const Ideal& i) {
  return detail::checked({i, detail::greedy_generators(i.ring(), i.elements()), 1}, "trivial_certificate");
}

/// Exponent k with F the ideal generated by the k-th powers of I. For k > 1
/// F is usually strictly smaller than I.
inline SftCertificate power_certificate(const Ideal& i, std::uint64_t k) {
  if (k == 0) throw AlgebraError("exponent must be positive");
  if (k == 1) return trivial_certificate(i);
  const FiniteRing& r = i.ring();
  std::vector<Elem> powers;
  for (Elem x : i.elements()) detail::push_unique(powers, r.pow(x, k));
  const Ideal f = ideal_generated(r, std::span<const Elem>(powers));
  return detail::checked({i, detail::greedy_generators(r, f.elements()), k}, "power_certificate");
}

/// Smallest k ≤ |R| with x^k ∈ (gens) for all x ∈ I.
inline std::optional<std::uint64_t> minimal_exponent(const Ideal& i, std::span<const Elem> gens) {
  const FiniteRing& r = i.ring();
  const Ideal f = ideal_generated(r, gens);
  if (!f.subset_of(i)) throw AlgebraError("generators span an ideal outside the target");
  for (std::uint64_t k = 1; k <= r.order(); ++k) {
    bool all = true;
    for (Elem x : i.elements())
      if (!f.contains(r.pow(x, k))) {
        all = false;
        break;
      }
    if (all) return k;
  }
  return std::nullopt;
}

inline std::optional<std::uint64_t> minimal_exponent(const SftCertificate& cert) {
  return minimal_exponent(cert.target, cert.generators);
}

/// Pushes a certificate along a surjective homomorphism: images of the
/// generators, same exponent, target h(I).
inline SftCertificate cert_image(const SftCertificate& cert, const RingHom& h) {
  if (!(cert.ambient() == h.source())) throw RingMismatch("certificate does not live in the map's source");
  detail::require_verified(cert, "cert_image");
  std::vector<Elem> gens;
  for (Elem g : cert.generators)
    if (h(g) != 0) detail::push_unique(gens, h(g));
  return detail::checked({ideal_image(h, cert.target), std::move(gens), cert.exponent}, "cert_image");
}

/// Certificate for the image ideal in R/K.
inline SftCertificate cert_quotient(const SftCertificate& cert, const Quotient& q) {
  if (!(q.surjection.source() == cert.ambient())) throw RingMismatch("quotient is not of the certificate's ring");
  return cert_image(cert, q.surjection);
}

inline SftCertificate cert_quotient(const SftCertificate& cert, const Ideal& k) {
  if (!(k.ring() == cert.ambient())) throw RingMismatch("K must be an ideal of the certificate's ring");
  detail::require_verified(cert, "cert_quotient");
  return cert_quotient(cert, make_quotient(cert.ambient(), k));
}

/// (I + J, gens(I) ∪ gens(J), k + k').
inline SftCertificate cert_sum(const SftCertificate& ci, const SftCertificate& cj) {
  ci.target.require_same_ring(cj.target);
  detail::require_verified(ci, "cert_sum");
  detail::require_verified(cj, "cert_sum");
  std::vector<Elem> gens = ci.generators;
  gens.insert(gens.end(), cj.generators.begin(), cj.generators.end());
  return detail::checked({ideal_sum(ci.target, cj.target), std::move(gens), ci.exponent + cj.exponent}, "cert_sum");
}

/// I ⋈^f J = {(i, f(i)+j) : i ∈ I, j ∈ J} for an ideal I of A.
inline Ideal amalgamated_ideal(const Amalgamation& am, const Ideal& i) {
  if (!(i.ring() == am.a_ring())) throw RingMismatch("I must be an ideal of A");
  std::vector<Elem> out;
  for (Elem a : i.elements())
    for (Elem j : am.j_ideal().elements()) out.push_back(am.element(a, j));
  return Ideal::trusted(am.ring(), std::move(out));
}

/// From a certificate for I ⋈^f J in the amalgamation to one for I in A:
/// first coordinates of the generators, same exponent.
inline SftCertificate cert_contract(const SftCertificate& cert, const Amalgamation& am) {
  if (!(cert.ambient() == am.ring())) throw RingMismatch("certificate does not live in the amalgamation");
  detail::require_verified(cert, "cert_contract");
  const Ideal i = ideal_image(am.projection_a(), cert.target);
  if (!(amalgamated_ideal(am, i) == cert.target))
    throw AlgebraError("target " + cert.target.format() + " is not of the form I bowtie^f J");
  std::vector<Elem> gens;
  for (Elem g : cert.generators)
    if (am.first(g) != 0) detail::push_unique(gens, am.first(g));
  return detail::checked({i, std::move(gens), cert.exponent}, "cert_contract");
}

/// From a certificate for I in A and one for J in f(A)+J to one for
/// I ⋈^f J: generators (i_l, f(i_l)) and (0, j_l), exponent k + k'.
inline SftCertificate cert_amalg(const SftCertificate& cert_i, const SftCertificate& cert_j, const Amalgamation& am) {
  if (!(cert_i.ambient() == am.a_ring())) throw RingMismatch("I-side certificate must live in A");
  if (cert_j.ambient() == am.b_ring())
    throw AlgebraError("J-side certificate must live in f(A)+J, not in B");
  const FAPlusJ& s = am.fa_plus_j();
  if (!(cert_j.ambient() == s.ring)) throw RingMismatch("J-side certificate must live in f(A)+J");
  if (!(cert_j.target == s.j_ideal)) throw AlgebraError("J-side certificate must certify J itself");
  detail::require_verified(cert_i, "cert_amalg");
  detail::require_verified(cert_j, "cert_amalg");
  const auto& members = s.ring.structure<SubRing>().members;
  std::vector<Elem> gens;
  for (Elem i : cert_i.generators) gens.push_back(am.from_pair(i, am.hom()(i)));
  for (Elem j : cert_j.generators) gens.push_back(am.from_pair(0, members[j]));
  return detail::checked({amalgamated_ideal(am, cert_i.target), std::move(gens), cert_i.exponent + cert_j.exponent},
                         "cert_amalg");
}

// ---------------------------------------------------------------------------
// Certificates for the primes Q̄^f.

/// Which sub-certificate a provider is asked for.
enum class QbarSlot { q0, i_set, q1 };

inline const char* to_string(QbarSlot s) {
  switch (s) {
    case QbarSlot::q0: return "Q0";
    case QbarSlot::i_set: return "I";
    case QbarSlot::q1: return "Q1";
  }
  return "?";
}

/// Supplies the three sub-certificates. The default hands out
/// power_certificate with the configured exponents (trivial ones for 1).
using SubCertificateProvider = std::function<SftCertificate(const Ideal&, QbarSlot)>;

struct SubExponents {
  std::uint64_t k0 = 1;
  std::uint64_t k1 = 1;
  std::uint64_t k2 = 1;

  std::uint64_t for_slot(QbarSlot s) const { return s == QbarSlot::q0 ? k0 : s == QbarSlot::i_set ? k1 : k2; }
};

inline SubCertificateProvider exponent_provider(SubExponents e) {
  return [e](const Ideal& i, QbarSlot s) { return power_certificate(i, e.for_slot(s)); };
}

struct QbarCertTrace {
  Ideal q;     // prime of B
  Ideal qbar;  // Q̄^f in the amalgamation
  /// Image of Q ∩ (f(A)+J) in (f(A)+J)/J; absent when J = f(A)+J and the
  /// quotient would be the zero ring.
  std::optional<Ideal> q0;
  std::optional<SftCertificate> cert_q0;
  Ideal i_set;  // {a : f(a) ∈ J, ∃ j ∈ J, f(a)+j ∈ Q}
  bool i_set_equals_preimage = false;             // I = f⁻¹(J)
  bool i_set_equals_preimage_meet_projection = false;  // I = f⁻¹(J) ∩ first-projection of Q̄^f
  SftCertificate cert_i_set;
  Ideal q1;  // Q ∩ J as an ideal of f(A)+J
  SftCertificate cert_q1;
  std::uint64_t k0 = 1, k1 = 1, k2 = 1;
  std::vector<Elem> l0, l1, l2;  // lifted generators in the amalgamation
  SftCertificate combined;
};

/// Builds a certificate for Q̄^f out of certificates for Q0 in (f(A)+J)/J,
/// for I in A and for Q1 in f(A)+J, lifting their generators to L0, L1, L2.
/// The combined exponent is k0 + k1 + k2. Sub-certificates come from
/// `custom` when given, else from power_certificate with `exps`. Throws
/// CertificateFailure if the assembled certificate does not verify.
inline QbarCertTrace cert_qbar(const Amalgamation& am, const Ideal& q, SubExponents exps = {},
                               const SubCertificateProvider& custom = nullptr) {
  const SubCertificateProvider provider = custom ? custom : exponent_provider(exps);
  const FiniteRing& a = am.a_ring();
  const FiniteRing& b = am.b_ring();
  const RingHom& f = am.hom();
  const Ideal& j = am.j_ideal();
  const FAPlusJ& s = am.fa_plus_j();
  const auto& members = s.ring.structure<SubRing>().members;
  if (!(q.ring() == b)) throw RingMismatch("Q must be an ideal of B");
  if (!is_prime(q)) throw AlgebraError("Q = " + q.format() + " is not a prime ideal of B");

  const Ideal qbar = extend_prime_B(am, q);
  const Ideal q_in_s = ideal_preimage(s.inclusion, q);

  // Q0 and L0.
  std::optional<Ideal> q0;
  std::optional<SftCertificate> cert_q0;
  std::vector<Elem> l0;
  std::uint64_t k0 = 1;
  if (s.j_ideal.is_proper()) {
    const Quotient sj = make_quotient(s.ring, s.j_ideal);
    q0 = ideal_image(sj.surjection, q_in_s);
    cert_q0 = provider(*q0, QbarSlot::q0);
    if (!(cert_q0->target == *q0)) throw AlgebraError("provider returned a certificate for the wrong ideal");
    detail::require_verified(*cert_q0, "cert_qbar (Q0)");
    k0 = cert_q0->exponent;
    for (Elem c : cert_q0->generators) {
      Elem lifted = kNoElem;
      for (Elem x : q_in_s.elements())
        if (sj.surjection(x) == c) {
          lifted = members[x];
          break;
        }
      Elem pre = kNoElem;
      for (Elem x = 0; x < a.order() && pre == kNoElem; ++x)
        if (j.contains(b.sub(lifted, f(x)))) pre = x;
      l0.push_back(am.from_pair(pre, lifted));
    }
  } else {
    // (f(A)+J)/J is the zero ring: Q0 is its only ideal, certified by the
    // empty generating set with any exponent.
    k0 = exps.k0;
  }

  // I exactly as printed: {a : f(a) ∈ J and f(a)+j ∈ Q for some j ∈ J}.
  std::vector<Elem> i_elems, projection;
  for (Elem x = 0; x < a.order(); ++x) {
    bool hits_q = false;
    for (Elem y : j.elements())
      if (q.contains(b.add(f(x), y))) {
        hits_q = true;
        break;
      }
    if (hits_q) projection.push_back(x);
    if (j.contains(f(x)) && hits_q) i_elems.push_back(x);
  }
  const Ideal i_set = make_ideal(a, i_elems);
  const Ideal preimage = ideal_preimage(f, j);
  const Ideal proj = make_ideal(a, projection);
  SftCertificate cert_i = provider(i_set, QbarSlot::i_set);
  if (!(cert_i.target == i_set)) throw AlgebraError("provider returned a certificate for the wrong ideal");
  detail::require_verified(cert_i, "cert_qbar (I)");
  std::vector<Elem> l1;
  for (Elem x : cert_i.generators) {
    for (Elem y : j.elements()) {
      const Elem second = b.add(f(x), y);
      if (q.contains(second)) {
        l1.push_back(am.from_pair(x, second));
        break;
      }
    }
  }

  // Q1 = Q ∩ J inside f(A)+J, and L2.
  const Ideal q1 = ideal_intersection(q_in_s, s.j_ideal);
  SftCertificate cert_q1 = provider(q1, QbarSlot::q1);
  if (!(cert_q1.target == q1)) throw AlgebraError("provider returned a certificate for the wrong ideal");
  detail::require_verified(cert_q1, "cert_qbar (Q1)");
  std::vector<Elem> l2;
  for (Elem x : cert_q1.generators) l2.push_back(am.from_pair(0, members[x]));

  std::vector<Elem> gens = l0;
  gens.insert(gens.end(), l1.begin(), l1.end());
  gens.insert(gens.end(), l2.begin(), l2.end());
  SftCertificate combined{qbar, std::move(gens), k0 + cert_i.exponent + cert_q1.exponent};
  if (auto c = verify_certificate(combined); !c)
    throw CertificateFailure("Q-bar certificate for Q = " + q.format() + " does not verify: " + c.reason);

  return QbarCertTrace{q,
                       qbar,
                       std::move(q0),
                       std::move(cert_q0),
                       i_set,
                       i_set == preimage,
                       i_set == ideal_intersection(preimage, proj),
                       cert_i,
                       q1,
                       cert_q1,
                       k0,
                       cert_i.exponent,
                       cert_q1.exponent,
                       std::move(l0),
                       std::move(l1),
                       std::move(l2),
                       std::move(combined)};
}

// ---------------------------------------------------------------------------
// Whole-ring check: SFT-ness of A ⋈^f J against SFT-ness of A and f(A)+J.

/// Certificate attached to one prime of the amalgamation.
struct PrimeCertificate {
  enum class Route { extend_a, extend_b, unclassified };

  explicit PrimeCertificate(Ideal p) : prime(std::move(p)) {}

  Ideal prime;
  Route route = Route::unclassified;
  std::optional<Ideal> source;  // P of A or Q of B
  std::optional<SftCertificate> certificate;
  std::optional<QbarCertTrace> trace;
  std::optional<std::uint64_t> minimal;
  bool verified = false;
  /// extend_a only: cert_contract of the certificate verifies for P.
  bool contract_roundtrip = true;
  std::string error;
};

inline const char* to_string(PrimeCertificate::Route r) {
  switch (r) {
    case PrimeCertificate::Route::extend_a: return "extend_a";
    case PrimeCertificate::Route::extend_b: return "extend_b";
    case PrimeCertificate::Route::unclassified: return "unclassified";
  }
  return "?";
}

/// Certificates for every ideal of a homomorphic image of the amalgamation,
/// obtained from certificates upstairs.
struct ImageCertification {
  std::string ring_label;
  std::size_t ideals = 0;
  std::size_t certified = 0;
  std::size_t quotient_order = 0;  // |(A ⋈^f J)/ker|
  std::size_t image_order = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> exponents;  // (constructed, minimal)
  std::string error;

  bool ok() const { return error.empty() && certified == ideals && quotient_order == image_order; }
};

struct SftTheoremReport {
  TheoremReport theorem;
  std::vector<PrimeCertificate> primes;
  ImageCertification image_a;
  ImageCertification image_s;

  bool all_primes_certified() const {
    for (const auto& p : primes)
      if (!p.verified) return false;
    return true;
  }
};

namespace detail {

/// Descent: certify each ideal of the image of `proj` by
/// certifying its preimage upstairs and pushing it down, both through the
/// literal quotient by ker(proj) and through proj itself.
inline ImageCertification certify_image(const Amalgamation& am, const RingHom& proj,
                                        const std::vector<Ideal>& image_ideals) {
  ImageCertification out;
  out.ring_label = proj.target().label();
  out.ideals = image_ideals.size();
  out.image_order = proj.target().order();
  try {
    const Quotient q = make_quotient(am.ring(), kernel(proj));
    out.quotient_order = q.ring.order();
    for (const auto& i : image_ideals) {
      const SftCertificate upstairs = trivial_certificate(ideal_preimage(proj, i));
      const SftCertificate in_quotient = cert_quotient(upstairs, q);
      const SftCertificate downstairs = cert_image(upstairs, proj);
      if (!(downstairs.target == i)) continue;
      out.exponents.emplace_back(in_quotient.exponent, minimal_exponent(in_quotient).value_or(0));
      ++out.certified;
    }
  } catch (const Error& e) {
    out.error = e.what();
  }
  return out;
}

}  // namespace detail

/// Certifies every prime of A ⋈^f J: primes P'^f through cert_amalg, primes
/// Q̄^f through cert_qbar. Also certifies every ideal of A and of f(A)+J as
/// homomorphic images of the amalgamation.
inline SftTheoremReport check_theorem_sft(const Amalgamation& am, const LatticeInfo& amalg_lattice,
                                          const LatticeInfo& a_lattice, const LatticeInfo& b_lattice,
                                          const std::vector<Ideal>& s_ideals, SubExponents exps = {}) {
  using Route = PrimeCertificate::Route;
  SftTheoremReport rep;
  const FAPlusJ& s = am.fa_plus_j();

  for (const auto& prime : amalg_lattice.primes) {
    PrimeCertificate pc{prime};
    try {
      for (const auto& p : a_lattice.primes) {
        if (!(amalgamated_ideal(am, p) == prime)) continue;
        pc.route = Route::extend_a;
        pc.source = p;
        SftCertificate cert = cert_amalg(trivial_certificate(p), trivial_certificate(s.j_ideal), am);
        const SftCertificate back = cert_contract(cert, am);
        pc.contract_roundtrip = back.target == p && back.exponent == cert.exponent;
        pc.minimal = minimal_exponent(cert);
        pc.certificate = std::move(cert);
        break;
      }
      if (pc.route == Route::unclassified) {
        for (const auto& q : b_lattice.primes) {
          if (am.j_ideal().subset_of(q) || !(extend_prime_B(am, q) == prime)) continue;
          pc.route = Route::extend_b;
          pc.source = q;
          QbarCertTrace trace = cert_qbar(am, q, exps);
          pc.minimal = minimal_exponent(trace.combined);
          pc.certificate = trace.combined;
          pc.trace = std::move(trace);
          break;
        }
      }
      if (pc.route == Route::unclassified) pc.error = "prime matches neither P'^f nor Q-bar^f";
      pc.verified = pc.certificate && verify_certificate(*pc.certificate).ok && pc.contract_roundtrip;
    } catch (const Error& e) {
      pc.error = e.what();
      pc.verified = false;
    }
    rep.primes.push_back(std::move(pc));
  }

  rep.image_a = detail::certify_image(am, am.projection_a(), a_lattice.ideals);
  rep.image_s = detail::certify_image(am, am.projection_subring(), s_ideals);

  TheoremReport& t = rep.theorem;
  t.theorem = "sft-characterization";
  t.instance = am.describe();
  t.relation = Relation::equivalence;
  t.lhs_label = "every prime of A bowtie^f J carries a verified SFT certificate";
  t.lhs = rep.all_primes_certified();
  for (const auto& p : rep.primes)
    if (!p.verified) {
      t.lhs_witness = p.prime.format();
      break;
    }
  Condition ca{"A is SFT (every ideal certified as a homomorphic image)", rep.image_a.ok(), std::nullopt,
               rep.image_a.error};
  Condition cs{"f(A)+J is SFT (every ideal certified as a homomorphic image)", rep.image_s.ok(), std::nullopt,
               rep.image_s.error};
  t.conditions = {ca, cs};
  t.settle();
  return rep;
}

inline SftTheoremReport check_theorem_sft(const Amalgamation& am, std::size_t ceiling = kDefaultCeiling,
                                          SubExponents exps = {}) {
  require_within_ceiling(am.ring(), ceiling);
  require_within_ceiling(am.b_ring(), ceiling);
  return check_theorem_sft(am, analyze_lattice(am.ring(), ceiling), analyze_lattice(am.a_ring(), ceiling),
                           analyze_lattice(am.b_ring(), ceiling), enumerate_ideals(am.fa_plus_j().ring, ceiling),
                           exps);
}

}  // namespace amalgam

#endif  // AMALGAM_SFT_HPP
