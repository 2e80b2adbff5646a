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

// Ring-level decision procedures, and checkers that compare a brute-force
// property of A ⋈^f J against its characterization in terms of A, B, f, J.

#ifndef AMALGAM_PREDICATES_HPP
#define AMALGAM_PREDICATES_HPP

#include <amalgam/amalgamation.hpp>
#include <amalgam/lattice.hpp>
#include <amalgam/ring.hpp>

#include <optional>
#include <string>
#include <vector>

namespace amalgam {

/// A yes/no answer; a "no" carries the first counterexample in canonical
/// element order.
struct Decision {
  bool holds = true;
  std::optional<Elem> witness;

  explicit operator bool() const noexcept { return holds; }

  static Decision yes() { return {}; }
  static Decision no(Elem w) { return {false, w}; }
};

/// The first x (canonical order) with a·x·a = a.
inline std::optional<Elem> vnr_partner(const FiniteRing& r, Elem a) {
  for (Elem x = 0; x < r.order(); ++x)
    if (r.mul(r.mul(a, x), a) == a) return x;
  return std::nullopt;
}

/// Von Neumann regular: every a has some x with axa = a.
inline Decision is_vnr(const FiniteRing& r) {
  for (Elem a = 0; a < r.order(); ++a)
    if (!vnr_partner(r, a)) return Decision::no(a);
  return Decision::yes();
}

/// No nonzero nilpotents.
inline Decision is_reduced(const FiniteRing& r) {
  for (Elem x = 1; x < r.order(); ++x)
    if (is_nilpotent(r, x)) return Decision::no(x);
  return Decision::yes();
}

inline Decision is_boolean(const FiniteRing& r) {
  for (Elem x = 0; x < r.order(); ++x)
    if (r.mul(x, x) != x) return Decision::no(x);
  return Decision::yes();
}

/// Semisimple = Noetherian + VNR. Finite rings are Noetherian, so only the
/// regularity leg can fail.
inline Decision is_semisimple(const FiniteRing& r) { return is_vnr(r); }

// ---------------------------------------------------------------------------

struct Condition {
  std::string label;
  bool holds = true;
  std::optional<std::string> witness;
  std::string note;
};

enum class Relation { equivalence, implication };
enum class Verdict { agree, disagree };

inline const char* to_string(Relation r) { return r == Relation::equivalence ? "equivalence" : "implication"; }
inline const char* to_string(Verdict v) { return v == Verdict::agree ? "agree" : "disagree"; }

/// Brute-force left-hand side against a list of conditions. For an
/// equivalence the verdict is agree iff lhs equals the conjunction; for an
/// implication, iff the conjunction implies lhs.
struct TheoremReport {
  std::string theorem;
  std::string instance;
  Relation relation = Relation::equivalence;
  std::string lhs_label;
  bool lhs = false;
  std::optional<std::string> lhs_witness;
  std::vector<Condition> conditions;
  Verdict verdict = Verdict::agree;

  bool conditions_hold() const {
    for (const auto& c : conditions)
      if (!c.holds) return false;
    return true;
  }

  void settle() {
    const bool rhs = conditions_hold();
    const bool ok = relation == Relation::equivalence ? lhs == rhs : (!rhs || lhs);
    verdict = ok ? Verdict::agree : Verdict::disagree;
  }
};

namespace detail {

inline Condition decision_condition(std::string label, const Decision& d, const FiniteRing& r) {
  Condition c{std::move(label), d.holds, std::nullopt, {}};
  if (!d.holds && d.witness) c.witness = r.format(*d.witness);
  return c;
}

/// Nilp(B) ∩ J = {0}.
inline Condition nil_meets_j(const Amalgamation& am) {
  const FiniteRing& b = am.b_ring();
  Condition c{"Nilp(B) meets J only in 0", true, std::nullopt, {}};
  for (Elem j : am.j_ideal().elements()) {
    if (j != 0 && is_nilpotent(b, j)) {
      c.holds = false;
      c.witness = b.format(j);
      break;
    }
  }
  return c;
}

/// Every prime of B not containing J is maximal, checked prime by prime.
/// Always true on finite rings; evaluated literally all the same.
inline Condition primes_off_j_maximal(const Amalgamation& am, const LatticeInfo& b_lattice) {
  Condition c{"every prime of B not containing J is maximal", true, std::nullopt,
              "finite rings are zero-dimensional; this condition cannot fail on its own"};
  for (const auto& q : b_lattice.primes) {
    if (am.j_ideal().subset_of(q)) continue;
    if (!is_maximal(q)) {
      c.holds = false;
      c.witness = q.format();
      break;
    }
  }
  return c;
}

}  // namespace detail

/// A ⋈^f J is VNR iff (1) A is VNR, (2) Nilp(B) ∩ J = {0}, (3) every prime
/// of B not containing J is maximal.
inline TheoremReport check_theorem_vnr(const Amalgamation& am, const LatticeInfo& b_lattice) {
  TheoremReport rep;
  rep.theorem = "vnr-characterization";
  rep.instance = am.describe();
  rep.relation = Relation::equivalence;
  rep.lhs_label = "A bowtie^f J is von Neumann regular";
  const Decision lhs = is_vnr(am.ring());
  rep.lhs = lhs.holds;
  if (lhs.witness) rep.lhs_witness = am.ring().format(*lhs.witness);
  rep.conditions.push_back(detail::decision_condition("A is von Neumann regular", is_vnr(am.a_ring()), am.a_ring()));
  rep.conditions.push_back(detail::nil_meets_j(am));
  rep.conditions.push_back(detail::primes_off_j_maximal(am, b_lattice));
  rep.settle();
  return rep;
}

inline TheoremReport check_theorem_vnr(const Amalgamation& am, std::size_t ceiling = kDefaultCeiling) {
  require_within_ceiling(am.ring(), ceiling);
  return check_theorem_vnr(am, analyze_lattice(am.b_ring(), ceiling));
}

/// A and B both VNR implies A ⋈^f J VNR.
inline TheoremReport check_corollary_both_vnr(const Amalgamation& am, std::size_t ceiling = kDefaultCeiling) {
  require_within_ceiling(am.ring(), ceiling);
  TheoremReport rep;
  rep.theorem = "both-vnr-implies-vnr";
  rep.instance = am.describe();
  rep.relation = Relation::implication;
  rep.lhs_label = "A bowtie^f J is von Neumann regular";
  const Decision lhs = is_vnr(am.ring());
  rep.lhs = lhs.holds;
  if (lhs.witness) rep.lhs_witness = am.ring().format(*lhs.witness);
  rep.conditions.push_back(detail::decision_condition("A is von Neumann regular", is_vnr(am.a_ring()), am.a_ring()));
  rep.conditions.push_back(detail::decision_condition("B is von Neumann regular", is_vnr(am.b_ring()), am.b_ring()));
  rep.settle();
  return rep;
}

/// A ⋈^f J semisimple iff A semisimple, Nilp(B) ∩ J = {0}, primes of B off
/// J maximal, and f(A)+J Noetherian (constant-true here).
inline TheoremReport check_corollary_semisimple(const Amalgamation& am, const LatticeInfo& b_lattice) {
  TheoremReport rep;
  rep.theorem = "semisimple-characterization";
  rep.instance = am.describe();
  rep.relation = Relation::equivalence;
  rep.lhs_label = "A bowtie^f J is semisimple";
  const Decision lhs = is_semisimple(am.ring());
  rep.lhs = lhs.holds;
  if (lhs.witness) rep.lhs_witness = am.ring().format(*lhs.witness);
  rep.conditions.push_back(
      detail::decision_condition("A is semisimple", is_semisimple(am.a_ring()), am.a_ring()));
  rep.conditions.push_back(detail::nil_meets_j(am));
  rep.conditions.push_back(detail::primes_off_j_maximal(am, b_lattice));
  rep.conditions.push_back({"f(A)+J is Noetherian", true, std::nullopt, "every finite ring is Noetherian"});
  rep.settle();
  return rep;
}

inline TheoremReport check_corollary_semisimple(const Amalgamation& am, std::size_t ceiling = kDefaultCeiling) {
  require_within_ceiling(am.ring(), ceiling);
  return check_corollary_semisimple(am, analyze_lattice(am.b_ring(), ceiling));
}

/// A ⋈^f J reduced iff A reduced and Nilp(B) ∩ J = {0}.
inline TheoremReport check_reduced_characterization(const Amalgamation& am) {
  TheoremReport rep;
  rep.theorem = "reduced-characterization";
  rep.instance = am.describe();
  rep.relation = Relation::equivalence;
  rep.lhs_label = "A bowtie^f J is reduced";
  const Decision lhs = is_reduced(am.ring());
  rep.lhs = lhs.holds;
  if (lhs.witness) rep.lhs_witness = am.ring().format(*lhs.witness);
  rep.conditions.push_back(detail::decision_condition("A is reduced", is_reduced(am.a_ring()), am.a_ring()));
  rep.conditions.push_back(detail::nil_meets_j(am));
  rep.settle();
  return rep;
}

}  // namespace amalgam

#endif  // AMALGAM_PREDICATES_HPP
