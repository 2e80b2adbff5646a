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

// Ideal lattice of a finite ring: full enumeration, prime and maximal
// spectra, nilradical.

#ifndef AMALGAM_LATTICE_HPP
#define AMALGAM_LATTICE_HPP

#include <amalgam/ideal.hpp>

#include <algorithm>
#include <deque>
#include <optional>
#include <unordered_set>
#include <utility>
#include <vector>

namespace amalgam {

inline constexpr std::size_t kDefaultCeiling = 512;

inline void require_within_ceiling(const FiniteRing& r, std::size_t ceiling) {
  if (r.order() > ceiling) throw CeilingExceeded(r.order(), ceiling);
}

/// Canonical ordering: by size, then lexicographically by element list.
inline bool canonical_less(const Ideal& a, const Ideal& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.elements() < b.elements();
}

/// All ideals of `r`, each exactly once, in canonical order. Breadth-first
/// from {0}: every found ideal is extended by each outside element.
inline std::vector<Ideal> enumerate_ideals(const FiniteRing& r, std::size_t ceiling = kDefaultCeiling) {
  require_within_ceiling(r, ceiling);
  const auto n = static_cast<Elem>(r.order());

  std::vector<std::vector<Elem>> principal(n);
  for (Elem x = 0; x < n; ++x) principal[x] = ideal_generated(r, {x}).elements();

  struct BitsHash {
    std::size_t operator()(const std::vector<std::uint64_t>& w) const noexcept {
      std::size_t h = 1469598103934665603ULL;
      for (auto v : w) h = (h ^ v) * 1099511628211ULL;
      return h;
    }
  };
  std::unordered_set<std::vector<std::uint64_t>, BitsHash> seen;
  std::vector<Ideal> found;
  std::deque<std::size_t> queue;

  auto record = [&](Ideal I) {
    if (!seen.insert(I.bits()).second) return;
    found.push_back(std::move(I));
    queue.push_back(found.size() - 1);
  };
  record(zero_ideal(r));
  while (!queue.empty()) {
    const std::size_t idx = queue.front();
    queue.pop_front();
    if (found[idx].is_whole()) continue;
    const std::vector<Elem> base = found[idx].elements();
    for (Elem x = 0; x < n; ++x) {
      if (found[idx].contains(x)) continue;
      detail::IdealBuilder b(r, base);
      for (Elem y : principal[x]) b.absorb_additive(y);
      record(std::move(b).finish());
    }
  }
  std::sort(found.begin(), found.end(), canonical_less);
  return found;
}

/// A pair (a, b) outside I with ab in I, if any.
inline std::optional<std::pair<Elem, Elem>> primality_witness(const Ideal& I) {
  const FiniteRing& r = I.ring();
  std::vector<Elem> outside;
  for (Elem x = 0; x < r.order(); ++x)
    if (!I.contains(x)) outside.push_back(x);
  for (std::size_t i = 0; i < outside.size(); ++i)
    for (std::size_t j = i; j < outside.size(); ++j)
      if (I.contains(r.mul(outside[i], outside[j]))) return std::pair{outside[i], outside[j]};
  return std::nullopt;
}

/// Proper, and a, b outside I implies ab outside I.
inline bool is_prime(const Ideal& I) { return I.is_proper() && !primality_witness(I); }

/// Proper, and I + (x) is the whole ring for every x outside I, i.e. some
/// r has 1 - rx in I.
inline bool is_maximal(const Ideal& I) {
  if (!I.is_proper()) return false;
  const FiniteRing& r = I.ring();
  const auto n = static_cast<Elem>(r.order());
  for (Elem x = 0; x < n; ++x) {
    if (I.contains(x)) continue;
    bool reaches_one = false;
    for (Elem s = 0; s < n && !reaches_one; ++s) reaches_one = I.contains(r.sub(r.one(), r.mul(s, x)));
    if (!reaches_one) return false;
  }
  return true;
}

inline std::vector<Ideal> prime_ideals(const std::vector<Ideal>& lattice) {
  std::vector<Ideal> out;
  for (const auto& I : lattice)
    if (is_prime(I)) out.push_back(I);
  return out;
}

inline std::vector<Ideal> maximal_ideals(const std::vector<Ideal>& lattice) {
  std::vector<Ideal> out;
  for (const auto& I : lattice)
    if (is_maximal(I)) out.push_back(I);
  return out;
}

/// Spec(R) in canonical order.
inline std::vector<Ideal> spectrum(const FiniteRing& r, std::size_t ceiling = kDefaultCeiling) {
  return prime_ideals(enumerate_ideals(r, ceiling));
}

/// Max(R) in canonical order.
inline std::vector<Ideal> max_spectrum(const FiniteRing& r, std::size_t ceiling = kDefaultCeiling) {
  return maximal_ideals(enumerate_ideals(r, ceiling));
}

/// An enumerated lattice together with its prime and maximal members.
struct LatticeInfo {
  std::vector<Ideal> ideals;
  std::vector<Ideal> primes;
  std::vector<Ideal> maximals;
};

inline LatticeInfo analyze_lattice(const FiniteRing& r, std::size_t ceiling = kDefaultCeiling) {
  LatticeInfo info;
  info.ideals = enumerate_ideals(r, ceiling);
  info.primes = prime_ideals(info.ideals);
  info.maximals = maximal_ideals(info.ideals);
  return info;
}

inline bool is_nilpotent(const FiniteRing& r, Elem x) { return r.pow(x, r.order()) == 0; }

/// Nilp(R): elements with x^|R| = 0.
inline Ideal nilradical(const FiniteRing& r) {
  std::vector<Elem> out;
  for (Elem x = 0; x < r.order(); ++x)
    if (is_nilpotent(r, x)) out.push_back(x);
  return make_ideal(r, std::move(out));
}

/// Intersection of a nonempty family of ideals of one ring; the whole ring
/// for an empty family.
inline Ideal intersection_of(const FiniteRing& r, const std::vector<Ideal>& family) {
  Ideal acc = whole_ideal(r);
  for (const auto& I : family) acc = ideal_intersection(acc, I);
  return acc;
}

}  // namespace amalgam

#endif  // AMALGAM_LATTICE_HPP
