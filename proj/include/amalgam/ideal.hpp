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

#ifndef AMALGAM_IDEAL_HPP
#define AMALGAM_IDEAL_HPP

#include <amalgam/hom.hpp>
#include <amalgam/ring.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace amalgam {

namespace detail {

class ElemSet {
 public:
  explicit ElemSet(std::size_t universe) : words_((universe + 63) / 64, 0) {}

  bool contains(Elem x) const noexcept { return (words_[x >> 6] >> (x & 63)) & 1u; }
  bool insert(Elem x) noexcept {
    auto& w = words_[x >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (x & 63);
    if (w & bit) return false;
    w |= bit;
    return true;
  }
  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

 private:
  std::vector<std::uint64_t> words_;
};

}  // namespace detail

/// An ideal of a finite ring, stored as its sorted element set. Ideals of
/// different rings never compare equal.
class Ideal {
 public:
  const FiniteRing& ring() const noexcept { return ring_; }
  const std::vector<Elem>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool contains(Elem x) const noexcept { return x < ring_.order() && members_.contains(x); }
  bool is_zero() const noexcept { return elements_.size() == 1; }
  bool is_whole() const noexcept { return elements_.size() == ring_.order(); }
  bool is_proper() const noexcept { return !is_whole(); }

  /// Generators the ideal was built from, when known.
  const std::optional<std::vector<Elem>>& generators() const noexcept { return generators_; }

  bool subset_of(const Ideal& other) const {
    require_same_ring(other);
    for (Elem x : elements_)
      if (!other.contains(x)) return false;
    return true;
  }

  /// Elements rendered through the ring's formatter, e.g. "{0,2,4}".
  std::string format() const {
    std::string s = "{";
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      if (i) s += ',';
      s += ring_.format(elements_[i]);
    }
    return s + "}";
  }

  void require_same_ring(const Ideal& other) const {
    if (!(ring_ == other.ring_))
      throw RingMismatch("ideals of " + ring_.label() + " and " + other.ring_.label() + " combined");
  }

  const std::vector<std::uint64_t>& bits() const noexcept { return members_.words(); }

  friend bool operator==(const Ideal& a, const Ideal& b) {
    return a.ring_ == b.ring_ && a.elements_ == b.elements_;
  }

  /// Wraps a set already known to be an ideal. No checks.
  static Ideal trusted(FiniteRing ring, std::vector<Elem> elements,
                       std::optional<std::vector<Elem>> gens = std::nullopt) {
    std::sort(elements.begin(), elements.end());
    return Ideal(std::move(ring), std::move(elements), std::move(gens));
  }

 private:
  Ideal(FiniteRing ring, std::vector<Elem> sorted, std::optional<std::vector<Elem>> gens)
      : ring_(std::move(ring)), elements_(std::move(sorted)), members_(ring_.order()),
        generators_(std::move(gens)) {
    for (Elem x : elements_) members_.insert(x);
  }

  FiniteRing ring_;
  std::vector<Elem> elements_;
  detail::ElemSet members_;
  std::optional<std::vector<Elem>> generators_;
};

struct IdealHash {
  std::size_t operator()(const Ideal& I) const noexcept {
    std::size_t h = std::hash<std::uint64_t>{}(I.ring().id());
    for (auto w : I.bits()) h = h * 1099511628211ULL ^ std::hash<std::uint64_t>{}(w);
    return h;
  }
};

namespace detail {

/// Incrementally grows an additive subgroup; once every product r·g has been
/// absorbed for each generator g, the subgroup is the generated ideal.
class IdealBuilder {
 public:
  explicit IdealBuilder(const FiniteRing& ring) : ring_(ring), set_(ring.order()) { absorb_zero(); }

  IdealBuilder(const FiniteRing& ring, const std::vector<Elem>& seed_ideal)
      : ring_(ring), set_(ring.order()) {
    for (Elem x : seed_ideal)
      if (set_.insert(x)) list_.push_back(x);
    if (list_.empty()) absorb_zero();
  }

  bool contains(Elem x) const noexcept { return set_.contains(x); }
  std::size_t size() const noexcept { return list_.size(); }

  /// Subgroup generated by the current set and g: the union of S + m·g.
  /// The result is an ideal again only after the caller has absorbed a
  /// set closed under multiplication by the ring.
  void absorb_additive(Elem g) {
    if (set_.contains(g)) return;
    closed_ = false;
    grow(g);
  }

  /// Adds the principal ideal (g).
  void absorb_generator(Elem g) {
    if (closed_ && set_.contains(g)) return;
    const auto n = static_cast<Elem>(ring_.order());
    for (Elem r = 0; r < n && list_.size() < n; ++r) {
      const Elem rg = ring_.mul(r, g);
      if (!set_.contains(rg)) grow(rg);
    }
  }

  Ideal finish(std::optional<std::vector<Elem>> gens = std::nullopt) && {
    return Ideal::trusted(ring_, std::move(list_), std::move(gens));
  }

 private:
  void absorb_zero() {
    set_.insert(0);
    list_.push_back(0);
  }

  void grow(Elem g) {
    const std::size_t base = list_.size();
    Elem step = g;
    while (!set_.contains(step)) {
      for (std::size_t i = 0; i < base; ++i) {
        const Elem y = ring_.add(list_[i], step);
        if (set_.insert(y)) list_.push_back(y);
      }
      step = ring_.add(step, g);
    }
  }

  const FiniteRing& ring_;
  ElemSet set_;
  std::vector<Elem> list_;
  bool closed_ = true;  // the current set is an ideal
};

}  // namespace detail

inline Ideal zero_ideal(const FiniteRing& r) { return Ideal::trusted(r, {0}, std::vector<Elem>{}); }

inline Ideal whole_ideal(const FiniteRing& r) {
  std::vector<Elem> all(r.order());
  for (Elem x = 0; x < all.size(); ++x) all[x] = x;
  return Ideal::trusted(r, std::move(all), std::vector<Elem>{r.one()});
}

/// The smallest ideal containing `gens`.
inline Ideal ideal_generated(const FiniteRing& r, std::span<const Elem> gens) {
  for (Elem g : gens)
    if (g >= r.order()) throw AlgebraError("generator outside " + r.label());
  detail::IdealBuilder b(r);
  for (Elem g : gens) b.absorb_generator(g);
  return std::move(b).finish(std::vector<Elem>(gens.begin(), gens.end()));
}

inline Ideal ideal_generated(const FiniteRing& r, std::initializer_list<Elem> gens) {
  return ideal_generated(r, std::span<const Elem>(gens.begin(), gens.size()));
}

/// Tagged-element overload; elements of other rings are rejected.
inline Ideal ideal_generated(const FiniteRing& r, const std::vector<RingElem>& gens) {
  std::vector<Elem> raw;
  raw.reserve(gens.size());
  for (const auto& g : gens) raw.push_back(r.own(g));
  return ideal_generated(r, std::span<const Elem>(raw));
}

/// Validates an explicit subset as an ideal.
inline Ideal make_ideal(const FiniteRing& r, std::vector<Elem> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  detail::ElemSet in(r.order());
  for (Elem x : elements) {
    if (x >= r.order()) throw AlgebraError("element outside " + r.label());
    in.insert(x);
  }
  if (!in.contains(0)) throw AlgebraError("an ideal must contain 0");
  for (Elem x : elements) {
    if (!in.contains(r.neg(x))) throw AlgebraError("subset not closed under negation at " + r.format(x));
    for (Elem y : elements)
      if (!in.contains(r.add(x, y)))
        throw AlgebraError("subset not closed under addition at " + r.format(x) + ", " + r.format(y));
    for (Elem a = 0; a < r.order(); ++a)
      if (!in.contains(r.mul(a, x)))
        throw AlgebraError("subset not closed under multiplication by " + r.format(a));
  }
  return Ideal::trusted(r, std::move(elements));
}

/// I + (x).
inline Ideal ideal_extend(const Ideal& I, Elem x) {
  detail::IdealBuilder b(I.ring(), I.elements());
  b.absorb_generator(x);
  return std::move(b).finish();
}

inline Ideal ideal_sum(const Ideal& I, const Ideal& J) {
  I.require_same_ring(J);
  detail::IdealBuilder b(I.ring(), I.elements());
  for (Elem y : J.elements()) b.absorb_additive(y);
  std::optional<std::vector<Elem>> gens;
  if (I.generators() && J.generators()) {
    gens = *I.generators();
    gens->insert(gens->end(), J.generators()->begin(), J.generators()->end());
  }
  return std::move(b).finish(std::move(gens));
}

inline Ideal ideal_intersection(const Ideal& I, const Ideal& J) {
  I.require_same_ring(J);
  std::vector<Elem> out;
  for (Elem x : I.elements())
    if (J.contains(x)) out.push_back(x);
  return Ideal::trusted(I.ring(), std::move(out));
}

/// h(I) for a surjective h. Images under non-surjective maps need not be
/// ideals and are rejected.
inline Ideal ideal_image(const RingHom& h, const Ideal& I) {
  if (!(I.ring() == h.source())) throw RingMismatch("ideal does not live in the homomorphism's source");
  if (!h.is_surjective()) throw AlgebraError("image of an ideal is only taken along surjections");
  detail::ElemSet seen(h.target().order());
  std::vector<Elem> out;
  for (Elem x : I.elements())
    if (seen.insert(h(x))) out.push_back(h(x));
  std::optional<std::vector<Elem>> gens;
  if (I.generators()) {
    gens.emplace();
    for (Elem g : *I.generators()) gens->push_back(h(g));
  }
  return Ideal::trusted(h.target(), std::move(out), std::move(gens));
}

inline Ideal ideal_preimage(const RingHom& h, const Ideal& I) {
  if (!(I.ring() == h.target())) throw RingMismatch("ideal does not live in the homomorphism's target");
  std::vector<Elem> out;
  for (Elem x = 0; x < h.source().order(); ++x)
    if (I.contains(h(x))) out.push_back(x);
  return Ideal::trusted(h.source(), std::move(out));
}

inline Ideal kernel(const RingHom& h) { return ideal_preimage(h, zero_ideal(h.target())); }

}  // namespace amalgam

#endif  // AMALGAM_IDEAL_HPP
