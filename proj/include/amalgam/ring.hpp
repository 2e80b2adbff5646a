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

// Finite commutative unital rings presented by a canonical enumeration of
// their carrier. Every ring numbers its elements 0..order-1 with zero at
// index 0; structured kinds compute their operations from their parts.

#ifndef AMALGAM_RING_HPP
#define AMALGAM_RING_HPP

#include <amalgam/error.hpp>

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace amalgam {

/// Canonical index of an element inside its ring.
using Elem = std::uint32_t;

inline constexpr Elem kNoElem = std::numeric_limits<Elem>::max();

enum class RingKind { zmod, product, quotient, trivial_extension, amalgamation, subring };

inline const char* to_string(RingKind k) {
  switch (k) {
    case RingKind::zmod: return "zmod";
    case RingKind::product: return "product";
    case RingKind::quotient: return "quotient";
    case RingKind::trivial_extension: return "trivial_extension";
    case RingKind::amalgamation: return "amalgamation";
    case RingKind::subring: return "subring";
  }
  return "?";
}

/// Knobs that affect representation only, never results.
struct ConstructionOptions {
  /// Rings with more than this many (x, y) pairs get materialized
  /// addition/multiplication tables.
  std::size_t table_cache_threshold = 4096;
  /// Rings above this many pairs are never materialized.
  std::size_t table_cache_max = std::size_t{1} << 22;
};

namespace detail {

inline std::uint64_t next_ring_id() {
  static std::atomic<std::uint64_t> counter{1};
  return counter.fetch_add(1, std::memory_order_relaxed);
}

/// Structure shared by every ring kind. Concrete kinds override the
/// do_* hooks and carry their structural parameters as public members.
class RingImpl {
 public:
  RingImpl(RingKind kind, std::size_t order, std::string label)
      : id_(next_ring_id()), order_(order), kind_(kind), label_(std::move(label)) {}
  virtual ~RingImpl() = default;
  RingImpl(const RingImpl&) = delete;
  RingImpl& operator=(const RingImpl&) = delete;

  std::uint64_t id() const noexcept { return id_; }
  std::size_t order() const noexcept { return order_; }
  RingKind kind() const noexcept { return kind_; }
  const std::string& label() const noexcept { return label_; }
  Elem one() const noexcept { return one_; }

  Elem add(Elem x, Elem y) const {
    return add_table_.empty() ? do_add(x, y) : add_table_[std::size_t{x} * order_ + y];
  }
  Elem mul(Elem x, Elem y) const {
    return mul_table_.empty() ? do_mul(x, y) : mul_table_[std::size_t{x} * order_ + y];
  }
  Elem neg(Elem x) const { return neg_table_.empty() ? do_neg(x) : neg_table_[x]; }

  virtual std::string format(Elem x) const = 0;

  bool materialized() const noexcept { return !mul_table_.empty(); }

  void finalize(Elem one, const ConstructionOptions& opts) {
    one_ = one;
    const std::size_t pairs = order_ * order_;
    if (pairs <= opts.table_cache_threshold || pairs > opts.table_cache_max) return;
    std::vector<Elem> add_t(pairs), mul_t(pairs), neg_t(order_);
    for (Elem x = 0; x < order_; ++x) {
      neg_t[x] = do_neg(x);
      for (Elem y = 0; y < order_; ++y) {
        add_t[std::size_t{x} * order_ + y] = do_add(x, y);
        mul_t[std::size_t{x} * order_ + y] = do_mul(x, y);
      }
    }
    add_table_ = std::move(add_t);
    mul_table_ = std::move(mul_t);
    neg_table_ = std::move(neg_t);
  }

 protected:
  virtual Elem do_add(Elem x, Elem y) const = 0;
  virtual Elem do_mul(Elem x, Elem y) const = 0;
  virtual Elem do_neg(Elem x) const = 0;

 private:
  std::uint64_t id_;
  std::size_t order_;
  RingKind kind_;
  std::string label_;
  Elem one_ = 0;
  std::vector<Elem> add_table_;
  std::vector<Elem> mul_table_;
  std::vector<Elem> neg_table_;
};

}  // namespace detail

class FiniteRing;

/// An element tagged with its owning ring.
struct RingElem {
  std::uint64_t ring_id = 0;
  Elem index = 0;

  friend bool operator==(const RingElem&, const RingElem&) = default;
};

/// Immutable handle to a finite commutative unital ring. Copies share the
/// same underlying ring; equality is identity of the ring object.
class FiniteRing {
 public:
  explicit FiniteRing(std::shared_ptr<const detail::RingImpl> impl) : impl_(std::move(impl)) {}

  std::uint64_t id() const noexcept { return impl_->id(); }
  std::size_t order() const noexcept { return impl_->order(); }
  RingKind kind() const noexcept { return impl_->kind(); }
  const std::string& label() const noexcept { return impl_->label(); }

  Elem zero() const noexcept { return 0; }
  Elem one() const noexcept { return impl_->one(); }

  Elem add(Elem x, Elem y) const { return impl_->add(x, y); }
  Elem neg(Elem x) const { return impl_->neg(x); }
  Elem sub(Elem x, Elem y) const { return impl_->add(x, impl_->neg(y)); }
  Elem mul(Elem x, Elem y) const { return impl_->mul(x, y); }

  /// x^k by square-and-multiply; x^0 = 1.
  Elem pow(Elem x, std::uint64_t k) const {
    Elem result = one();
    Elem base = x;
    while (k > 0) {
      if (k & 1u) result = mul(result, base);
      k >>= 1;
      if (k > 0) base = mul(base, base);
    }
    return result;
  }

  /// n·1 for a (possibly negative) integer n.
  Elem from_integer(long long n) const {
    const bool negative = n < 0;
    unsigned long long m = negative ? 0ULL - static_cast<unsigned long long>(n)
                                    : static_cast<unsigned long long>(n);
    m %= order();  // the additive order of 1 divides |R|
    Elem acc = 0;
    Elem step = one();
    while (m > 0) {
      if (m & 1u) acc = add(acc, step);
      m >>= 1;
      if (m > 0) step = add(step, step);
    }
    return negative ? neg(acc) : acc;
  }

  std::string format(Elem x) const { return impl_->format(x); }

  RingElem elem(Elem index) const {
    if (index >= order()) {
      throw AlgebraError("element index " + std::to_string(index) + " out of range for " +
                         label());
    }
    return RingElem{id(), index};
  }

  /// Unwraps a tagged element, rejecting elements of other rings.
  Elem own(const RingElem& e) const {
    if (e.ring_id != id()) throw RingMismatch("element belongs to a different ring than " + label());
    return elem(e.index).index;
  }

  bool materialized() const noexcept { return impl_->materialized(); }

  template <class Structure>
  const Structure* try_structure() const noexcept {
    return dynamic_cast<const Structure*>(impl_.get());
  }

  template <class Structure>
  const Structure& structure() const {
    if (const auto* s = try_structure<Structure>()) return *s;
    throw AlgebraError(label() + " is not a ring of the requested kind");
  }

  friend bool operator==(const FiniteRing& a, const FiniteRing& b) noexcept {
    return a.id() == b.id();
  }

 private:
  std::shared_ptr<const detail::RingImpl> impl_;
};

namespace detail {

template <class Impl, class... Args>
FiniteRing finalize_ring(const ConstructionOptions& opts, Args&&... args) {
  auto impl = std::make_shared<Impl>(std::forward<Args>(args)...);
  if (impl->order() < 2) throw AlgebraError("the zero ring is not supported (1 must differ from 0)");
  impl->finalize(impl->compute_one(), opts);
  return FiniteRing(std::shared_ptr<const RingImpl>(std::move(impl)));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Z/nZ

class ZmodRing final : public detail::RingImpl {
 public:
  explicit ZmodRing(std::uint32_t n)
      : RingImpl(RingKind::zmod, n, "Z/" + std::to_string(n)), modulus(n) {}

  std::uint32_t modulus;

  Elem compute_one() const { return 1; }
  std::string format(Elem x) const override { return std::to_string(x); }

 protected:
  Elem do_add(Elem x, Elem y) const override {
    return static_cast<Elem>((std::uint64_t{x} + y) % modulus);
  }
  Elem do_mul(Elem x, Elem y) const override {
    return static_cast<Elem>((std::uint64_t{x} * y) % modulus);
  }
  Elem do_neg(Elem x) const override { return x == 0 ? 0 : modulus - x; }
};

inline FiniteRing make_zmod(long long n, const ConstructionOptions& opts = {}) {
  if (n < 2) throw AlgebraError("Z/n requires n >= 2 (got " + std::to_string(n) + ")");
  if (n > (1LL << 24)) throw AlgebraError("modulus too large for exhaustive computation");
  return detail::finalize_ring<ZmodRing>(opts, static_cast<std::uint32_t>(n));
}

// ---------------------------------------------------------------------------
// Direct products, first factor most significant.

class ProductRing final : public detail::RingImpl {
 public:
  explicit ProductRing(std::vector<FiniteRing> fs)
      : RingImpl(RingKind::product, product_order(fs), product_label(fs)), factors(std::move(fs)) {
    strides.resize(factors.size());
    std::size_t stride = 1;
    for (std::size_t i = factors.size(); i-- > 0;) {
      strides[i] = stride;
      stride *= factors[i].order();
    }
  }

  std::vector<FiniteRing> factors;
  std::vector<std::size_t> strides;

  Elem component(Elem x, std::size_t i) const {
    return static_cast<Elem>((x / strides[i]) % factors[i].order());
  }

  std::vector<Elem> components(Elem x) const {
    std::vector<Elem> out(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) out[i] = component(x, i);
    return out;
  }

  Elem compose(std::span<const Elem> parts) const {
    std::size_t x = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) x += parts[i] * strides[i];
    return static_cast<Elem>(x);
  }

  Elem compute_one() const {
    std::vector<Elem> ones(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) ones[i] = factors[i].one();
    return compose(ones);
  }

  std::string format(Elem x) const override {
    std::string s = "(";
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) s += ',';
      s += factors[i].format(component(x, i));
    }
    return s + ")";
  }

 protected:
  Elem do_add(Elem x, Elem y) const override {
    return combine(x, y, [](const FiniteRing& r, Elem a, Elem b) { return r.add(a, b); });
  }
  Elem do_mul(Elem x, Elem y) const override {
    return combine(x, y, [](const FiniteRing& r, Elem a, Elem b) { return r.mul(a, b); });
  }
  Elem do_neg(Elem x) const override {
    std::size_t out = 0;
    for (std::size_t i = 0; i < factors.size(); ++i)
      out += factors[i].neg(component(x, i)) * strides[i];
    return static_cast<Elem>(out);
  }

 private:
  template <class Op>
  Elem combine(Elem x, Elem y, Op op) const {
    std::size_t out = 0;
    for (std::size_t i = 0; i < factors.size(); ++i)
      out += op(factors[i], component(x, i), component(y, i)) * strides[i];
    return static_cast<Elem>(out);
  }

  static std::size_t product_order(const std::vector<FiniteRing>& fs) {
    if (fs.empty()) throw AlgebraError("a product needs at least one factor");
    std::size_t n = 1;
    for (const auto& f : fs) {
      n *= f.order();
      if (n > (std::size_t{1} << 24)) throw AlgebraError("product too large for exhaustive computation");
    }
    return n;
  }

  static std::string product_label(const std::vector<FiniteRing>& fs) {
    std::string s;
    for (std::size_t i = 0; i < fs.size(); ++i) {
      if (i) s += " x ";
      s += fs[i].kind() == RingKind::zmod ? fs[i].label() : "(" + fs[i].label() + ")";
    }
    return s;
  }
};

inline FiniteRing make_product(std::vector<FiniteRing> factors, const ConstructionOptions& opts = {}) {
  return detail::finalize_ring<ProductRing>(opts, std::move(factors));
}

// ---------------------------------------------------------------------------
// Subrings given by an explicit member set (used for f(A)+J).

class SubRing final : public detail::RingImpl {
 public:
  SubRing(FiniteRing p, std::vector<Elem> ms, std::string label)
      : RingImpl(RingKind::subring, ms.size(), std::move(label)),
        parent(std::move(p)),
        members(std::move(ms)),
        position(parent.order(), kNoElem) {
    for (Elem i = 0; i < members.size(); ++i) position[members[i]] = i;
  }

  FiniteRing parent;
  std::vector<Elem> members;   // sorted parent indices, members[0] == 0
  std::vector<Elem> position;  // parent index -> subring index or kNoElem

  Elem compute_one() const { return position[parent.one()]; }
  std::string format(Elem x) const override { return parent.format(members[x]); }

 protected:
  Elem do_add(Elem x, Elem y) const override { return position[parent.add(members[x], members[y])]; }
  Elem do_mul(Elem x, Elem y) const override { return position[parent.mul(members[x], members[y])]; }
  Elem do_neg(Elem x) const override { return position[parent.neg(members[x])]; }
};

/// The subring of `parent` on `members`; the set must contain 0 and 1 and be
/// closed under +, - and *. Closure is verified exhaustively.
inline FiniteRing make_subring(const FiniteRing& parent, std::vector<Elem> members, std::string label,
                               const ConstructionOptions& opts = {}) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  std::vector<bool> in(parent.order(), false);
  for (Elem m : members) {
    if (m >= parent.order()) throw AlgebraError("subring member outside the parent ring");
    in[m] = true;
  }
  if (!in[0] || !in[parent.one()]) throw AlgebraError("a subring must contain 0 and 1");
  for (Elem x : members) {
    if (!in[parent.neg(x)]) throw AlgebraError("subring set not closed under negation");
    for (Elem y : members) {
      if (!in[parent.add(x, y)] || !in[parent.mul(x, y)])
        throw AlgebraError("subring set not closed under + and *");
    }
  }
  return detail::finalize_ring<SubRing>(opts, parent, std::move(members), std::move(label));
}

// ---------------------------------------------------------------------------

/// x^k for a tagged element.
inline RingElem elem_pow(const FiniteRing& ring, const RingElem& x, std::uint64_t k) {
  return ring.elem(ring.pow(ring.own(x), k));
}

/// Multiplicative inverse, if any.
inline std::optional<Elem> inverse(const FiniteRing& r, Elem x) {
  for (Elem y = 0; y < r.order(); ++y)
    if (r.mul(x, y) == r.one()) return y;
  return std::nullopt;
}

/// Every nonzero element is a unit.
inline bool is_field(const FiniteRing& r) {
  for (Elem x = 1; x < r.order(); ++x)
    if (!inverse(r, x)) return false;
  return true;
}

/// Outcome of a ring-axiom check; on failure names the law and the witnesses.
struct AxiomReport {
  bool ok = true;
  bool exhaustive = true;
  std::string failed_law;
  std::vector<Elem> witnesses;
};

/// Checks the commutative unital ring laws: exhaustively over all triples
/// when the order is at most `exhaustive_limit`, otherwise on `samples`
/// random triples drawn from a generator seeded with `seed`.
inline AxiomReport check_ring_axioms(const FiniteRing& r, std::uint64_t seed = 0,
                                     std::size_t exhaustive_limit = 64, std::size_t samples = 10000) {
  AxiomReport rep;
  auto fail = [&](const char* law, std::vector<Elem> w) {
    rep.ok = false;
    rep.failed_law = law;
    rep.witnesses = std::move(w);
  };
  auto check = [&](Elem x, Elem y, Elem z) -> bool {
    if (r.add(x, y) != r.add(y, x)) return fail("additive commutativity", {x, y}), false;
    if (r.add(r.add(x, y), z) != r.add(x, r.add(y, z)))
      return fail("additive associativity", {x, y, z}), false;
    if (r.add(x, 0) != x) return fail("additive identity", {x}), false;
    if (r.add(x, r.neg(x)) != 0) return fail("additive inverse", {x}), false;
    if (r.mul(x, y) != r.mul(y, x)) return fail("multiplicative commutativity", {x, y}), false;
    if (r.mul(r.mul(x, y), z) != r.mul(x, r.mul(y, z)))
      return fail("multiplicative associativity", {x, y, z}), false;
    if (r.mul(x, r.one()) != x) return fail("multiplicative identity", {x}), false;
    if (r.mul(x, r.add(y, z)) != r.add(r.mul(x, y), r.mul(x, z)))
      return fail("distributivity", {x, y, z}), false;
    return true;
  };
  const auto n = static_cast<Elem>(r.order());
  if (r.one() == 0) {
    fail("1 != 0", {});
    return rep;
  }
  if (n <= exhaustive_limit) {
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        for (Elem z = 0; z < n; ++z)
          if (!check(x, y, z)) return rep;
    return rep;
  }
  rep.exhaustive = false;
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<Elem> pick(0, n - 1);
  for (std::size_t i = 0; i < samples; ++i)
    if (!check(pick(gen), pick(gen), pick(gen))) return rep;
  return rep;
}

}  // namespace amalgam

#endif  // AMALGAM_RING_HPP
