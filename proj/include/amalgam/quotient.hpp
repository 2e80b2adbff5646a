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

// Quotient rings, the two supported module forms, and trivial extensions.

#ifndef AMALGAM_QUOTIENT_HPP
#define AMALGAM_QUOTIENT_HPP

#include <amalgam/hom.hpp>
#include <amalgam/ideal.hpp>
#include <amalgam/ring.hpp>

#include <string>
#include <utility>
#include <vector>

namespace amalgam {

namespace detail {

/// Coset decomposition of a ring by an additive subgroup: coset indices
/// follow the smallest representative, so the zero coset is index 0.
struct Cosets {
  std::vector<Elem> coset_of;  // ring element -> coset index
  std::vector<Elem> reps;      // coset index -> smallest representative

  static Cosets of(const Ideal& I) {
    const FiniteRing& r = I.ring();
    Cosets c;
    c.coset_of.assign(r.order(), kNoElem);
    for (Elem x = 0; x < r.order(); ++x) {
      if (c.coset_of[x] != kNoElem) continue;
      const auto idx = static_cast<Elem>(c.reps.size());
      c.reps.push_back(x);
      for (Elem i : I.elements()) c.coset_of[r.add(x, i)] = idx;
    }
    return c;
  }
};

inline std::string short_ideal_label(const Ideal& I) {
  const auto& ring = I.ring();
  if (I.generators()) {
    std::string s = "(";
    bool first = true;
    for (Elem g : *I.generators()) {
      if (!first) s += ',';
      first = false;
      s += ring.format(g);
    }
    return s + ")";
  }
  return I.format();
}

}  // namespace detail

class QuotientRing final : public detail::RingImpl {
 public:
  QuotientRing(FiniteRing p, Ideal I, detail::Cosets c)
      : RingImpl(RingKind::quotient, c.reps.size(), p.label() + "/" + detail::short_ideal_label(I)),
        parent(std::move(p)),
        ideal(std::move(I)),
        cosets(std::move(c)) {}

  FiniteRing parent;
  Ideal ideal;
  detail::Cosets cosets;

  Elem compute_one() const { return cosets.coset_of[parent.one()]; }
  std::string format(Elem x) const override { return parent.format(cosets.reps[x]); }

 protected:
  Elem do_add(Elem x, Elem y) const override {
    return cosets.coset_of[parent.add(cosets.reps[x], cosets.reps[y])];
  }
  Elem do_mul(Elem x, Elem y) const override {
    return cosets.coset_of[parent.mul(cosets.reps[x], cosets.reps[y])];
  }
  Elem do_neg(Elem x) const override { return cosets.coset_of[parent.neg(cosets.reps[x])]; }
};

/// A quotient ring together with its canonical surjection.
struct Quotient {
  FiniteRing ring;
  RingHom surjection;
};

/// R/I for a proper ideal I; |R/I| = |R| / |I|.
inline Quotient make_quotient(const FiniteRing& r, const Ideal& I, const ConstructionOptions& opts = {}) {
  if (!(I.ring() == r)) throw RingMismatch("ideal does not belong to " + r.label());
  if (I.is_whole()) throw AlgebraError("quotient by the whole ring would be the zero ring");
  auto cosets = detail::Cosets::of(I);
  std::vector<Elem> proj = cosets.coset_of;
  FiniteRing q = detail::finalize_ring<QuotientRing>(opts, r, I, std::move(cosets));
  RingHom h = make_hom(r, q, std::move(proj));
  return Quotient{std::move(q), std::move(h)};
}

/// R/I is a field. Independent of is_maximal's lattice argument.
inline bool quotient_is_field(const Ideal& I) {
  if (I.is_whole()) return false;
  return is_field(make_quotient(I.ring(), I).ring);
}

// ---------------------------------------------------------------------------
// Modules over a ring A: an ideal of A under multiplication, or A/I under
// the induced action.

enum class ModuleForm { ideal, quotient };

class FiniteModule {
 public:
  const FiniteRing& base_ring() const noexcept { return base_; }
  ModuleForm form() const noexcept { return form_; }
  const Ideal& defining_ideal() const noexcept { return ideal_; }
  std::size_t order() const noexcept { return to_ring_.size(); }

  Elem add(Elem e, Elem f) const { return from_ring_[base_.add(to_ring_[e], to_ring_[f])]; }
  Elem neg(Elem e) const { return from_ring_[base_.neg(to_ring_[e])]; }
  Elem act(Elem a, Elem e) const { return from_ring_[base_.mul(a, to_ring_[e])]; }

  /// Representative of e in A.
  Elem representative(Elem e) const { return to_ring_[e]; }
  /// Module element of a ring element: the coset (quotient form) or the
  /// position in the ideal (ideal form, kNoElem when outside).
  Elem from_ring(Elem a) const { return from_ring_[a]; }

  std::string format(Elem e) const { return base_.format(to_ring_[e]); }

  std::string label() const {
    return form_ == ModuleForm::ideal ? detail::short_ideal_label(ideal_)
                                      : base_.label() + "/" + detail::short_ideal_label(ideal_);
  }

  static FiniteModule of_ideal(const Ideal& I) {
    FiniteModule m(I.ring(), I, ModuleForm::ideal);
    m.to_ring_ = I.elements();
    m.from_ring_.assign(I.ring().order(), kNoElem);
    for (Elem i = 0; i < m.to_ring_.size(); ++i) m.from_ring_[m.to_ring_[i]] = i;
    return m;
  }

  static FiniteModule of_quotient(const Ideal& I) {
    FiniteModule m(I.ring(), I, ModuleForm::quotient);
    auto c = detail::Cosets::of(I);
    m.to_ring_ = std::move(c.reps);
    m.from_ring_ = std::move(c.coset_of);
    return m;
  }

 private:
  FiniteModule(FiniteRing base, Ideal I, ModuleForm form)
      : base_(std::move(base)), ideal_(std::move(I)), form_(form) {}

  FiniteRing base_;
  Ideal ideal_;
  ModuleForm form_;
  std::vector<Elem> to_ring_;
  std::vector<Elem> from_ring_;
};

/// Bilinearity, unit action and associativity of the action, exhaustively.
inline bool check_module_axioms(const FiniteModule& m) {
  const FiniteRing& a = m.base_ring();
  const auto n = static_cast<Elem>(m.order());
  for (Elem e = 0; e < n; ++e) {
    if (m.act(a.one(), e) != e) return false;
    for (Elem f = 0; f < n; ++f)
      if (m.add(e, f) != m.add(f, e)) return false;
    for (Elem x = 0; x < a.order(); ++x) {
      for (Elem f = 0; f < n; ++f)
        if (m.act(x, m.add(e, f)) != m.add(m.act(x, e), m.act(x, f))) return false;
      for (Elem y = 0; y < a.order(); ++y) {
        if (m.act(a.add(x, y), e) != m.add(m.act(x, e), m.act(y, e))) return false;
        if (m.act(a.mul(x, y), e) != m.act(x, m.act(y, e))) return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// A ∝ E: carrier A × E, (a,e)(a',e') = (aa', a·e' + a'·e).

class TrivialExtension final : public detail::RingImpl {
 public:
  TrivialExtension(FiniteRing a, FiniteModule e)
      : RingImpl(RingKind::trivial_extension, a.order() * e.order(),
                 "(" + a.label() + ") x| " + e.label()),
        base(std::move(a)),
        module(std::move(e)) {}

  FiniteRing base;
  FiniteModule module;

  Elem pack(Elem a, Elem e) const { return static_cast<Elem>(std::size_t{a} * module.order() + e); }
  Elem base_part(Elem x) const { return static_cast<Elem>(x / module.order()); }
  Elem module_part(Elem x) const { return static_cast<Elem>(x % module.order()); }

  Elem compute_one() const { return pack(base.one(), 0); }
  std::string format(Elem x) const override {
    return "(" + base.format(base_part(x)) + "," + module.format(module_part(x)) + ")";
  }

 protected:
  Elem do_add(Elem x, Elem y) const override {
    return pack(base.add(base_part(x), base_part(y)), module.add(module_part(x), module_part(y)));
  }
  Elem do_mul(Elem x, Elem y) const override {
    const Elem a = base_part(x), e = module_part(x), b = base_part(y), f = module_part(y);
    return pack(base.mul(a, b), module.add(module.act(a, f), module.act(b, e)));
  }
  Elem do_neg(Elem x) const override { return pack(base.neg(base_part(x)), module.neg(module_part(x))); }
};

inline FiniteRing make_trivial_extension(const FiniteRing& a, const FiniteModule& e,
                                         const ConstructionOptions& opts = {}) {
  if (!(e.base_ring() == a)) throw RingMismatch("module is over a different ring than " + a.label());
  return detail::finalize_ring<TrivialExtension>(opts, a, e);
}

/// 0 ∝ E as an ideal of A ∝ E.
inline Ideal module_ideal(const FiniteRing& ext) {
  const auto& t = ext.structure<TrivialExtension>();
  std::vector<Elem> out;
  for (Elem e = 0; e < t.module.order(); ++e) out.push_back(t.pack(0, e));
  return Ideal::trusted(ext, std::move(out));
}

/// a ↦ (a, 0).
inline RingHom trivial_extension_embedding(const FiniteRing& ext) {
  const auto& t = ext.structure<TrivialExtension>();
  std::vector<Elem> table(t.base.order());
  for (Elem a = 0; a < table.size(); ++a) table[a] = t.pack(a, 0);
  return make_hom(t.base, ext, std::move(table));
}

}  // namespace amalgam

#endif  // AMALGAM_QUOTIENT_HPP
