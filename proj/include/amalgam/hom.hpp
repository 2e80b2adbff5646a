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

#ifndef AMALGAM_HOM_HPP
#define AMALGAM_HOM_HPP

#include <amalgam/ring.hpp>

#include <string>
#include <vector>

namespace amalgam {

/// Raised by make_hom; carries the violated law and its witnesses.
class HomError : public AlgebraError {
 public:
  HomError(std::string law, std::vector<Elem> witnesses, const std::string& detail)
      : AlgebraError("not a ring homomorphism: " + law + " fails" + detail),
        law_(std::move(law)),
        witnesses_(std::move(witnesses)) {}

  const std::string& law() const noexcept { return law_; }
  const std::vector<Elem>& witnesses() const noexcept { return witnesses_; }

 private:
  std::string law_;
  std::vector<Elem> witnesses_;
};

/// A unital ring homomorphism with a total lookup table. Only make_hom
/// builds one, after checking every law exhaustively.
class RingHom {
 public:
  const FiniteRing& source() const noexcept { return source_; }
  const FiniteRing& target() const noexcept { return target_; }
  const std::vector<Elem>& table() const noexcept { return table_; }

  Elem operator()(Elem x) const { return table_[x]; }

  bool is_surjective() const {
    std::vector<bool> hit(target_.order(), false);
    std::size_t count = 0;
    for (Elem y : table_)
      if (!hit[y]) hit[y] = true, ++count;
    return count == target_.order();
  }

 private:
  RingHom(FiniteRing s, FiniteRing t, std::vector<Elem> table)
      : source_(std::move(s)), target_(std::move(t)), table_(std::move(table)) {}

  friend RingHom make_hom(const FiniteRing&, const FiniteRing&, std::vector<Elem>);

  FiniteRing source_;
  FiniteRing target_;
  std::vector<Elem> table_;
};

/// Validates `table` (indexed by source element) as a unital ring
/// homomorphism. The first violated law is reported with its witnesses.
inline RingHom make_hom(const FiniteRing& source, const FiniteRing& target, std::vector<Elem> table) {
  if (table.size() != source.order())
    throw AlgebraError("homomorphism table has " + std::to_string(table.size()) +
                       " entries, source has " + std::to_string(source.order()));
  for (Elem x = 0; x < table.size(); ++x)
    if (table[x] >= target.order())
      throw AlgebraError("homomorphism table entry " + std::to_string(x) + " is outside the target");
  auto show = [&](Elem x) { return source.format(x); };
  auto tshow = [&](Elem y) { return target.format(y); };
  if (table[0] != 0) throw HomError("f(0) = 0", {0}, ": f(0) = " + tshow(table[0]));
  if (table[source.one()] != target.one())
    throw HomError("f(1) = 1", {source.one()}, ": f(1) = " + tshow(table[source.one()]));
  const auto n = static_cast<Elem>(source.order());
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (table[source.add(x, y)] != target.add(table[x], table[y]))
        throw HomError("additivity", {x, y},
                       " at (" + show(x) + ", " + show(y) + "): f(" + show(source.add(x, y)) +
                           ") = " + tshow(table[source.add(x, y)]) + " but f(x)+f(y) = " +
                           tshow(target.add(table[x], table[y])));
    }
  }
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = x; y < n; ++y) {
      if (table[source.mul(x, y)] != target.mul(table[x], table[y]))
        throw HomError("multiplicativity", {x, y},
                       " at (" + show(x) + ", " + show(y) + "): f(xy) = " +
                           tshow(table[source.mul(x, y)]) + " but f(x)f(y) = " +
                           tshow(target.mul(table[x], table[y])));
    }
  }
  return RingHom(source, target, std::move(table));
}

inline RingHom identity_hom(const FiniteRing& r) {
  std::vector<Elem> t(r.order());
  for (Elem x = 0; x < t.size(); ++x) t[x] = x;
  return make_hom(r, r, std::move(t));
}

/// g ∘ f.
inline RingHom compose(const RingHom& g, const RingHom& f) {
  if (!(f.target() == g.source())) throw RingMismatch("composition endpoints do not match");
  std::vector<Elem> t(f.source().order());
  for (Elem x = 0; x < t.size(); ++x) t[x] = g(f(x));
  return make_hom(f.source(), g.target(), std::move(t));
}

}  // namespace amalgam

#endif  // AMALGAM_HOM_HPP
