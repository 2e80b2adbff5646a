#ifndef AMALGAM_TESTS_DSL_SUPPORT_HPP
#define AMALGAM_TESTS_DSL_SUPPORT_HPP

#include <amalgam/amalgam.hpp>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace dsl_support {

/// Twenty expressions in canonical printed form.
inline const std::vector<std::string>& golden() {
  static const std::vector<std::string> g{
      "zmod(6)",
      "zmod(2)",
      "prod(zmod(2), zmod(3))",
      "prod(zmod(2), zmod(2), zmod(2))",
      "quot(zmod(12), ideal(4))",
      "quot(prod(zmod(2), zmod(4)), ideal((0,2)))",
      "triv(zmod(2), coset(zero))",
      "triv(zmod(4), ideal(2))",
      "triv(zmod(4), coset(ideal(2)))",
      "dupl(zmod(4), ideal(2))",
      "dupl(zmod(6), full)",
      "dupl(prod(zmod(2), zmod(2)), ideal((1,0)))",
      "dupl(zmod(12), ideal(2, 3))",
      "amalg(zmod(2), prod(zmod(2), zmod(2), zmod(2)), diag, full)",
      "amalg(zmod(2), triv(zmod(2), coset(zero)), canon, ideal((0,1)))",
      "amalg(zmod(6), zmod(6), id, ideal(2))",
      "amalg(zmod(12), quot(zmod(12), ideal(4)), canon, ideal(2))",
      "amalg(zmod(2), zmod(2), table:[0, 1], zero)",
      "amalg(zmod(4), zmod(2), table:[0, 1, 0, 1], full)",
      "amalg(zmod(3), prod(zmod(3), zmod(3)), table:[(0,0), (1,1), (2,2)], ideal((1,0), -1))",
  };
  return g;
}

/// Upper bound on the order an expression elaborates to.
inline std::uint64_t order_bound(const amalgam::dsl::RingExpr& e) {
  using K = amalgam::dsl::RingExpr::Kind;
  auto sat = [](std::uint64_t a, std::uint64_t b) -> std::uint64_t {
    return (a == 0 || b <= UINT64_MAX / a) ? a * b : UINT64_MAX;
  };
  switch (e.kind) {
    case K::zmod: return e.modulus > 0 ? static_cast<std::uint64_t>(e.modulus) : 1;
    case K::prod: {
      std::uint64_t n = 1;
      for (const auto& c : e.children) n = sat(n, order_bound(c));
      return n;
    }
    case K::quot: return order_bound(e.children[0]);
    case K::triv:
    case K::dupl: return sat(order_bound(e.children[0]), order_bound(e.children[0]));
    case K::amalg: return sat(order_bound(e.children[0]), order_bound(e.children[1]));
  }
  return UINT64_MAX;
}

/// Random inputs: half are character-level mutations of golden expressions,
/// half are random token sequences over the DSL vocabulary.
inline std::vector<std::string> fuzz_inputs(std::size_t n, std::uint64_t seed) {
  static const std::vector<std::string> vocab{
      "zmod", "prod", "quot", "triv", "dupl", "amalg", "ideal", "full", "zero", "coset", "id", "diag",
      "canon", "table", "(", ")", ",", ":", "[", "]", "-", "0", "1", "2", "3", "4", "6", "12", " ", "x", "#", "\n"};
  static const std::string chars = "()[],:-0123456789 azmodprquotivclgnefx#\n\t";
  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t bound) { return static_cast<std::size_t>(rng() % bound); };
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::string s;
    if (i % 2 == 0) {
      s = golden()[pick(golden().size())];
      const std::size_t edits = 1 + pick(4);
      for (std::size_t k = 0; k < edits; ++k) {
        const std::size_t at = s.empty() ? 0 : pick(s.size() + 1);
        switch (pick(3)) {
          case 0: s.insert(at, 1, chars[pick(chars.size())]); break;
          case 1:
            if (at < s.size()) s.erase(at, 1);
            break;
          default:
            if (at < s.size()) s[at] = chars[pick(chars.size())];
        }
      }
    } else {
      const std::size_t len = pick(24);
      for (std::size_t k = 0; k < len; ++k) s += vocab[pick(vocab.size())];
    }
    out.push_back(std::move(s));
  }
  return out;
}

enum class FuzzOutcome { parsed_and_elaborated, parse_error, elaboration_error, skipped_large, other_exception };

/// Parses `s`; if it parses and the order bound is at most `max_order`,
/// elaborates it. Anything other than ParseError or ElaborationError is
/// reported as other_exception.
inline FuzzOutcome classify(const std::string& s, std::uint64_t max_order = 4096) {
  using namespace amalgam;
  try {
    const dsl::RingExpr e = dsl::parse(s);
    if (order_bound(e) > max_order) return FuzzOutcome::skipped_large;
    dsl::elaborate(e);
    return FuzzOutcome::parsed_and_elaborated;
  } catch (const dsl::ParseError&) {
    return FuzzOutcome::parse_error;
  } catch (const dsl::ElaborationError&) {
    return FuzzOutcome::elaboration_error;
  } catch (...) {
    return FuzzOutcome::other_exception;
  }
}

}  // namespace dsl_support

#endif  // AMALGAM_TESTS_DSL_SUPPORT_HPP
