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

// Batch verification over generated instance families:
//   dupl  A ⋈ I for every ideal I of A;
//   quot  A ⋈^f J with B = A/I, f the canonical surjection, J any ideal of B;
//   triv  A ⋈^f J with B = A ∝ E, f the embedding, J = 0 ∝ E.

#ifndef AMALGAM_CORPUS_HPP
#define AMALGAM_CORPUS_HPP

#include <amalgam/amalgamation.hpp>
#include <amalgam/dsl.hpp>
#include <amalgam/lattice.hpp>
#include <amalgam/predicates.hpp>
#include <amalgam/quotient.hpp>
#include <amalgam/report.hpp>
#include <amalgam/sft.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

namespace amalgam::corpus {

inline const std::vector<std::string>& all_families() {
  static const std::vector<std::string> f{"dupl", "quot", "triv"};
  return f;
}

struct Config {
  std::size_t max_order = 256;
  std::vector<std::string> families = all_families();
  std::size_t ceiling = kDefaultCeiling;
  std::optional<std::size_t> sample;
  std::uint64_t seed = 0;
  SubExponents exponents;
};

struct Instance {
  std::string family;
  std::string expr;
  std::size_t order = 0;

  std::string key() const { return family + ":" + expr; }
};

/// Base rings A the families are built over.
inline std::vector<std::string> base_rings() {
  std::vector<std::string> out;
  for (int n = 2; n <= 32; ++n) out.push_back("zmod(" + std::to_string(n) + ")");
  out.push_back("prod(zmod(2), zmod(2))");
  out.push_back("prod(zmod(2), zmod(3))");
  out.push_back("prod(zmod(2), zmod(4))");
  out.push_back("prod(zmod(3), zmod(3))");
  out.push_back("prod(zmod(2), zmod(2), zmod(2))");
  out.push_back("triv(zmod(2), coset(zero))");
  out.push_back("triv(zmod(3), coset(zero))");
  out.push_back("triv(zmod(4), ideal(2))");
  out.push_back("triv(zmod(4), coset(ideal(2)))");
  return out;
}

/// All instances of the requested families with |A ⋈^f J| ≤ max_order,
/// sorted by key, then optionally subsampled with the configured seed.
inline std::vector<Instance> generate(const Config& cfg, dsl::Elaborator& el) {
  const std::set<std::string> fams(cfg.families.begin(), cfg.families.end());
  for (const auto& f : fams)
    if (std::find(all_families().begin(), all_families().end(), f) == all_families().end())
      throw Error("unknown family '" + f + "'");
  std::map<std::string, Instance> found;
  auto add = [&](const std::string& fam, const std::string& text, std::size_t order) {
    if (order > cfg.max_order) return;
    const std::string canon = dsl::print(dsl::parse(text));
    Instance in{fam, canon, order};
    found.emplace(in.key(), in);
  };

  for (const auto& base : base_rings()) {
    const FiniteRing a = el.elaborate(dsl::parse(base)).ring;
    if (a.order() * 1 > cfg.max_order || a.order() > cfg.ceiling) continue;
    const std::vector<Ideal> a_ideals = enumerate_ideals(a, cfg.ceiling);
    const std::string a_text = dsl::print(dsl::parse(base));

    if (fams.count("dupl"))
      for (const auto& i : a_ideals)
        add("dupl", "dupl(" + a_text + ", " + dsl::print(dsl::ideal_spec_of(i)) + ")", a.order() * i.size());

    if (fams.count("quot")) {
      for (const auto& i : a_ideals) {
        if (i.is_whole()) continue;
        const std::string b_text = "quot(" + a_text + ", " + dsl::print(dsl::ideal_spec_of(i)) + ")";
        const FiniteRing b = el.elaborate(dsl::parse(b_text)).ring;
        for (const auto& j : enumerate_ideals(b, cfg.ceiling))
          add("quot", "amalg(" + a_text + ", " + b_text + ", canon, " + dsl::print(dsl::ideal_spec_of(j)) + ")",
              a.order() * j.size());
      }
    }

    if (fams.count("triv")) {
      std::vector<std::string> modules;
      for (const auto& k : a_ideals) {
        if (k.is_zero() || k.is_whole()) continue;
        modules.push_back(dsl::print(dsl::ideal_spec_of(k)));
      }
      for (const auto& k : a_ideals)
        if (!k.is_whole()) modules.push_back("coset(" + dsl::print(dsl::ideal_spec_of(k)) + ")");
      for (const auto& m : modules) {
        const std::string b_text = "triv(" + a_text + ", " + m + ")";
        const FiniteRing b = el.elaborate(dsl::parse(b_text)).ring;
        const Ideal j = module_ideal(b);
        if (a.order() * j.size() > cfg.max_order) continue;
        add("triv", "amalg(" + a_text + ", " + b_text + ", canon, " + dsl::print(dsl::ideal_spec_of(j)) + ")",
            a.order() * j.size());
      }
    }
  }

  std::vector<Instance> out;
  for (auto& [k, v] : found) out.push_back(v);
  if (cfg.sample && *cfg.sample < out.size()) {
    std::mt19937_64 rng(cfg.seed);
    std::shuffle(out.begin(), out.end(), rng);
    out.resize(*cfg.sample);
    std::sort(out.begin(), out.end(), [](const Instance& x, const Instance& y) { return x.key() < y.key(); });
  }
  return out;
}

// ---------------------------------------------------------------------------

/// Cross-oracle identities on one ring.
struct RingOracles {
  bool nilradical_is_prime_meet = true;
  bool maximal_iff_field = true;
  bool vnr_iff_reduced = true;
  bool primes_are_maximal = true;

  bool ok() const { return nilradical_is_prime_meet && maximal_iff_field && vnr_iff_reduced && primes_are_maximal; }
};

inline RingOracles ring_oracles(const FiniteRing& r, const LatticeInfo& l) {
  RingOracles o;
  o.nilradical_is_prime_meet = nilradical(r) == intersection_of(r, l.primes);
  for (const auto& i : l.ideals)
    if (i.is_proper() && is_maximal(i) != quotient_is_field(i)) o.maximal_iff_field = false;
  o.vnr_iff_reduced = is_vnr(r).holds == is_reduced(r).holds;
  o.primes_are_maximal = l.primes == l.maximals;
  return o;
}

/// One (combinator, constructed exponent, minimal exponent) observation.
struct Tightness {
  std::string combinator;
  std::uint64_t constructed = 0;
  std::uint64_t minimal = 0;  // 0: no exponent up to |R| works

  bool within_bound() const { return minimal != 0 && minimal <= constructed; }
  auto tie() const { return std::tie(combinator, constructed, minimal); }
  bool operator<(const Tightness& o) const { return tie() < o.tie(); }
};

struct InstanceResult {
  Instance instance;
  std::size_t a_order = 0, b_order = 0, j_size = 0, s_order = 0;
  bool order_is_product = true;
  bool projection_kernel_ok = true;
  bool pullback_ok = true;

  std::optional<TheoremReport> vnr, reduced, semisimple, both_vnr;
  std::size_t spec_size = 0, max_size = 0, discrepancies = 0;
  std::size_t primes = 0, primes_certified = 0;
  std::optional<TheoremReport> sft;
  bool images_ok = true;

  RingOracles oracles;
  std::map<std::string, std::size_t> certificates;  // combinator -> verified outputs
  std::vector<Tightness> tightness;
  std::size_t qbar_traces = 0;
  std::size_t qbar_expected_exponent = 0;  // verified traces with k0+k1+k2 as configured
  std::vector<std::string> failures;

  bool agrees() const {
    auto agree = [](const std::optional<TheoremReport>& t) { return t && t->verdict == Verdict::agree; };
    return failures.empty() && agree(vnr) && agree(reduced) && agree(semisimple) && agree(both_vnr) && agree(sft) &&
           discrepancies == 0 && primes_certified == primes && images_ok && oracles.ok() && order_is_product &&
           projection_kernel_ok && pullback_ok;
  }
};

namespace detail {

class LatticeCache {
 public:
  explicit LatticeCache(std::size_t ceiling) : ceiling_(ceiling) {}

  const LatticeInfo& get(const FiniteRing& r) {
    auto it = cache_.find(r.id());
    if (it == cache_.end()) it = cache_.emplace(r.id(), analyze_lattice(r, ceiling_)).first;
    return it->second;
  }

  const RingOracles& oracles(const FiniteRing& r) {
    auto it = oracles_.find(r.id());
    if (it == oracles_.end()) it = oracles_.emplace(r.id(), ring_oracles(r, get(r))).first;
    return it->second;
  }

 private:
  std::size_t ceiling_;
  std::unordered_map<std::uint64_t, LatticeInfo> cache_;
  std::unordered_map<std::uint64_t, RingOracles> oracles_;
};

inline void merge(RingOracles& into, const RingOracles& o) {
  into.nilradical_is_prime_meet = into.nilradical_is_prime_meet && o.nilradical_is_prime_meet;
  into.maximal_iff_field = into.maximal_iff_field && o.maximal_iff_field;
  into.vnr_iff_reduced = into.vnr_iff_reduced && o.vnr_iff_reduced;
  into.primes_are_maximal = into.primes_are_maximal && o.primes_are_maximal;
}

inline void record(InstanceResult& r, const std::string& combinator, const SftCertificate& c) {
  ++r.certificates[combinator];
  r.tightness.push_back({combinator, c.exponent, minimal_exponent(c).value_or(0)});
}

}  // namespace detail

inline InstanceResult run_instance(const Instance& in, dsl::Elaborator& el, detail::LatticeCache& cache,
                                   const Config& cfg) {
  InstanceResult res;
  res.instance = in;
  try {
    const dsl::Elaborated e = el.elaborate(dsl::parse(in.expr));
    if (!e.amalgamation) throw Error("not an amalgamation");
    const Amalgamation& am = *e.amalgamation;
    const FiniteRing& a = am.a_ring();
    const FiniteRing& b = am.b_ring();
    const FiniteRing& s = am.fa_plus_j().ring;
    res.a_order = a.order();
    res.b_order = b.order();
    res.j_size = am.j_ideal().size();
    res.s_order = s.order();
    res.order_is_product = am.ring().order() == a.order() * am.j_ideal().size();

    const LatticeInfo& ml = cache.get(am.ring());
    const LatticeInfo& al = cache.get(a);
    const LatticeInfo& bl = cache.get(b);
    const std::vector<Ideal> s_ideals = enumerate_ideals(s, cfg.ceiling);

    detail::merge(res.oracles, cache.oracles(am.ring()));
    detail::merge(res.oracles, cache.oracles(a));
    detail::merge(res.oracles, cache.oracles(b));

    std::vector<Elem> zero_j;
    for (Elem jj : am.j_ideal().elements()) zero_j.push_back(am.from_pair(0, jj));
    res.projection_kernel_ok = kernel(am.projection_a()) == make_ideal(am.ring(), zero_j);
    for (const auto& p : al.primes) {
      const Ideal ext = extend_prime_A(am, p);
      std::vector<Elem> firsts;
      for (Elem x : ext.elements()) firsts.push_back(am.first(x));
      std::sort(firsts.begin(), firsts.end());
      firsts.erase(std::unique(firsts.begin(), firsts.end()), firsts.end());
      if (firsts != p.elements()) res.pullback_ok = false;
    }

    res.vnr = check_theorem_vnr(am, bl);
    res.reduced = check_reduced_characterization(am);
    res.semisimple = check_corollary_semisimple(am, bl);
    res.both_vnr = check_corollary_both_vnr(am, cfg.ceiling);

    const SpectrumClassification sc = classify_spectrum(am, ml, al, bl);
    res.spec_size = sc.direct_spec.size();
    res.max_size = sc.direct_max.size();
    res.discrepancies = sc.discrepancies();

    const SftTheoremReport sft = check_theorem_sft(am, ml, al, bl, s_ideals, cfg.exponents);
    res.sft = sft.theorem;
    res.primes = sft.primes.size();
    res.images_ok = sft.image_a.ok() && sft.image_s.ok();
    const std::uint64_t expected = cfg.exponents.k0 + cfg.exponents.k1 + cfg.exponents.k2;
    std::vector<const SftCertificate*> certs;
    for (const auto& p : sft.primes) {
      if (p.verified) ++res.primes_certified;
      if (!p.error.empty()) res.failures.push_back("prime " + p.prime.format() + ": " + p.error);
      if (!p.certificate) continue;
      certs.push_back(&*p.certificate);
      if (p.route == PrimeCertificate::Route::extend_a) {
        detail::record(res, "cert_amalg", *p.certificate);
        if (!p.contract_roundtrip) res.failures.push_back("cert_contract round trip failed for " + p.prime.format());
      } else if (p.trace) {
        detail::record(res, "cert_qbar", *p.certificate);
        ++res.qbar_traces;
        if (p.verified && p.certificate->exponent == expected) ++res.qbar_expected_exponent;
      }
    }
    for (const auto* img : {&sft.image_a, &sft.image_s}) {
      res.certificates["cert_quotient"] += img->certified;
      for (const auto& [k, m] : img->exponents) res.tightness.push_back({"cert_quotient", k, m});
      if (!img->error.empty()) res.failures.push_back(img->ring_label + ": " + img->error);
    }
    for (std::size_t i = 0; i + 1 < certs.size(); ++i) {
      try {
        detail::record(res, "cert_sum", cert_sum(*certs[i], *certs[i + 1]));
      } catch (const Error& err) {
        res.failures.push_back(std::string("cert_sum: ") + err.what());
      }
    }
    for (const auto& t : res.tightness)
      if (!t.within_bound())
        res.failures.push_back(t.combinator + ": minimal exponent exceeds constructed " +
                               std::to_string(t.constructed));
  } catch (const Error& err) {
    res.failures.push_back(err.what());
  }
  return res;
}

struct CorpusResult {
  Config config;
  std::vector<InstanceResult> instances;

  std::size_t count_if(bool (*pred)(const InstanceResult&)) const {
    return static_cast<std::size_t>(std::count_if(instances.begin(), instances.end(), pred));
  }

  std::size_t disagreements() const {
    return count_if([](const InstanceResult& r) { return !r.agrees(); });
  }

  bool ok() const { return !instances.empty() && disagreements() == 0; }

  /// Instances where at least one Q̄^f certificate verified with the
  /// configured k0+k1+k2.
  std::size_t qbar_expected_instances() const {
    return count_if([](const InstanceResult& r) { return r.qbar_expected_exponent > 0; });
  }

  std::map<Tightness, std::size_t> tightness_table() const {
    std::map<Tightness, std::size_t> t;
    for (const auto& r : instances)
      for (const auto& x : r.tightness) ++t[x];
    return t;
  }

  std::map<std::string, std::size_t> certificate_counts() const {
    std::map<std::string, std::size_t> c;
    for (const auto& r : instances)
      for (const auto& [k, v] : r.certificates) c[k] += v;
    return c;
  }
};

inline CorpusResult run(const Config& cfg) {
  dsl::Elaborator el;
  CorpusResult out;
  out.config = cfg;
  detail::LatticeCache cache(cfg.ceiling);
  for (const auto& in : generate(cfg, el)) out.instances.push_back(run_instance(in, el, cache, cfg));
  return out;
}

// ---------------------------------------------------------------------------

inline report::Json to_json(const CorpusResult& c) {
  using report::Json;
  Json j = report::envelope("corpus");
  Json cfg;
  cfg["max_order"] = c.config.max_order;
  cfg["families"] = c.config.families;
  cfg["ceiling"] = c.config.ceiling;
  cfg["seed"] = c.config.seed;
  cfg["sample"] = c.config.sample ? Json(*c.config.sample) : Json(nullptr);
  cfg["inject_exponents"] = Json::array({c.config.exponents.k0, c.config.exponents.k1, c.config.exponents.k2});
  j["config"] = cfg;

  auto verdict = [](const std::optional<TheoremReport>& t) -> Json {
    return t ? Json(to_string(t->verdict)) : Json(nullptr);
  };
  Json xs = Json::array();
  for (const auto& r : c.instances) {
    Json i;
    i["key"] = r.instance.key();
    i["family"] = r.instance.family;
    i["expr"] = r.instance.expr;
    i["order"] = r.instance.order;
    i["A_order"] = r.a_order;
    i["B_order"] = r.b_order;
    i["J_size"] = r.j_size;
    i["fA_plus_J_order"] = r.s_order;
    i["vnr"] = r.vnr ? Json(r.vnr->lhs) : Json(nullptr);
    i["reduced"] = r.reduced ? Json(r.reduced->lhs) : Json(nullptr);
    i["vnr_verdict"] = verdict(r.vnr);
    i["reduced_verdict"] = verdict(r.reduced);
    i["semisimple_verdict"] = verdict(r.semisimple);
    i["both_vnr_verdict"] = verdict(r.both_vnr);
    i["sft_verdict"] = verdict(r.sft);
    i["spec_size"] = r.spec_size;
    i["max_size"] = r.max_size;
    i["spectrum_discrepancies"] = r.discrepancies;
    i["primes"] = r.primes;
    i["primes_certified"] = r.primes_certified;
    i["oracles_ok"] = r.oracles.ok();
    i["certificates"] = r.certificates;
    i["qbar_traces"] = r.qbar_traces;
    i["failures"] = r.failures;
    i["agrees"] = r.agrees();
    xs.push_back(i);
  }
  j["instances"] = xs;

  Json tight = Json::array();
  for (const auto& [t, n] : c.tightness_table()) {
    Json row;
    row["combinator"] = t.combinator;
    row["constructed"] = t.constructed;
    row["minimal"] = t.minimal;
    row["count"] = n;
    tight.push_back(row);
  }
  j["tightness"] = tight;

  Json sum;
  sum["instances"] = c.instances.size();
  for (const auto& fam : all_families()) {
    std::size_t n = 0;
    for (const auto& r : c.instances) n += r.instance.family == fam;
    sum["per_family"][fam] = n;
  }
  sum["disagreements"] = c.disagreements();
  sum["certificates"] = c.certificate_counts();
  sum["qbar_instances_with_expected_exponent"] = c.qbar_expected_instances();
  sum["ok"] = c.ok();
  j["summary"] = sum;
  return j;
}

inline std::string to_text(const CorpusResult& c) {
  std::ostringstream os;
  for (const auto& r : c.instances) {
    os << (r.agrees() ? "ok   " : "FAIL ") << r.instance.key() << "  |R|=" << r.instance.order;
    if (r.vnr) os << " vnr=" << (r.vnr->lhs ? "yes" : "no");
    os << " spec=" << r.spec_size << " certified=" << r.primes_certified << "/" << r.primes << "\n";
    for (const auto& f : r.failures) os << "     " << f << "\n";
  }
  os << "\ntightness (combinator constructed minimal count):\n";
  for (const auto& [t, n] : c.tightness_table())
    os << "  " << t.combinator << " " << t.constructed << " " << t.minimal << " " << n << "\n";
  os << "\ninstances: " << c.instances.size() << "\n";
  os << "disagreements: " << c.disagreements() << "\n";
  for (const auto& [k, v] : c.certificate_counts()) os << "certificates " << k << ": " << v << "\n";
  os << "qbar instances with exponent " << (c.config.exponents.k0 + c.config.exponents.k1 + c.config.exponents.k2)
     << ": " << c.qbar_expected_instances() << "\n";
  return os.str();
}

}  // namespace amalgam::corpus

#endif  // AMALGAM_CORPUS_HPP
