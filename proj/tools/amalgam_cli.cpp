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

// amalgam: command-line front end.
//
// Exit status: 0 all verdicts agree, 1 a disagreement or failed certificate,
// 2 usage, parse, elaboration or resource error.

#include <amalgam/amalgam.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace amalgam;
using report::Json;

constexpr int kAgree = 0;
constexpr int kDisagree = 1;
constexpr int kUsage = 2;

struct Options {
  std::string expr;
  std::string format = "text";
  std::size_t ceiling = kDefaultCeiling;
  std::uint64_t seed = 0;
  bool timing = false;
  std::string inject = "1,1,1";
  std::string prime;
  std::string side = "amalg";
  std::size_t max_order = 256;
  std::string families = "dupl,quot,triv";
  std::size_t sample = 0;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

SubExponents parse_exponents(const std::string& s) {
  const auto parts = split(s, ',');
  if (parts.size() != 3) throw UsageError("--inject-exponents takes three comma-separated integers, got '" + s + "'");
  std::uint64_t k[3];
  for (int i = 0; i < 3; ++i) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(parts[i], &used);
      if (used != parts[i].size() || v < 1) throw std::invalid_argument("bad");
      k[i] = static_cast<std::uint64_t>(v);
    } catch (const std::exception&) {
      throw UsageError("--inject-exponents entries must be positive integers, got '" + parts[i] + "'");
    }
  }
  return {k[0], k[1], k[2]};
}

dsl::Elaborated load(dsl::Elaborator& el, const std::string& text) { return el.elaborate(dsl::parse(text)); }

const Amalgamation& need_amalgamation(const dsl::Elaborated& e) {
  if (!e.amalgamation) throw UsageError("expression must be dupl(...) or amalg(...), got " + e.canonical);
  return *e.amalgamation;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string decision_text(const FiniteRing& r, const Decision& d) {
  if (d.holds) return "yes";
  return d.witness ? "no (witness " + r.format(*d.witness) + ")" : "no";
}

Json decision_json(const FiniteRing& r, const Decision& d) {
  Json j;
  j["holds"] = d.holds;
  j["witness"] = d.witness ? Json(r.format(*d.witness)) : Json(nullptr);
  return j;
}

void print_theorem(std::ostream& os, const TheoremReport& t) {
  os << t.theorem << " (" << to_string(t.relation) << ") on " << t.instance << "\n";
  os << "  lhs: " << t.lhs_label << ": " << yes_no(t.lhs);
  if (t.lhs_witness) os << " (witness " << *t.lhs_witness << ")";
  os << "\n";
  for (std::size_t i = 0; i < t.conditions.size(); ++i) {
    const auto& c = t.conditions[i];
    os << "  (" << i + 1 << ") " << c.label << ": " << yes_no(c.holds);
    if (c.witness) os << " (witness " << *c.witness << ")";
    os << "\n";
  }
  os << "  verdict: " << to_string(t.verdict) << "\n";
}

void print_certificate(std::ostream& os, const SftCertificate& c, const std::string& indent) {
  os << indent << "target " << c.target.format() << " in " << c.ambient().label() << "\n";
  os << indent << "generators " << c.format_generators() << ", exponent " << c.exponent << ", "
     << (verify_certificate(c).ok ? "verified" : "NOT verified") << "\n";
}

void print_trace(std::ostream& os, const QbarCertTrace& t) {
  os << "  Q = " << t.q.format() << ", Qbar = " << t.qbar.format() << "\n";
  os << "  Q0 = " << (t.q0 ? t.q0->format() : std::string("(absent: (f(A)+J)/J is the zero ring)")) << "\n";
  os << "  I = " << t.i_set.format() << " (equals f^-1(J): " << yes_no(t.i_set_equals_preimage)
     << ", equals f^-1(J) meet projection: " << yes_no(t.i_set_equals_preimage_meet_projection) << ")\n";
  os << "  Q1 = " << t.q1.format() << "\n";
  os << "  k0, k1, k2 = " << t.k0 << ", " << t.k1 << ", " << t.k2 << "\n";
  print_certificate(os, t.combined, "  ");
}

struct Output {
  Json json;
  std::string text;
  int status = kAgree;
};

Output cmd_analyze(const Options& o) {
  dsl::Elaborator el;
  const auto e = load(el, o.expr);
  const FiniteRing& r = e.ring;
  require_within_ceiling(r, o.ceiling);
  const LatticeInfo l = analyze_lattice(r, o.ceiling);
  Output out;
  out.json = report::envelope("analyze");
  out.json["expr"] = e.canonical;
  out.json["ring"] = report::ring(r);
  Json p;
  p["vnr"] = decision_json(r, is_vnr(r));
  p["reduced"] = decision_json(r, is_reduced(r));
  p["boolean"] = decision_json(r, is_boolean(r));
  p["field"] = is_field(r);
  p["semisimple"] = decision_json(r, is_semisimple(r));
  out.json["properties"] = p;
  out.json["ideals"] = l.ideals.size();
  out.json["spec_size"] = l.primes.size();
  out.json["max_size"] = l.maximals.size();
  out.json["nilradical"] = report::ideal(nilradical(r));
  if (e.amalgamation) out.json["amalgamation"] = report::amalgamation(*e.amalgamation);

  std::ostringstream os;
  os << e.canonical << "\n";
  os << "  ring: " << r.label() << " (" << to_string(r.kind()) << "), order " << r.order() << "\n";
  os << "  von Neumann regular: " << decision_text(r, is_vnr(r)) << "\n";
  os << "  reduced: " << decision_text(r, is_reduced(r)) << "\n";
  os << "  boolean: " << decision_text(r, is_boolean(r)) << "\n";
  os << "  field: " << yes_no(is_field(r)) << "\n";
  os << "  semisimple: " << decision_text(r, is_semisimple(r)) << "\n";
  os << "  ideals: " << l.ideals.size() << ", |Spec| = " << l.primes.size() << ", |Max| = " << l.maximals.size()
     << "\n";
  os << "  nilradical: " << nilradical(r).format() << "\n";
  if (e.amalgamation) {
    const auto& am = *e.amalgamation;
    os << "  A = " << am.a_ring().label() << ", B = " << am.b_ring().label() << ", J = " << am.j_ideal().format()
       << ", |f(A)+J| = " << am.fa_plus_j().ring.order() << "\n";
  }
  out.text = os.str();
  return out;
}

Output cmd_spectrum(const Options& o) {
  dsl::Elaborator el;
  const auto e = load(el, o.expr);
  const LatticeInfo l = analyze_lattice(e.ring, o.ceiling);
  Output out;
  out.json = report::envelope("spectrum");
  out.json["expr"] = e.canonical;
  out.json["ring"] = report::ring(e.ring);
  out.json["spec"] = report::ideals(l.primes);
  out.json["max"] = report::ideals(l.maximals);
  std::ostringstream os;
  os << e.canonical << " (order " << e.ring.order() << ")\n";
  os << "  Spec (" << l.primes.size() << "):\n";
  for (const auto& p : l.primes) os << "    " << p.format() << (is_maximal(p) ? "  maximal" : "") << "\n";
  if (e.amalgamation) {
    const SpectrumClassification sc = classify_spectrum(*e.amalgamation, o.ceiling);
    out.json["classification"] = report::classification(sc);
    os << "  classified: " << sc.classified_spec.size() << " candidate primes, " << sc.classified_max.size()
       << " candidate maximals\n";
    for (const auto& c : sc.classified_spec)
      os << "    " << (c.route == ClassifiedIdeal::Route::extend_a ? "P'^f from P = " : "Qbar^f from Q = ")
         << c.source.format() << " -> " << c.ideal.format() << "\n";
    os << "  discrepancies: " << sc.discrepancies() << "\n";
    if (!sc.consistent()) out.status = kDisagree;
  }
  out.text = os.str();
  return out;
}

Output cmd_check_vnr(const Options& o) {
  dsl::Elaborator el;
  const auto e = load(el, o.expr);
  const Amalgamation& am = need_amalgamation(e);
  require_within_ceiling(am.ring(), o.ceiling);
  const LatticeInfo bl = analyze_lattice(am.b_ring(), o.ceiling);
  const std::vector<TheoremReport> reps{check_theorem_vnr(am, bl), check_reduced_characterization(am),
                                        check_corollary_semisimple(am, bl), check_corollary_both_vnr(am, o.ceiling)};
  Output out;
  out.json = report::envelope("check vnr");
  out.json["expr"] = e.canonical;
  out.json["amalgamation"] = report::amalgamation(am);
  out.json["report"] = report::theorem(reps[0]);
  out.json["related"] = Json::array();
  for (std::size_t i = 1; i < reps.size(); ++i) out.json["related"].push_back(report::theorem(reps[i]));
  std::ostringstream os;
  for (const auto& r : reps) {
    print_theorem(os, r);
    if (r.verdict != Verdict::agree) out.status = kDisagree;
  }
  out.json["verdict"] = out.status == kAgree ? "agree" : "disagree";
  out.text = os.str();
  return out;
}

Output cmd_check_sft(const Options& o) {
  dsl::Elaborator el;
  const auto e = load(el, o.expr);
  const Amalgamation& am = need_amalgamation(e);
  const SftTheoremReport rep = check_theorem_sft(am, o.ceiling, parse_exponents(o.inject));
  Output out;
  out.json = report::envelope("check sft");
  out.json["expr"] = e.canonical;
  out.json["amalgamation"] = report::amalgamation(am);
  out.json["report"] = report::sft_theorem(rep);
  std::ostringstream os;
  print_theorem(os, rep.theorem);
  for (const auto& p : rep.primes) {
    os << "  prime " << p.prime.format() << " via " << to_string(p.route);
    if (p.certificate)
      os << ": generators " << p.certificate->format_generators() << ", exponent " << p.certificate->exponent
         << ", minimal " << (p.minimal ? std::to_string(*p.minimal) : std::string("none"));
    os << (p.verified ? ", verified" : ", NOT verified");
    if (!p.error.empty()) os << " (" << p.error << ")";
    os << "\n";
  }
  if (rep.theorem.verdict != Verdict::agree || !rep.all_primes_certified()) out.status = kDisagree;
  out.text = os.str();
  return out;
}

Output cmd_cert(const Options& o) {
  dsl::Elaborator el;
  const auto e = load(el, o.expr);
  const Amalgamation& am = need_amalgamation(e);
  require_within_ceiling(am.ring(), o.ceiling);
  const SubExponents exps = parse_exponents(o.inject);
  const dsl::IdealSpec spec = dsl::parse_ideal_spec(o.prime);

  Output out;
  out.json = report::envelope("cert");
  out.json["expr"] = e.canonical;
  out.json["side"] = o.side;
  std::ostringstream os;
  os << e.canonical << "\n";

  auto via_a = [&](const Ideal& p) {
    if (!is_prime(p)) throw UsageError(p.format() + " is not a prime of " + am.a_ring().label());
    const SftCertificate cert = cert_amalg(trivial_certificate(p), trivial_certificate(am.fa_plus_j().j_ideal), am);
    const SftCertificate back = cert_contract(cert, am);
    out.json["route"] = "extend_a";
    out.json["source"] = report::ideal(p);
    out.json["certificate"] = report::certificate(cert);
    out.json["contracted"] = report::certificate(back);
    os << "P'^f for P = " << p.format() << "\n";
    print_certificate(os, cert, "  ");
    os << "  contracted to A:\n";
    print_certificate(os, back, "  ");
  };
  auto via_b = [&](const Ideal& q) {
    if (!is_prime(q)) throw UsageError(q.format() + " is not a prime of " + am.b_ring().label());
    if (am.j_ideal().subset_of(q)) throw UsageError("J is contained in " + q.format() + "; Qbar^f is not a new prime");
    const QbarCertTrace t = cert_qbar(am, q, exps);
    out.json["route"] = "extend_b";
    out.json["source"] = report::ideal(q);
    out.json["trace"] = report::qbar_trace(t);
    os << "Qbar^f for Q = " << q.format() << "\n";
    print_trace(os, t);
  };

  if (o.side == "a") {
    via_a(dsl::resolve_ideal(am.a_ring(), spec));
  } else if (o.side == "b") {
    via_b(dsl::resolve_ideal(am.b_ring(), spec));
  } else {
    const Ideal p = dsl::resolve_ideal(am.ring(), spec);
    if (!is_prime(p)) throw UsageError(p.format() + " is not a prime of " + am.ring().label());
    bool done = false;
    for (const auto& pa : spectrum(am.a_ring(), o.ceiling))
      if (!done && extend_prime_A(am, pa) == p) {
        via_a(pa);
        done = true;
      }
    for (const auto& q : spectrum(am.b_ring(), o.ceiling))
      if (!done && !am.j_ideal().subset_of(q) && extend_prime_B(am, q) == p) {
        via_b(q);
        done = true;
      }
    if (!done) {
      os << "prime " << p.format() << " matches neither P'^f nor Qbar^f\n";
      out.json["route"] = "unclassified";
      out.status = kDisagree;
    }
  }
  out.text = os.str();
  return out;
}

Output cmd_corpus(const Options& o) {
  corpus::Config cfg;
  cfg.max_order = o.max_order;
  cfg.families = split(o.families, ',');
  cfg.ceiling = o.ceiling;
  cfg.seed = o.seed;
  if (o.sample > 0) cfg.sample = o.sample;
  cfg.exponents = parse_exponents(o.inject);
  for (const auto& f : cfg.families)
    if (std::find(corpus::all_families().begin(), corpus::all_families().end(), f) == corpus::all_families().end())
      throw UsageError("unknown family '" + f + "' (expected dupl, quot, triv)");
  const corpus::CorpusResult res = corpus::run(cfg);
  Output out;
  out.json = corpus::to_json(res);
  out.text = corpus::to_text(res);
  out.status = res.ok() ? kAgree : kDisagree;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-ring amalgamation laboratory"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub, bool with_expr) {
    if (with_expr) sub->add_option("expr", o.expr, "ring expression, e.g. \"dupl(zmod(4), ideal(2))\"")->required();
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--ceiling", o.ceiling, "largest ring order for ideal enumeration");
    sub->add_option("--seed", o.seed, "seed for randomized selections");
    sub->add_flag("--timing", o.timing, "append wall-clock timing to the report");
  };

  auto* analyze = app.add_subcommand("analyze", "ring order, predicates, ideal counts");
  common(analyze, true);
  auto* spectrum_cmd = app.add_subcommand("spectrum", "prime and maximal ideals; classification for amalgamations");
  common(spectrum_cmd, true);

  auto* check = app.add_subcommand("check", "compare brute force against a characterization");
  check->require_subcommand(1);
  auto* vnr = check->add_subcommand("vnr", "von Neumann regularity, reduced and semisimple characterizations");
  common(vnr, true);
  auto* sft = check->add_subcommand("sft", "certify every prime of the amalgamation");
  common(sft, true);
  sft->add_option("--inject-exponents", o.inject, "exponents k0,k1,k2 of the Qbar sub-certificates");

  auto* cert = app.add_subcommand("cert", "certificate for one prime");
  common(cert, true);
  cert->add_option("--prime", o.prime, "ideal spec, e.g. \"ideal((2,0))\"")->required();
  cert->add_option("--side", o.side, "ring the ideal spec lives in")->check(CLI::IsMember({"amalg", "a", "b"}));
  cert->add_option("--inject-exponents", o.inject, "exponents k0,k1,k2 of the Qbar sub-certificates");

  auto* corpus_cmd = app.add_subcommand("corpus", "batch verification over generated families");
  common(corpus_cmd, false);
  corpus_cmd->add_option("--max-order", o.max_order, "largest amalgamation order");
  corpus_cmd->add_option("--families", o.families, "comma-separated subset of dupl,quot,triv");
  corpus_cmd->add_option("--sample", o.sample, "keep this many instances, chosen with --seed");
  corpus_cmd->add_option("--inject-exponents", o.inject, "exponents k0,k1,k2 of the Qbar sub-certificates");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  Output out;
  try {
    if (*analyze) out = cmd_analyze(o);
    else if (*spectrum_cmd) out = cmd_spectrum(o);
    else if (*vnr) out = cmd_check_vnr(o);
    else if (*sft) out = cmd_check_sft(o);
    else if (*cert) out = cmd_cert(o);
    else out = cmd_corpus(o);
  } catch (const CertificateFailure& e) {
    std::cerr << "certificate failure: " << e.what() << "\n";
    return kDisagree;
  } catch (const dsl::ParseError& e) {
    std::cerr << "parse error at " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (o.format == "json") {
    if (o.timing) out.json["timing"] = {{"elapsed_ms", ms}};
    std::cout << out.json.dump(2) << "\n";
  } else {
    std::cout << out.text;
    if (o.timing) std::cout << "elapsed: " << ms << " ms\n";
  }
  return out.status;
}
