// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any FAIL.

#include <amalgam/amalgam.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "dsl_support.hpp"

using namespace amalgam;

namespace {

constexpr std::size_t kMaxOrder = 256;
constexpr std::size_t kMinInstances = 200;
constexpr double kMaxSeconds = 60.0;
constexpr std::size_t kMinInjectedInstances = 20;
constexpr std::size_t kFuzzInputs = 10000;
constexpr std::uint64_t kFuzzSeed = 20261015;
constexpr std::uint64_t kCorpusSeed = 42;
constexpr std::size_t kDeterminismSample = 60;

int failures = 0;

void verdict_line(int n, bool pass, const std::string& detail) {
  if (!pass) ++failures;
  std::cout << "criterion " << n << ": " << (pass ? "PASS" : "FAIL") << " " << detail << std::endl;
}

void guarded(int n, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    verdict_line(n, false, std::string("exception: ") + e.what());
  }
}

template <class Pred>
std::size_t count(const corpus::CorpusResult& r, Pred pred) {
  std::size_t n = 0;
  for (const auto& i : r.instances)
    if (pred(i)) ++n;
  return n;
}

bool agrees(const std::optional<TheoremReport>& t) { return t && t->verdict == Verdict::agree; }

Amalgamation from_text(const std::string& s) { return *dsl::elaborate(dsl::parse(s)).amalgamation; }

}  // namespace

int main() {
  corpus::Config cfg;
  cfg.max_order = kMaxOrder;
  const auto t0 = std::chrono::steady_clock::now();
  const corpus::CorpusResult run = corpus::run(cfg);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const std::size_t total = run.instances.size();
  std::cout << "corpus: " << total << " instances with order <= " << kMaxOrder << " in " << seconds << " s"
            << std::endl;

  for (const auto& i : run.instances)
    for (const auto& f : i.failures) std::cout << "  failure " << i.instance.key() << ": " << f << std::endl;

  guarded(1, [&] {
    const std::size_t ok = count(run, [](const auto& i) { return agrees(i.vnr); });
    std::ostringstream d;
    d << ok << "/" << total << " agree, " << seconds << " s (need >= " << kMinInstances << " instances, < "
      << kMaxSeconds << " s)";
    verdict_line(1, total >= kMinInstances && ok == total && seconds < kMaxSeconds, d.str());
  });

  guarded(2, [&] {
    const std::size_t ok = count(run, [](const auto& i) { return agrees(i.reduced); });
    verdict_line(2, total > 0 && ok == total, std::to_string(ok) + "/" + std::to_string(total) + " agree");
  });

  guarded(3, [&] {
    const std::size_t clean = count(run, [](const auto& i) { return i.failures.empty() && i.discrepancies == 0; });
    verdict_line(3, total > 0 && clean == total,
           std::to_string(clean) + "/" + std::to_string(total) + " with zero discrepancies");
  });

  guarded(4, [&] {
    bool ok = true;
    std::string d;
    for (int n = 1; n <= 4; ++n) {
      std::string b = "prod(zmod(2)";
      for (int k = 1; k < n; ++k) b += ", zmod(2)";
      b += ")";
      const Amalgamation am = from_text("amalg(zmod(2), " + b + ", diag, full)");
      const bool vnr = is_vnr(am.ring()).holds;
      const bool thm = check_theorem_vnr(am).verdict == Verdict::agree;
      ok = ok && vnr && thm;
      d += "n=" + std::to_string(n) + ":" + (vnr ? "vnr " : "not-vnr ");
    }
    verdict_line(4, ok, d);
  });

  guarded(5, [&] {
    const TheoremReport r = check_theorem_vnr(from_text("amalg(zmod(2), triv(zmod(2), coset(zero)), canon, ideal((0,1)))"));
    const bool ok = !r.lhs && r.conditions.size() >= 2 && !r.conditions[1].holds &&
                    r.conditions[1].witness == std::optional<std::string>("(0,1)") && r.verdict == Verdict::agree;
    std::string d = std::string("lhs=") + (r.lhs ? "true" : "false");
    if (r.conditions.size() >= 2)
      d += " condition(2)=" + std::string(r.conditions[1].holds ? "true" : "false") +
           " witness=" + r.conditions[1].witness.value_or("-");
    d += std::string(" verdict=") + to_string(r.verdict);
    verdict_line(5, ok, d);
  });

  guarded(6, [&] {
    const auto counts = run.certificate_counts();
    const std::size_t clean = count(run, [](const auto& i) { return i.failures.empty() && i.primes == i.primes_certified; });
    bool every_combinator = true;
    std::string d;
    for (const char* c : {"cert_quotient", "cert_sum", "cert_amalg", "cert_qbar"}) {
      const auto it = counts.find(c);
      const std::size_t n = it == counts.end() ? 0 : it->second;
      every_combinator = every_combinator && n > 0;
      d += std::string(c) + "=" + std::to_string(n) + " ";
    }
    corpus::Config inj = cfg;
    inj.exponents = SubExponents{2, 1, 1};
    const corpus::CorpusResult injected = corpus::run(inj);
    const std::size_t four = injected.qbar_expected_instances();
    const bool injected_clean = injected.ok();
    d += "verified; injected (2,1,1): " + std::to_string(four) + " instances with exponent 4 (need >= " +
         std::to_string(kMinInjectedInstances) + ")";
    verdict_line(6, clean == total && every_combinator && injected_clean && four >= kMinInjectedInstances, d);
  });

  guarded(7, [&] {
    std::size_t primes = 0, certified = 0;
    for (const auto& i : run.instances) {
      primes += i.primes;
      certified += i.primes_certified;
    }
    const std::size_t images = count(run, [](const auto& i) { return i.images_ok && agrees(i.sft); });
    verdict_line(7, primes > 0 && certified == primes && images == total,
           std::to_string(certified) + "/" + std::to_string(primes) + " primes certified, " + std::to_string(images) +
               "/" + std::to_string(total) + " instances with both images certified");
  });

  guarded(8, [&] {
    const std::size_t ok = count(run, [](const auto& i) { return i.oracles.ok() && i.order_is_product; });
    verdict_line(8, total > 0 && ok == total, std::to_string(ok) + "/" + std::to_string(total) + " instances pass");
  });

  guarded(9, [&] {
    const auto table = run.tightness_table();
    bool ok = !table.empty();
    std::cout << "  combinator      constructed  minimal  count" << std::endl;
    for (const auto& [t, n] : table) {
      ok = ok && t.within_bound();
      char line[96];
      std::snprintf(line, sizeof line, "  %-15s %11llu  %7llu  %5zu", t.combinator.c_str(),
                    static_cast<unsigned long long>(t.constructed), static_cast<unsigned long long>(t.minimal), n);
      std::cout << line << std::endl;
    }
    verdict_line(9, ok, std::to_string(table.size()) + " distinct (constructed, minimal) rows");
  });

  guarded(10, [&] {
    std::size_t stable = 0;
    for (const auto& s : dsl_support::golden()) {
      const dsl::RingExpr e = dsl::parse(s);
      if (dsl::print(e) == s && dsl::parse(dsl::print(e)) == e) ++stable;
    }
    std::size_t bad = 0, diagnostics = 0;
    for (const auto& s : dsl_support::fuzz_inputs(kFuzzInputs, kFuzzSeed)) {
      const auto o = dsl_support::classify(s);
      if (o == dsl_support::FuzzOutcome::other_exception) ++bad;
      if (o == dsl_support::FuzzOutcome::parse_error || o == dsl_support::FuzzOutcome::elaboration_error)
        ++diagnostics;
    }
    corpus::Config c = cfg;
    c.sample = kDeterminismSample;
    c.seed = kCorpusSeed;
    const std::string first = corpus::to_json(corpus::run(c)).dump(2);
    const std::string second = corpus::to_json(corpus::run(c)).dump(2);
    const bool same = first == second;
    verdict_line(10, stable == dsl_support::golden().size() && dsl_support::golden().size() == 20 && bad == 0 && same,
           "golden " + std::to_string(stable) + "/20, fuzz " + std::to_string(kFuzzInputs) + " inputs with " +
               std::to_string(diagnostics) + " diagnostics and " + std::to_string(bad) +
               " other exceptions, corpus json " + (same ? "identical" : "differs") + " across runs");
  });

  return failures == 0 ? 0 : 1;
}
