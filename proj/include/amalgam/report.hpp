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

// JSON encoding of reports. Output is a pure function of the inputs; no
// clocks, addresses or ring ids appear in payloads.

#ifndef AMALGAM_REPORT_HPP
#define AMALGAM_REPORT_HPP

#include <amalgam/amalgamation.hpp>
#include <amalgam/lattice.hpp>
#include <amalgam/predicates.hpp>
#include <amalgam/sft.hpp>

#include <json.hpp>

#include <string>
#include <vector>

namespace amalgam::report {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

inline Json envelope(const std::string& command) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  return j;
}

inline Json elements(const FiniteRing& r, const std::vector<Elem>& xs) {
  Json out = Json::array();
  for (Elem x : xs) out.push_back(r.format(x));
  return out;
}

inline Json ideal(const Ideal& i) {
  Json j;
  j["size"] = i.size();
  j["elements"] = elements(i.ring(), i.elements());
  return j;
}

inline Json ideals(const std::vector<Ideal>& is) {
  Json out = Json::array();
  for (const auto& i : is) out.push_back(ideal(i));
  return out;
}

inline Json ring(const FiniteRing& r) {
  Json j;
  j["label"] = r.label();
  j["kind"] = to_string(r.kind());
  j["order"] = r.order();
  return j;
}

inline Json amalgamation(const Amalgamation& am) {
  Json j;
  j["A"] = ring(am.a_ring());
  j["B"] = ring(am.b_ring());
  j["J"] = ideal(am.j_ideal());
  j["fA_plus_J_order"] = am.fa_plus_j().ring.order();
  j["order"] = am.ring().order();
  return j;
}

inline Json condition(const Condition& c) {
  Json j;
  j["label"] = c.label;
  j["holds"] = c.holds;
  j["witness"] = c.witness ? Json(*c.witness) : Json(nullptr);
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

inline Json theorem(const TheoremReport& t) {
  Json j;
  j["theorem"] = t.theorem;
  j["instance"] = t.instance;
  j["relation"] = to_string(t.relation);
  j["lhs_label"] = t.lhs_label;
  j["lhs"] = t.lhs;
  j["lhs_witness"] = t.lhs_witness ? Json(*t.lhs_witness) : Json(nullptr);
  j["conditions"] = Json::array();
  for (const auto& c : t.conditions) j["conditions"].push_back(condition(c));
  j["verdict"] = to_string(t.verdict);
  return j;
}

inline Json certificate(const SftCertificate& c) {
  Json j;
  j["ring"] = c.ambient().label();
  j["target"] = ideal(c.target);
  j["generators"] = elements(c.ambient(), c.generators);
  j["exponent"] = c.exponent;
  const CertCheck check = verify_certificate(c);
  j["verified"] = check.ok;
  if (!check.ok) j["failure"] = check.reason;
  return j;
}

inline Json qbar_trace(const QbarCertTrace& t) {
  Json j;
  j["Q"] = ideal(t.q);
  j["Qbar"] = ideal(t.qbar);
  j["Q0"] = t.q0 ? ideal(*t.q0) : Json(nullptr);
  j["cert_Q0"] = t.cert_q0 ? certificate(*t.cert_q0) : Json(nullptr);
  j["I_set"] = ideal(t.i_set);
  j["I_set_equals_preimage"] = t.i_set_equals_preimage;
  j["I_set_equals_preimage_meet_projection"] = t.i_set_equals_preimage_meet_projection;
  j["cert_I_set"] = certificate(t.cert_i_set);
  j["Q1"] = ideal(t.q1);
  j["cert_Q1"] = certificate(t.cert_q1);
  j["k"] = Json::array({t.k0, t.k1, t.k2});
  const FiniteRing& r = t.combined.ambient();
  j["L0"] = elements(r, t.l0);
  j["L1"] = elements(r, t.l1);
  j["L2"] = elements(r, t.l2);
  j["combined"] = certificate(t.combined);
  return j;
}

inline Json prime_certificate(const PrimeCertificate& p) {
  Json j;
  j["prime"] = ideal(p.prime);
  j["route"] = to_string(p.route);
  j["source"] = p.source ? ideal(*p.source) : Json(nullptr);
  j["certificate"] = p.certificate ? certificate(*p.certificate) : Json(nullptr);
  j["minimal_exponent"] = p.minimal ? Json(*p.minimal) : Json(nullptr);
  if (p.trace) j["trace"] = qbar_trace(*p.trace);
  if (p.route == PrimeCertificate::Route::extend_a) j["contract_roundtrip"] = p.contract_roundtrip;
  j["verified"] = p.verified;
  if (!p.error.empty()) j["error"] = p.error;
  return j;
}

inline Json image_certification(const ImageCertification& c) {
  Json j;
  j["ring"] = c.ring_label;
  j["ideals"] = c.ideals;
  j["certified"] = c.certified;
  j["quotient_order"] = c.quotient_order;
  j["image_order"] = c.image_order;
  Json ex = Json::array();
  for (const auto& [k, m] : c.exponents) ex.push_back(Json::array({k, m}));
  j["exponents"] = ex;
  if (!c.error.empty()) j["error"] = c.error;
  j["ok"] = c.ok();
  return j;
}

inline Json sft_theorem(const SftTheoremReport& r) {
  Json j = theorem(r.theorem);
  j["primes"] = Json::array();
  for (const auto& p : r.primes) j["primes"].push_back(prime_certificate(p));
  j["image_A"] = image_certification(r.image_a);
  j["image_fA_plus_J"] = image_certification(r.image_s);
  j["all_primes_certified"] = r.all_primes_certified();
  return j;
}

inline Json classified(const std::vector<ClassifiedIdeal>& xs) {
  Json out = Json::array();
  for (const auto& c : xs) {
    Json j;
    j["route"] = c.route == ClassifiedIdeal::Route::extend_a ? "extend_a" : "extend_b";
    j["source"] = ideal(c.source);
    j["ideal"] = ideal(c.ideal);
    out.push_back(j);
  }
  return out;
}

inline Json classification(const SpectrumClassification& s) {
  Json j;
  j["spec"] = ideals(s.direct_spec);
  j["max"] = ideals(s.direct_max);
  j["classified_spec"] = classified(s.classified_spec);
  j["classified_max"] = classified(s.classified_max);
  j["spec_missing"] = ideals(s.spec_missing);
  j["spec_unexpected"] = ideals(s.spec_unexpected);
  j["max_missing"] = ideals(s.max_missing);
  j["max_unexpected"] = ideals(s.max_unexpected);
  j["discrepancies"] = s.discrepancies();
  j["consistent"] = s.consistent();
  return j;
}

}  // namespace amalgam::report

#endif  // AMALGAM_REPORT_HPP
