// Copyright 2026 The tetra Authors
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

#pragma once

// JSON and CSV serialization. Every floating value goes through round12(),
// so reports are byte-stable across runs and thread counts.

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "tetra/basis.hpp"
#include "tetra/entanglement.hpp"
#include "tetra/geometry.hpp"
#include "tetra/hierarchy.hpp"
#include "tetra/search.hpp"

namespace tetra {

using Json = nlohmann::ordered_json;

/// x rounded to 12 significant digits.
inline double round12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  double v = std::stod(buf);
  return v == 0.0 ? 0.0 : v;
}

inline std::string format12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", round12(x));
  return buf;
}

inline Json to_json(Complex c) { return Json::array({round12(c.real()), round12(c.imag())}); }

inline Json to_json(const StateVector& v) {
  Json a = Json::array();
  for (const auto& c : v.amps()) a.push_back(to_json(c));
  return a;
}

inline Json to_json(const BlochVector& v) { return Json::array({round12(v.x), round12(v.y), round12(v.z)}); }

inline Json optional_number(const std::optional<double>& x) { return x ? Json(round12(*x)) : Json(nullptr); }

inline Json to_json(const Basis& b) {
  Json j;
  j["n"] = b.n;
  j["polynomial"] = b.polynomial ? Json(b.polynomial->to_string()) : Json(nullptr);
  if (b.polynomial) j["m"] = b.polynomial->precision();
  j["fiducial"] = to_json(b.fiducial);
  Json cols = Json::array();
  for (const auto& c : b.columns) cols.push_back(to_json(c));
  j["columns"] = cols;
  Json acts = Json::array();
  for (const auto& a : b.actions) acts.push_back(a.to_string());
  j["actions"] = acts;
  return j;
}

inline Json to_json(const OrthonormalityReport& r) {
  Json j;
  j["ok"] = r.ok;
  j["max_violation"] = round12(r.max_violation);
  return j;
}

inline Json to_json(const GeometryReport& g) {
  Json j;
  Json cls = Json::array();
  for (auto c : g.classes) cls.push_back(to_string(c));
  j["class"] = cls;
  j["r"] = optional_number(g.r);
  Json lines = Json::array();
  for (const auto& per : g.lines) {
    Json q = Json::array();
    for (const auto& v : per) q.push_back(to_json(v));
    lines.push_back(q);
  }
  j["lines"] = lines;
  j["chirality"] = g.chirality;
  j["nonzero_components"] = g.nonzero_components;
  return j;
}

inline Json to_json(const InvariantFingerprint& f) {
  Json j;
  j["tangle"] = optional_number(f.tangle);
  Json c2 = Json::array();
  for (double x : f.concurrence_sq) c2.push_back(round12(x));
  j["concurrence_sq"] = c2;
  j["r"] = optional_number(f.r);
  j["chirality"] = f.chirality;
  j["stab_order"] = f.stab_order;
  j["conjugate_flag"] = f.conjugate_flag ? Json(*f.conjugate_flag) : Json(nullptr);
  return j;
}

inline Json to_json(const LevelResult& r) {
  Json j;
  j["level"] = r.level ? Json(*r.level) : Json("exceeds_cap");
  j["cap"] = r.cap;
  j["mode"] = to_string(r.mode);
  return j;
}

inline Json to_json(const Theorem1Report& r) {
  Json j;
  j["diagonal_level"] = r.diagonal_level;
  j["bound"] = r.bound;
  j["measurement_level"] = to_json(r.measurement_level);
  j["ok"] = r.ok;
  j["strict"] = r.strict;
  return j;
}

inline Json to_json(const LcWitness& w) {
  Json j;
  j["cliffords"] = w.cliffords;
  j["conjugated"] = w.conjugated;
  j["column"] = w.column;
  j["phase"] = to_json(w.phase);
  return j;
}

inline Json to_json(const SearchHit& h) {
  Json j;
  j["poly"] = h.polynomial.to_string();
  j["level"] = h.level;
  j["geometry"] = to_json(h.geometry);
  j["fingerprint"] = to_json(h.fingerprint);
  return j;
}

inline Json to_json(const ClassRecord& c) {
  Json j;
  j["key"] = c.key;
  j["representative"] = c.representative().to_string();
  j["fingerprint"] = to_json(c.fingerprint);
  Json members = Json::array();
  for (const auto& m : c.members) members.push_back(m.to_string());
  j["members"] = members;
  j["stab_orders"] = std::vector<int>(c.stab_orders.begin(), c.stab_orders.end());
  j["chirality_patterns"] = std::vector<std::vector<int>>(c.chirality_patterns.begin(), c.chirality_patterns.end());
  j["conjugate_partner"] = c.conjugate_partner ? Json(*c.conjugate_partner) : Json(nullptr);
  Json links = Json::array();
  for (const auto& l : c.witness_links) {
    Json lj = to_json(l.witness);
    lj["member"] = l.member;
    links.push_back(lj);
  }
  j["witness_links"] = links;
  j["conjugate_witness"] = c.conjugate_witness ? to_json(*c.conjugate_witness) : Json(nullptr);
  return j;
}

inline Json to_json(const Classification& c) {
  Json j;
  j["class_count"] = c.classes.size();
  j["merged_count"] = c.merged_count;
  Json cls = Json::array();
  for (const auto& r : c.classes) cls.push_back(to_json(r));
  j["classes"] = cls;
  return j;
}

// ---------------------------------------------------------------------------
// CSV

inline constexpr const char* kCsvHeader = "poly,level,r,tangle,c2_1,c2_2,c2_3,stab,chirality,conjugate_key";

/// Pair signs in pair order, ';'-separated, e.g. "+1;-1;-1"; 0 prints as "0".
inline std::string chirality_text(const std::vector<int>& signs) {
  std::string out;
  for (std::size_t i = 0; i < signs.size(); ++i) {
    if (i) out += ';';
    out += signs[i] > 0 ? "+1" : signs[i] < 0 ? "-1" : "0";
  }
  return out;
}

/// One row per hit. c2_1..c2_3 hold the three smallest C^2 values (empty
/// when there are fewer pairs); the conjugate key is the canonical text of
/// -f, whose fiducial is the complex conjugate.
inline std::string csv_row(const SearchHit& h) {
  std::string row = h.polynomial.to_string() + "," + std::to_string(h.level) + ",";
  row += (h.fingerprint.r ? format12(*h.fingerprint.r) : std::string()) + ",";
  row += (h.fingerprint.tangle ? format12(*h.fingerprint.tangle) : std::string()) + ",";
  for (std::size_t i = 0; i < 3; ++i)
    row += (i < h.fingerprint.concurrence_sq.size() ? format12(h.fingerprint.concurrence_sq[i]) : std::string()) + ",";
  row += std::to_string(h.fingerprint.stab_order) + ",";
  row += chirality_text(h.geometry.chirality_pairs()) + ",";
  row += h.polynomial.negated().to_string();
  return row;
}

inline void write_csv(std::ostream& os, const std::vector<SearchHit>& hits) {
  os << kCsvHeader << '\n';
  for (const auto& h : hits) os << csv_row(h) << '\n';
}

}  // namespace tetra
