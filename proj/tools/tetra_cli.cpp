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

// Command-line front end. Exit codes: 0 success, 1 check failure, 2 usage.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "tetra/tetra.hpp"

namespace {

using namespace tetra;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct Options {
  std::size_t n = 2;
  int m = 2;
  std::string poly;
  std::string target;
  std::vector<std::string> filters;
  std::string mode = "full";
  int cap = 6;
  std::string format = "text";
  unsigned jobs = 1;
  std::optional<std::uint64_t> sample;
  std::uint64_t seed = 1;
  bool allow_conjugation = false;
  bool long_running = false;
  std::string suite = "all";
  Tolerances tol;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

PhasePolynomial require_poly(const Options& o, const std::string& text) {
  if (text.empty()) throw UsageError("--poly is required");
  return parse_polynomial(text, o.n, o.m);
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

std::string vec_text(const BlochVector& v) {
  return "(" + format12(v.x) + ", " + format12(v.y) + ", " + format12(v.z) + ")";
}

std::string complex_text(Complex c) { return format12(c.real()) + (c.imag() < 0 ? " - " : " + ") + format12(std::abs(c.imag())) + "i"; }

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (o.format == f) return;
  throw UsageError("format '" + o.format + "' is not supported by this command");
}

int cmd_build(const Options& o) {
  require_format(o, {"json", "text"});
  const Basis b = basis_from_polynomial(require_poly(o, o.poly));
  if (o.format == "json") {
    emit(to_json(b));
  } else {
    std::cout << "polynomial: " << b.polynomial->to_string() << "\nfiducial:\n";
    for (std::size_t i = 0; i < b.fiducial.dim(); ++i) std::cout << "  " << i << ": " << complex_text(b.fiducial[i]) << '\n';
    for (std::size_t g = 0; g < b.columns.size(); ++g) std::cout << "column " << g << " = " << b.actions[g].to_string() << " |psi>\n";
  }
  return kOk;
}

int cmd_verify(const Options& o) {
  require_format(o, {"json", "text"});
  const Basis b = basis_from_polynomial(require_poly(o, o.poly));
  const auto ortho = check_orthonormal(b, o.tol.norm);
  const auto geo = classify_basis(b, o.tol.geo);
  const bool ok = ortho.ok && geo.all_regular();
  if (o.format == "json") {
    Json j;
    j["orthonormality"] = to_json(ortho);
    j["regular"] = geo.all_regular();
    j["r"] = optional_number(geo.r);
    j["pass"] = ok;
    emit(j);
  } else {
    std::cout << "orthonormal: " << (ortho.ok ? "yes" : "no") << " (max violation " << format12(ortho.max_violation)
              << ")\nregular tetrahedral: " << (geo.all_regular() ? "yes" : "no") << '\n';
    if (geo.r) std::cout << "r: " << format12(*geo.r) << '\n';
    std::cout << (ok ? "PASS" : "FAIL") << '\n';
  }
  return ok ? kOk : kCheckFailed;
}

int cmd_geometry(const Options& o) {
  require_format(o, {"json", "text"});
  const Basis b = basis_from_polynomial(require_poly(o, o.poly));
  const auto geo = classify_basis(b, o.tol.geo);
  if (o.format == "json") {
    emit(to_json(geo));
    return kOk;
  }
  for (std::size_t q = 0; q < b.n; ++q) {
    std::cout << "qubit " << q + 1 << ": " << to_string(geo.classes[q]) << ", fiducial Bloch vector "
              << vec_text(bloch_vector(b.fiducial, q + 1)) << '\n';
  }
  if (geo.r) std::cout << "r: " << format12(*geo.r) << '\n';
  for (std::size_t k = 0; k < b.n; ++k)
    for (std::size_t l = k + 1; l < b.n; ++l)
      std::cout << "chirality (" << k + 1 << "," << l + 1 << "): " << geo.chirality[k][l] << '\n';
  return kOk;
}

int cmd_invariants(const Options& o) {
  require_format(o, {"json", "text"});
  const Basis b = basis_from_polynomial(require_poly(o, o.poly));
  const auto fp = invariant_fingerprint(b, o.tol);
  if (o.format == "json") {
    Json j = to_json(fp);
    j["pairwise_concurrence_sq"] = Json::array();
    for (double c : pairwise_concurrence_sq(b.fiducial, o.tol)) j["pairwise_concurrence_sq"].push_back(round12(c));
    j["key"] = class_key(fp);
    emit(j);
    return kOk;
  }
  if (fp.tangle) std::cout << "three-tangle: " << format12(*fp.tangle) << '\n';
  std::size_t i = 0;
  const auto c2 = pairwise_concurrence_sq(b.fiducial, o.tol);
  for (std::size_t k = 1; k <= b.n; ++k)
    for (std::size_t l = k + 1; l <= b.n; ++l) std::cout << "C^2(" << k << "," << l << "): " << format12(c2[i++]) << '\n';
  if (fp.r) std::cout << "r: " << format12(*fp.r) << '\n';
  std::cout << "permutation stabilizer order: " << fp.stab_order << '\n';
  return kOk;
}

int cmd_level(const Options& o) {
  require_format(o, {"json", "text"});
  if (o.mode != "generator" && o.mode != "full") throw UsageError("--mode must be generator or full");
  LevelOptions lo;
  lo.cap = o.cap;
  lo.mode = o.mode == "full" ? LevelMode::full : LevelMode::generator;
  lo.jobs = o.jobs;
  const auto rep = verify_theorem1(require_poly(o, o.poly), lo);
  if (o.format == "json") {
    emit(to_json(rep));
  } else {
    std::cout << rep.measurement_level.to_string() << '\n'
              << "mode: " << to_string(rep.measurement_level.mode) << ", cap: " << rep.measurement_level.cap << '\n'
              << "formula level of D_f: " << rep.diagonal_level << " (bound " << rep.bound << ")\n"
              << "within bound: " << (rep.ok ? "yes" : "no") << (rep.strict ? " (strictly below)" : "") << '\n';
  }
  return rep.ok ? kOk : kCheckFailed;
}

SearchConfig search_config(const Options& o) {
  SearchConfig cfg;
  cfg.n = o.n;
  cfg.m = o.m;
  cfg.jobs = o.jobs;
  cfg.sample = o.sample;
  cfg.seed = o.seed;
  cfg.level_cap = o.cap;
  cfg.tol = o.tol;
  cfg.require_regular = false;
  for (const auto& f : o.filters) {
    if (f == "regular") cfg.require_regular = true;
    else if (f == "nonzero") cfg.require_nonzero_components = true;
    else throw UsageError("unknown filter '" + f + "'");
  }
  if (o.filters.empty()) cfg.require_regular = true;
  if (!o.poly.empty()) {
    std::stringstream ss(o.poly);
    std::string item;
    while (std::getline(ss, item, ';')) cfg.polynomials.push_back(parse_polynomial(item, o.n, o.m));
  }
  return cfg;
}

int cmd_search(const Options& o) {
  require_format(o, {"json", "csv", "text"});
  const auto res = search_regular(search_config(o));
  if (o.format == "csv") {
    write_csv(std::cout, res.hits);
  } else if (o.format == "json") {
    Json j;
    j["candidates"] = res.candidates;
    j["non_orthonormal"] = res.non_orthonormal;
    Json hits = Json::array();
    for (const auto& h : res.hits) hits.push_back(to_json(h));
    j["hits"] = hits;
    emit(j);
  } else {
    std::cout << res.candidates << " candidates, " << res.hits.size() << " hits\n";
    for (const auto& h : res.hits) std::cout << "  " << h.polynomial.to_string() << "  level " << h.level << '\n';
  }
  return res.non_orthonormal ? kCheckFailed : kOk;
}

int cmd_classify(const Options& o) {
  require_format(o, {"json", "text"});
  const auto res = search_regular(search_config(o));
  const auto cls = group_into_classes(res.hits, o.tol.geo);
  if (o.format == "json") {
    emit(to_json(cls));
  } else {
    std::cout << cls.classes.size() << " classes, " << cls.merged_count << " after conjugate pairing\n";
    for (std::size_t c = 0; c < cls.classes.size(); ++c) {
      const auto& rec = cls.classes[c];
      std::cout << "class " << c << ": " << rec.representative().to_string() << "  [" << rec.key << "]  "
                << rec.members.size() << " members";
      if (rec.conjugate_partner) std::cout << ", conjugate of class " << *rec.conjugate_partner;
      std::cout << '\n';
    }
  }
  return res.non_orthonormal ? kCheckFailed : kOk;
}

int cmd_witness(const Options& o) {
  require_format(o, {"json", "text"});
  const auto f1 = require_poly(o, o.poly);
  if (o.target.empty()) throw UsageError("--target is required");
  const Basis b2 = basis_from_polynomial(parse_polynomial(o.target, o.n, o.m));
  const StateVector psi = build_fiducial(f1);
  const auto w = lc_equivalence_witness(psi, b2, o.allow_conjugation, o.tol.geo);
  if (o.format == "json") {
    Json j;
    j["witness"] = w ? to_json(*w) : Json(nullptr);
    if (w) j["residual"] = round12(witness_residual(psi, b2, *w));
    emit(j);
  } else if (w) {
    std::cout << "witness: cliffords";
    for (auto c : w->cliffords) std::cout << ' ' << c;
    std::cout << ", conjugated " << (w->conjugated ? "yes" : "no") << ", column " << w->column << ", residual "
              << format12(witness_residual(psi, b2, *w)) << '\n';
  } else {
    std::cout << "no witness\n";
  }
  return w ? kOk : kCheckFailed;
}

int cmd_reproduce(const Options& o) {
  require_format(o, {"json", "text"});
  ReproduceOptions ro;
  ro.long_running = o.long_running;
  ro.jobs = o.jobs;
  ro.tol = o.tol;
  std::vector<std::string> names;
  if (o.suite == "all") names = suite_names();
  else names.push_back(o.suite);
  const auto& known = suite_names();
  for (const auto& n : names)
    if (std::find(known.begin(), known.end(), n) == known.end()) throw UsageError("unknown suite '" + n + "'");
  bool all_pass = true;
  Json out = Json::array();
  for (const auto& n : names) {
    const auto s = reproduce_suite(n, ro);
    all_pass = all_pass && s.pass();
    if (o.format == "json") {
      out.push_back(to_json(s));
      continue;
    }
    std::cout << "[" << s.name << "] " << (s.pass() ? "PASS" : "FAIL") << '\n';
    for (const auto& c : s.checks)
      std::cout << "  " << (c.pass ? "ok  " : "FAIL") << "  " << c.description << "  expected " << c.expected
                << ", got " << c.actual << '\n';
  }
  if (o.format == "json") emit(out);
  return all_pass ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tetrahedral measurement bases from phase polynomials"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "key=value configuration file; command-line flags take precedence");

  Options o;
  app.add_option("--n", o.n, "number of qubits")->check(CLI::Range(2, static_cast<int>(kMaxQubits)));
  app.add_option("--m", o.m, "phase precision (phases are 2^m-th roots of unity)")->check(CLI::Range(1, 16));
  app.add_option("--poly", o.poly, "phase polynomial, e.g. \"z1 z2 + 2 z1 z2 z3\" (';'-separated list for search)");
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1u, 256u));
  app.add_option("--eps-norm", o.tol.norm, "orthonormality tolerance")->check(CLI::PositiveNumber);
  app.add_option("--eps-unitary", o.tol.unitary, "unitarity tolerance")->check(CLI::PositiveNumber);
  app.add_option("--eps-psd", o.tol.psd, "positive-semidefinite cutoff")->check(CLI::PositiveNumber);
  app.add_option("--eps-geo", o.tol.geo, "geometry tolerance")->check(CLI::PositiveNumber);

  auto* build = app.add_subcommand("build", "fiducial and orbit basis of a polynomial");
  auto* verify = app.add_subcommand("verify", "check orthonormality and regular geometry");
  auto* geometry = app.add_subcommand("geometry", "per-qubit Bloch geometry and chirality");
  auto* invariants = app.add_subcommand("invariants", "tangle, concurrences, stabilizer order");
  auto* level = app.add_subcommand("level", "Clifford level of the measurement unitary");
  level->add_option("--mode", o.mode, "Pauli set used by the recursion")->check(CLI::IsMember({"generator", "full"}));
  level->add_option("--cap", o.cap, "highest level tested")->check(CLI::Range(1, 6));
  auto* search = app.add_subcommand("search", "enumerate polynomials with tetrahedral bases");
  auto* classify = app.add_subcommand("classify", "search and group hits into equivalence classes");
  for (auto* sub : {search, classify}) {
    sub->add_option("--filter", o.filters, "regular and/or nonzero (default regular)")
        ->check(CLI::IsMember({"regular", "nonzero"}))
        ->delimiter(',');
    sub->add_option("--cap", o.cap, "drop polynomials whose formula level exceeds this")->check(CLI::Range(1, 64));
    sub->add_option("--sample", o.sample, "random subset size");
    sub->add_option("--seed", o.seed, "sampling seed");
  }
  auto* witness = app.add_subcommand("witness", "local Clifford equivalence witness");
  witness->add_option("--target", o.target, "polynomial whose basis is the target")->required();
  witness->add_flag("--allow-conjugation", o.allow_conjugation, "also try the complex conjugate");
  auto* reproduce = app.add_subcommand("reproduce", "run a reproduction suite");
  reproduce->add_option("suite", o.suite, "table1, appA, appB, appC, appD, conjecture or all")
      ->check(CLI::IsMember({"all", "table1", "appA", "appB", "appC", "appD", "conjecture"}));
  reproduce->add_flag("--long", o.long_running, "include the recursive level-5 check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Error& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*build) return cmd_build(o);
    if (*verify) return cmd_verify(o);
    if (*geometry) return cmd_geometry(o);
    if (*invariants) return cmd_invariants(o);
    if (*level) return cmd_level(o);
    if (*search) return cmd_search(o);
    if (*classify) return cmd_classify(o);
    if (*witness) return cmd_witness(o);
    if (*reproduce) return cmd_reproduce(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n' << app.help();
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ArgumentError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const CapacityError& e) {
    std::cerr << "error: " << e.what() << " (use --sample)\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
  return kUsage;
}
