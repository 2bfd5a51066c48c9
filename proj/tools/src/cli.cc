// Copyright 2026 The fqspectra Authors.
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

#include "fqspectra/cli.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "fqspectra/audits.h"
#include "fqspectra/energy.h"
#include "fqspectra/error.h"
#include "fqspectra/experiments.h"
#include "fqspectra/io.h"
#include "fqspectra/regularity.h"
#include "fqspectra/spectra.h"
#include "json.hpp"

namespace fqs::cli {
namespace {

using Json = nlohmann::ordered_json;

struct Options {
  int p = 0;
  int n = 1;
  int d = 2;
  std::string family = "sphere";
  Elem j = 1;
  std::string poly;
  std::string variety_file;
  std::string subset = "all";
  int k = 2;
  std::string form = "sum_squares";
  Elem t = 1;
  int s = 2;
  std::string coeffs;
  std::string shifts = "0";
  std::string distance_poly;
  std::string format;
  std::string out_path;
  bool pretty = false;
  std::uint64_t seed = 0;
  bool seed_given = false;
  int threads = 1;
  bool threads_given = false;
  double c1_lo = 0.5;
  double c1_hi = 2.0;
  double c2_max = 3.0;
  std::string method = "auto";
  std::string plan;
  std::string graph = "variety";
  std::uint64_t pairs = 1000;
};

// ---------------------------------------------------------------------------
// Inputs

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string item;
  while (std::getline(is, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::uint64_t parse_count(const std::string& flag, const std::string& text) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw Error(ErrorCode::kInvalidArgument, flag + " expects a number, got '" + text + "'");
  }
  return v;
}

Variety load_variety(const AffineSpace& space, const Options& o) {
  if (!o.variety_file.empty()) {
    std::ifstream in(o.variety_file);
    if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot open '" + o.variety_file + "'");
    return read_variety(in, space);
  }
  if (!o.poly.empty()) {
    return enumerate_variety(space, PolySpec::parse(space.field(), space.dim(), o.poly));
  }
  return builtin_variety(space, VarietyFamily::parse(o.family, o.j));
}

std::vector<PointId> select_subset(const Variety& v, const Options& o) {
  if (o.subset == "all") return v.points;
  if (o.subset.rfind("random:", 0) == 0) {
    return sample_subset(v, parse_count("--subset", o.subset.substr(7)), o.seed, 0);
  }
  throw Error(ErrorCode::kInvalidArgument, "--subset expects 'all' or 'random:N'");
}

std::vector<Elem> select_shifts(Elem q, const Options& o) {
  if (o.shifts == "all") {
    std::vector<Elem> all(q);
    for (Elem a = 0; a < q; ++a) all[a] = a;
    return all;
  }
  if (o.shifts.rfind("random:", 0) == 0) {
    return sample_shifts(q, parse_count("--X", o.shifts.substr(7)), o.seed, 0);
  }
  std::vector<Elem> out;
  for (const auto& item : split_commas(o.shifts)) {
    out.push_back(static_cast<Elem>(parse_count("--X", item)));
  }
  return out;
}

DiagonalPoly diagonal_poly(const Options& o) {
  std::vector<Elem> coeffs;
  for (const auto& item : split_commas(o.coeffs)) {
    coeffs.push_back(static_cast<Elem>(parse_count("--coeffs", item)));
  }
  if (coeffs.empty()) coeffs.assign(o.d, 1);
  if (static_cast<int>(coeffs.size()) != o.d) {
    throw Error(ErrorCode::kDimensionMismatch, "--coeffs needs exactly d entries");
  }
  return DiagonalPoly::make(std::move(coeffs), o.s);
}

SpectrumMethod method_of(const Options& o) {
  if (o.method == "direct") return SpectrumMethod::kDirect;
  if (o.method == "transform") return SpectrumMethod::kTransform;
  return SpectrumMethod::kAuto;
}

// ---------------------------------------------------------------------------
// Output

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

Json count_json(const Count& c) {
  if (c >= 0 && c <= std::numeric_limits<std::uint64_t>::max()) {
    return c.convert_to<std::uint64_t>();
  }
  return c.str();
}

Json coords_json(const AffineSpace& space, PointId x) { return space.decode(x); }

void print_human(std::ostream& os, const Json& j, const std::string& indent = "") {
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it->is_object()) {
      os << indent << it.key() << ":\n";
      print_human(os, *it, indent + "  ");
    } else if (it->is_number_float()) {
      os << indent << it.key() << " = " << fixed(it->get<double>(), 4) << '\n';
    } else if (it->is_string()) {
      os << indent << it.key() << " = " << it->get<std::string>() << '\n';
    } else {
      os << indent << it.key() << " = " << it->dump() << '\n';
    }
  }
}

void emit(std::ostream& os, const Json& j, const Options& o) {
  if (o.pretty) {
    print_human(os, j);
  } else {
    os << j.dump() << '\n';
  }
}

void check_format(const Options& o, std::initializer_list<const char*> allowed) {
  if (o.format.empty()) return;
  for (const char* a : allowed) {
    if (o.format == a) return;
  }
  std::string list;
  for (const char* a : allowed) list += std::string(list.empty() ? "" : ", ") + a;
  throw Error(ErrorCode::kInvalidArgument,
              "--format '" + o.format + "' is not one of: " + list);
}

// ---------------------------------------------------------------------------
// Commands

int variety_enum(const Options& o, std::ostream& os) {
  const AffineSpace space(FieldContext::make(o.p, o.n), o.d);
  write_variety(os, space, load_variety(space, o));
  return kExitOk;
}

int variety_check(const Options& o, std::ostream& os) {
  const AffineSpace space(FieldContext::make(o.p, o.n), o.d);
  const Variety v = load_variety(space, o);
  const RegularityReport r =
      regularity_check(space, v, {o.c1_lo, o.c1_hi, o.c2_max}, o.threads);
  const bool exact_ok = r.parseval_ok && (!r.cross_checked || r.cross_check_rel_error <= 1e-6);
  if (o.pretty) {
    os << "|V| = " << v.size() << '\n'
       << "C1 = " << fixed(r.c1, 4) << '\n'
       << "C2 = " << fixed(r.c2, 4) << '\n'
       << "max character sum = " << fixed(r.max_sum, 4) << '\n'
       << "verdict: " << (r.verdict ? "REGULAR" : "NOT REGULAR") << '\n';
  } else {
    Json j;
    j["q"] = space.q();
    j["d"] = space.dim();
    j["size"] = v.size();
    j["c1"] = r.c1;
    j["c2"] = r.c2;
    j["max_sum"] = r.max_sum;
    j["argmax_m"] = coords_json(space, r.argmax_m);
    j["verdict"] = r.verdict ? "REGULAR" : "NOT_REGULAR";
    j["parseval_rel_error"] = r.parseval_rel_error;
    j["cross_checked"] = r.cross_checked;
    j["cross_check_rel_error"] = r.cross_check_rel_error;
    os << j.dump() << '\n';
  }
  return exact_ok ? kExitOk : kExitAuditFailure;
}

Json spectrum_summary(const AffineSpace& space, const Spectrum& s) {
  Json j;
  j["n"] = s.order;
  j["degree"] = s.degree;
  j["lambda"] = s.lambda;
  j["argmax_m"] = coords_json(space, s.argmax_m);
  j["mixing_lambda"] = s.mixing_lambda;
  return j;
}

int spectrum_cayley(const Options& o, std::ostream& os) {
  check_format(o, {"json", "table"});
  const AffineSpace space(FieldContext::make(o.p, o.n), o.d);
  const auto set = select_subset(load_variety(space, o), o);
  const Spectrum s = cayley_spectrum(space, set, {method_of(o), o.threads});
  if (o.format == "table") {
    write_spectrum_table(os, s);
    return kExitOk;
  }
  Json j = spectrum_summary(space, s);
  j["c"] = s.lambda / std::pow(static_cast<double>(space.q()), (o.d - 1) / 2.0);
  emit(os, j, o);
  return kExitOk;
}

int spectrum_euclidean(const Options& o, std::ostream& os) {
  check_format(o, {"json", "table"});
  const FieldContext f = FieldContext::make(o.p, o.n);
  const AffineSpace space(f, o.d);
  const QuadraticForm q = resolve_form(f, o.d, o.form);
  const EuclideanSpectrum g = euclidean_spectrum(space, q, o.t, {method_of(o), o.threads});
  if (o.format == "table") {
    write_spectrum_table(os, g.spectrum);
  } else {
    Json j = spectrum_summary(space, g.spectrum);
    j["t"] = o.t;
    j["bound"] = g.check.bound;
    j["asserted"] = g.check.asserted;
    j["holds"] = g.check.holds;
    if (!g.check.asserted) j["note"] = "t = 0 lies outside the bound's hypothesis";
    emit(os, j, o);
  }
  return g.check.asserted && !g.check.holds ? kExitAuditFailure : kExitOk;
}

int spectrum_affine(const Options& o, std::ostream& os) {
  check_format(o, {"json", "table"});
  const FieldContext f = FieldContext::make(o.p, o.n);
  const DiagonalPoly poly = diagonal_poly(o);
  validate_affine_poly(f, poly);
  const double q = f.q();
  const double order = std::pow(q, 2 * o.d + 1);
  const double bound = std::pow(q, o.d);
  double lambda = 0;
  Json j;
  if (order <= static_cast<double>(kMaxSpectrumOrder)) {
    const AffineSpectrum a = affine_cayley_spectrum(f, poly, {method_of(o), o.threads});
    if (o.format == "table") {
      write_spectrum_table(os, a.spectrum);
      return a.check.holds ? kExitOk : kExitAuditFailure;
    }
    j = spectrum_summary(affine_graph_space(f, poly), a.spectrum);
    lambda = a.spectrum.lambda;
  } else {
    if (o.format == "table") {
      throw Error(ErrorCode::kSearchSpaceTooLarge, "q^{2d+1} exceeds 10^7; no table");
    }
    lambda = affine_lambda(f, poly);
    j["n"] = static_cast<std::uint64_t>(order);
    j["degree"] = static_cast<std::uint64_t>(std::pow(q, 2 * o.d));
    j["lambda"] = lambda;
    j["mixing_lambda"] = affine_mixing_lambda(f, poly);
  }
  const bool holds = lambda <= bound + kBoundSlack;
  j["poly"] = poly.to_poly().to_string();
  j["bound"] = bound;
  j["holds"] = holds;
  emit(os, j, o);
  return holds ? kExitOk : kExitAuditFailure;
}

int energy_lambda(const Options& o, std::ostream& os) {
  check_format(o, {"json", "text"});
  const AffineSpace space(FieldContext::make(o.p, o.n), o.d);
  const auto set = select_subset(load_variety(space, o), o);
  if (o.k % 2 != 0) {
    throw Error(ErrorCode::kOddK, "Lambda_k needs an even k; odd k uses Lambda_{k-1} Lambda_{k+1}");
  }
  if (o.format == "json") {
    os << energy_profile_json(energy_profile(space, set, o.k), o.pretty) << '\n';
  } else {
    os << lambda_k(space, set, o.k).str() << '\n';
  }
  return kExitOk;
}

void emit_table(std::ostream& os, const CountTable& t, const Options& o, Json meta) {
  if (o.format == "json") {
    Json values = Json::array();
    for (std::uint64_t i = 0; i < t.size(); ++i) values.push_back(count_json(t.at(i)));
    meta["counts"] = values;
    meta["total"] = count_json(t.total());
    os << (o.pretty ? meta.dump(2) : meta.dump()) << '\n';
  } else {
    write_count_table_csv(os, t);
  }
}

int energy_nu(const Options& o, std::ostream& os) {
  check_format(o, {"csv", "json"});
  const FieldContext f = FieldContext::make(o.p, o.n);
  const AffineSpace space(f, o.d);
  const auto set = select_subset(load_variety(space, o), o);
  const CountTable nu = nu_k(space, set, resolve_form(f, o.d, o.form), o.k);
  emit_table(os, nu, o, Json{{"k", o.k}, {"size", set.size()}});
  return kExitOk;
}

int energy_nup(const Options& o, std::ostream& os) {
  check_format(o, {"csv", "json"});
  const FieldContext f = FieldContext::make(o.p, o.n);
  const AffineSpace space(f, o.d);
  const auto set = select_subset(load_variety(space, o), o);
  const auto shifts = select_shifts(f.q(), o);
  const CountTable nu = nu_P_k(space, set, shifts, diagonal_poly(o), o.k);
  emit_table(os, nu, o,
             Json{{"k", o.k}, {"size", set.size()}, {"shifts", shifts.size()},
                  {"second_moment", count_json(nu.square_sum())}});
  return kExitOk;
}

int energy_delta(const Options& o, std::ostream& os) {
  check_format(o, {"json"});
  const FieldContext f = FieldContext::make(o.p, o.n);
  const AffineSpace space(f, o.d);
  const auto set = select_subset(load_variety(space, o), o);
  const PolySpec distance = o.distance_poly.empty()
                                ? resolve_form(f, o.d, o.form).to_poly(f)
                                : PolySpec::parse(f, o.d, o.distance_poly);
  const DeltaSet delta = delta_set(space, set, distance, o.k);
  Json j;
  j["k"] = o.k;
  j["size"] = set.size();
  j["values"] = delta.values;
  j["count"] = delta.values.size();
  j["covers_nonzero"] = delta.covers_nonzero;
  j["covers_all"] = delta.covers_all;
  emit(os, j, o);
  return kExitOk;
}

template <class Report>
int emit_report(const Report& r, const Options& o, std::ostream& os) {
  if (o.format == "csv") {
    write_report_csv(os, r);
  } else {
    os << report_json(r, o.pretty) << '\n';
  }
  return r.header.hard_failures == 0 ? kExitOk : kExitAuditFailure;
}

int experiment(const Options& o, const std::string& kind, std::ostream& os) {
  check_format(o, {"json", "csv"});
  ExperimentPlan plan = ExperimentPlan::parse_file(o.plan);
  if (o.seed_given) plan.seed = o.seed;
  if (o.threads_given) plan.threads = o.threads;
  if (kind == "coverage") return emit_report(coverage_experiment(plan), o, os);
  if (kind == "energy") return emit_report(energy_bound_experiment(plan), o, os);
  return emit_report(sumset_experiment(plan), o, os);
}

int audit_mixing(const Options& o, std::ostream& os) {
  check_format(o, {"json"});
  const FieldContext f = FieldContext::make(o.p, o.n);
  std::optional<AffineSpace> space;
  std::vector<PointId> set;
  Spectrum spectrum;
  if (o.graph == "variety") {
    space.emplace(f, o.d);
    set = select_subset(load_variety(*space, o), o);
    spectrum = cayley_spectrum(*space, set, {method_of(o), o.threads});
  } else if (o.graph == "euclidean") {
    space.emplace(f, o.d);
    const QuadraticForm q = resolve_form(f, o.d, o.form);
    set = euclidean_connection_set(*space, q, o.t);
    spectrum = euclidean_spectrum(*space, q, o.t, {method_of(o), o.threads}).spectrum;
  } else if (o.graph == "affine") {
    const DiagonalPoly poly = diagonal_poly(o);
    space.emplace(affine_graph_space(f, poly));
    set = affine_connection_set(*space, poly);
    spectrum = affine_cayley_spectrum(f, poly, {method_of(o), o.threads}).spectrum;
  } else {
    throw Error(ErrorCode::kInvalidArgument, "--graph expects variety, euclidean or affine");
  }
  const ConnectionSet graph(*space, set);
  const MixingSweep sweep = random_mixing_sweep(spectrum, graph, o.pairs, o.seed);
  Json j;
  j["graph"] = o.graph;
  j["n"] = spectrum.order;
  j["degree"] = spectrum.degree;
  j["lambda"] = spectrum.lambda;
  j["mixing_lambda"] = spectrum.mixing_lambda;
  j["pairs"] = sweep.pairs;
  j["violations"] = sweep.violations;
  j["min_gap_ratio"] = sweep.min_gap_ratio;
  emit(os, j, o);
  return sweep.violations == 0 ? kExitOk : kExitAuditFailure;
}

// ---------------------------------------------------------------------------
// Grammar

void add_field(CLI::App* app, Options& o) {
  app->add_option("--p", o.p, "odd prime characteristic")->required();
  app->add_option("--n", o.n, "extension degree (1..4)")->capture_default_str();
  app->add_option("--threads", o.threads, "worker threads")->capture_default_str();
}

void add_space(CLI::App* app, Options& o) {
  add_field(app, o);
  app->add_option("--d", o.d, "dimension")->capture_default_str();
}

void add_variety(CLI::App* app, Options& o) {
  add_space(app, o);
  auto* fam = app->add_option("--family", o.family, "sphere | paraboloid | minkowski")
                  ->capture_default_str();
  app->add_option("--j", o.j, "sphere / Minkowski parameter (nonzero)")->capture_default_str();
  auto* poly = app->add_option("--poly", o.poly, "defining polynomial, e.g. \"x1^2 + x2^2 - 1\"");
  auto* file = app->add_option("--variety-file", o.variety_file, "point list from `variety enum`");
  poly->excludes(file);
  fam->excludes(poly)->excludes(file);
}

void add_subset(CLI::App* app, Options& o) {
  app->add_option("--subset", o.subset, "all | random:N")->capture_default_str();
  app->add_option("--seed", o.seed, "seed for random subsets")->capture_default_str();
}

void add_output(CLI::App* app, Options& o, const std::string& formats) {
  app->add_option("--format", o.format, formats);
  app->add_option("--out", o.out_path, "write results to this file");
  app->add_flag("--pretty", o.pretty, "human-readable output");
}

void add_method(CLI::App* app, Options& o) {
  app->add_option("--method", o.method, "auto | direct | transform")
      ->check(CLI::IsMember({"auto", "direct", "transform"}))
      ->capture_default_str();
}

void add_diagonal(CLI::App* app, Options& o) {
  app->add_option("--s", o.s, "exponent of the diagonal polynomial")->capture_default_str();
  app->add_option("--coeffs", o.coeffs, "comma-separated a_1..a_d (default all 1)");
}

void add_thresholds(CLI::App* app, Options& o) {
  app->add_option("--c1-lo", o.c1_lo, "lower bound on |V| / q^{d-1}")->capture_default_str();
  app->add_option("--c1-hi", o.c1_hi, "upper bound on |V| / q^{d-1}")->capture_default_str();
  app->add_option("--c2-max", o.c2_max, "bound on max character sum / q^{(d-1)/2}")->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact spectral and counting checks over finite fields", "fqspectra"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  std::function<int(std::ostream&)> action;
  std::vector<const CLI::Option*> seed_options;
  std::vector<const CLI::Option*> thread_options;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help,
                  std::function<int(std::ostream&)> fn) {
    CLI::App* sub = parent->add_subcommand(name, help);
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };

  CLI::App* variety = app.add_subcommand("variety", "enumerate or certify varieties");
  variety->require_subcommand(1);
  {
    auto* s = leaf(variety, "enum", "list the points of a variety",
                   [&](std::ostream& os) { return variety_enum(o, os); });
    add_variety(s, o);
    add_output(s, o, "text");
    s = leaf(variety, "check", "measure C1, C2 and the regularity verdict",
             [&](std::ostream& os) { return variety_check(o, os); });
    add_variety(s, o);
    add_thresholds(s, o);
    add_output(s, o, "json");
  }

  CLI::App* spectrum = app.add_subcommand("spectrum", "Cayley graph spectra");
  spectrum->require_subcommand(1);
  {
    auto* s = leaf(spectrum, "cayley", "spectrum of the Cayley graph of a variety or subset",
                   [&](std::ostream& os) { return spectrum_cayley(o, os); });
    add_variety(s, o);
    add_subset(s, o);
    add_method(s, o);
    add_output(s, o, "json | table");
    s = leaf(spectrum, "euclidean", "finite Euclidean graph Q(y - x) = t",
             [&](std::ostream& os) { return spectrum_euclidean(o, os); });
    add_space(s, o);
    s->add_option("--form", o.form, "sum_squares | diag:a,b,.. | matrix:..")->capture_default_str();
    s->add_option("--t", o.t, "distance value")->capture_default_str();
    add_method(s, o);
    add_output(s, o, "json | table");
    s = leaf(spectrum, "affine", "graph y0 - x0 + P(y'-x') - P(y''-x'') = 0",
             [&](std::ostream& os) { return spectrum_affine(o, os); });
    add_space(s, o);
    add_diagonal(s, o);
    add_method(s, o);
    add_output(s, o, "json | table");
  }

  CLI::App* energy = app.add_subcommand("energy", "exact energies and distance counts");
  energy->require_subcommand(1);
  {
    auto add_common = [&](CLI::App* s) {
      add_variety(s, o);
      add_subset(s, o);
      s->add_option("--k", o.k, "number of summands")->capture_default_str();
    };
    auto* s = leaf(energy, "lambda", "k-energy of a subset (even k)",
                   [&](std::ostream& os) { return energy_lambda(o, os); });
    add_common(s);
    add_output(s, o, "text | json");
    s = leaf(energy, "nu", "nu_k(t) = #{Q(x^1 + .. + x^k) = t}",
             [&](std::ostream& os) { return energy_nu(o, os); });
    add_common(s);
    s->add_option("--form", o.form, "sum_squares | diag:.. | matrix:..")->capture_default_str();
    add_output(s, o, "csv | json");
    s = leaf(energy, "nup", "nu_{P,k}(t) with shifts X",
             [&](std::ostream& os) { return energy_nup(o, os); });
    add_common(s);
    add_diagonal(s, o);
    s->add_option("--X", o.shifts, "all | random:N | comma list")->capture_default_str();
    add_output(s, o, "csv | json");
    s = leaf(energy, "delta", "distance set {F(x^1 + .. + x^k)}",
             [&](std::ostream& os) { return energy_delta(o, os); });
    add_common(s);
    s->add_option("--form", o.form, "quadratic form used as F")->capture_default_str();
    s->add_option("--distance-poly", o.distance_poly, "general F instead of a form");
    add_output(s, o, "json");
  }

  CLI::App* experiment_cmd = app.add_subcommand("experiment", "seeded parameter sweeps");
  experiment_cmd->require_subcommand(1);
  for (const char* kind : {"coverage", "energy", "sumset"}) {
    const std::string k = kind;
    auto* s = leaf(experiment_cmd, k, k + " experiment from a plan file",
                   [&, k](std::ostream& os) { return experiment(o, k, os); });
    s->add_option("--plan", o.plan, "plan file (key = value lines)")->required();
    seed_options.push_back(s->add_option("--seed", o.seed, "overrides the plan seed"));
    thread_options.push_back(
        s->add_option("--threads", o.threads, "overrides the plan thread count"));
    add_output(s, o, "json | csv");
  }

  CLI::App* audit = app.add_subcommand("audit", "inequality audits");
  audit->require_subcommand(1);
  {
    auto* s = leaf(audit, "mixing", "mixing inequality over random multiset pairs",
                   [&](std::ostream& os) { return audit_mixing(o, os); });
    add_variety(s, o);
    add_subset(s, o);
    s->add_option("--graph", o.graph, "variety | euclidean | affine")->capture_default_str();
    s->add_option("--form", o.form, "form for the Euclidean graph")->capture_default_str();
    s->add_option("--t", o.t, "distance for the Euclidean graph")->capture_default_str();
    add_diagonal(s, o);
    s->add_option("--pairs", o.pairs, "number of random pairs")->capture_default_str();
    add_method(s, o);
    add_output(s, o, "json");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    CLI::App* target = &app;
    for (CLI::App* sub = target; sub != nullptr;) {
      target = sub;
      auto subs = sub->get_subcommands();
      sub = subs.empty() ? nullptr : subs.front();
    }
    out << target->help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  for (const CLI::Option* opt : seed_options) o.seed_given = o.seed_given || opt->count() > 0;
  for (const CLI::Option* opt : thread_options) {
    o.threads_given = o.threads_given || opt->count() > 0;
  }

  try {
    if (!o.out_path.empty()) {
      std::ofstream file(o.out_path);
      if (!file) throw Error(ErrorCode::kInvalidArgument, "cannot write '" + o.out_path + "'");
      const int code = action(file);
      file.flush();
      if (!file) throw Error(ErrorCode::kInvalidArgument, "write to '" + o.out_path + "' failed");
      return code;
    }
    return action(out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace fqs::cli
