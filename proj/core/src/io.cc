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

#include "fqspectra/io.h"

#include <cstdio>
#include <limits>
#include <ostream>

#include "json.hpp"

namespace fqs {
namespace {

using Json = nlohmann::ordered_json;

Json count_json(const Count& c) {
  if (c >= 0 && c <= std::numeric_limits<std::uint64_t>::max()) {
    return c.convert_to<std::uint64_t>();
  }
  return c.str();
}

Json rational_json(const Rational& r) {
  if (denominator(r) == 1) return count_json(numerator(r));
  return numerator(r).str() + "/" + denominator(r).str();
}

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

std::string dump(const Json& j, bool pretty) { return pretty ? j.dump(2) : j.dump(); }

Json regularity(const RegularityReport& r) {
  Json j;
  j["c1"] = r.c1;
  j["c2"] = r.c2;
  j["max_sum"] = r.max_sum;
  j["argmax_m"] = r.argmax_m;
  j["verdict"] = r.verdict;
  j["parseval_rel_error"] = r.parseval_rel_error;
  j["parseval_ok"] = r.parseval_ok;
  j["cross_checked"] = r.cross_checked;
  j["cross_check_rel_error"] = r.cross_check_rel_error;
  return j;
}

Json header(const ReportHeader& h) {
  Json j;
  j["kind"] = h.kind;
  j["version"] = h.version;
  j["seed"] = h.seed;
  j["plan"] = h.plan_text;
  j["regularity"] = regularity(h.regularity);
  j["hard_failures"] = h.hard_failures;
  return j;
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt_optional(const std::optional<double>& v) {
  return v ? fmt_double(*v) : std::string();
}

const char* flag(bool b) { return b ? "1" : "0"; }

}  // namespace

void write_spectrum_table(std::ostream& out, const Spectrum& s) {
  out << "m re im modulus\n";
  for (std::size_t m = 0; m < s.eigenvalues.size(); ++m) {
    const Complex z = s.eigenvalues[m];
    out << m << ' ' << fmt_double(z.real()) << ' ' << fmt_double(z.imag()) << ' '
        << fmt_double(std::abs(z)) << '\n';
  }
}

std::string spectrum_json(const Spectrum& s, bool pretty) {
  Json j;
  j["q"] = s.q;
  j["dim"] = s.dim;
  j["n"] = s.order;
  j["degree"] = s.degree;
  j["lambda"] = s.lambda;
  j["argmax_m"] = s.argmax_m;
  j["mixing_lambda"] = s.mixing_lambda;
  return dump(j, pretty);
}

std::string energy_profile_json(const EnergyProfile& profile, bool pretty) {
  Json j;
  j["size"] = profile.size;
  Json lambda = Json::object();
  for (const auto& [k, v] : profile.lambda) lambda[std::to_string(k)] = count_json(v);
  j["lambda"] = lambda;
  Json odd = Json::object();
  for (const auto& [k, v] : profile.odd_products) odd[std::to_string(k)] = count_json(v);
  j["odd_products"] = odd;
  return dump(j, pretty);
}

std::string regularity_json(const RegularityReport& r, bool pretty) {
  return dump(regularity(r), pretty);
}

std::string report_json(const CoverageReport& r, bool pretty) {
  Json j = header(r.header);
  Json records = Json::array();
  for (const auto& x : r.records) {
    Json e;
    e["k"] = x.k;
    e["size_index"] = x.size_index;
    e["trial"] = x.trial;
    e["size"] = x.size;
    e["clamped"] = x.clamped;
    Json nu = Json::array();
    for (const auto& v : x.nu) nu.push_back(count_json(v));
    e["nu"] = nu;
    e["min_nonzero_nu"] = count_json(x.min_nonzero_nu);
    e["deviation"] = optional_json(x.deviation);
    e["covers_nonzero"] = x.covers_nonzero;
    e["covers_all"] = x.covers_all;
    e["margin"] = optional_json(x.margin);
    e["audits"] = x.audits;
    e["audit_failures"] = x.audit_failures;
    e["reference_failures"] = x.reference_failures;
    e["min_gap_ratio"] = x.min_gap_ratio;
    records.push_back(e);
  }
  j["records"] = records;
  Json sums = Json::array();
  for (const auto& s : r.summaries) {
    Json e;
    e["k"] = s.k;
    e["size_index"] = s.size_index;
    e["coverage_rate"] = s.coverage_rate;
    e["mean_deviation"] = optional_json(s.mean_deviation);
    e["max_deviation"] = optional_json(s.max_deviation);
    sums.push_back(e);
  }
  j["summaries"] = sums;
  return dump(j, pretty);
}

std::string report_json(const EnergyBoundReport& r, bool pretty) {
  Json j = header(r.header);
  Json records = Json::array();
  for (const auto& x : r.records) {
    Json e;
    e["k"] = x.k;
    e["size_index"] = x.size_index;
    e["trial"] = x.trial;
    e["size"] = x.size;
    e["clamped"] = x.clamped;
    e["skipped"] = x.skipped;
    e["value"] = count_json(x.value);
    e["ratio"] = x.ratio;
    e["identity_ok"] = x.identity_ok;
    e["audited"] = x.audited;
    e["audit_holds"] = x.audit_holds;
    e["upper_gap"] = x.upper_gap;
    e["two_sided_gap"] = x.two_sided_gap;
    records.push_back(e);
  }
  j["records"] = records;
  return dump(j, pretty);
}

std::string report_json(const SumsetReport& r, bool pretty) {
  Json j = header(r.header);
  j["lambda"] = r.lambda;
  j["mixing_lambda"] = r.mixing_lambda;
  Json records = Json::array();
  for (const auto& x : r.records) {
    Json e;
    e["k"] = x.k;
    e["size_index"] = x.size_index;
    e["shift_index"] = x.shift_index;
    e["trial"] = x.trial;
    e["size"] = x.size;
    e["clamped"] = x.clamped;
    e["shift_count"] = x.shift_count;
    e["delta_size"] = x.delta_size;
    e["sumset"] = x.sumset;
    e["second_moment"] = count_json(x.second_moment);
    e["cs_bound"] = rational_json(x.cs_bound);
    e["bound_respected"] = x.bound_respected;
    e["margin"] = x.margin;
    e["reaches_cq"] = x.reaches_cq;
    e["audit_holds"] = x.audit_holds;
    e["audit_gap"] = x.audit_gap;
    records.push_back(e);
  }
  j["records"] = records;
  return dump(j, pretty);
}

void write_report_csv(std::ostream& out, const CoverageReport& r) {
  out << "k,size_index,trial,size,clamped,min_nonzero_nu,deviation,covers_nonzero,"
         "covers_all,margin,audits,audit_failures,reference_failures,min_gap_ratio\n";
  for (const auto& x : r.records) {
    out << x.k << ',' << x.size_index << ',' << x.trial << ',' << x.size << ','
        << flag(x.clamped) << ',' << x.min_nonzero_nu.str() << ','
        << fmt_optional(x.deviation) << ',' << flag(x.covers_nonzero) << ','
        << flag(x.covers_all) << ',' << fmt_optional(x.margin) << ',' << x.audits << ','
        << x.audit_failures << ',' << x.reference_failures << ','
        << fmt_double(x.min_gap_ratio) << '\n';
  }
}

void write_report_csv(std::ostream& out, const EnergyBoundReport& r) {
  out << "k,size_index,trial,size,clamped,skipped,value,ratio,identity_ok,audited,"
         "audit_holds,upper_gap,two_sided_gap\n";
  for (const auto& x : r.records) {
    out << x.k << ',' << x.size_index << ',' << x.trial << ',' << x.size << ','
        << flag(x.clamped) << ',' << flag(x.skipped) << ',' << x.value.str() << ','
        << fmt_double(x.ratio) << ',' << flag(x.identity_ok) << ',' << flag(x.audited)
        << ',' << flag(x.audit_holds) << ',' << fmt_double(x.upper_gap) << ','
        << fmt_double(x.two_sided_gap) << '\n';
  }
}

void write_report_csv(std::ostream& out, const SumsetReport& r) {
  out << "k,size_index,shift_index,trial,size,clamped,shift_count,delta_size,sumset,"
         "second_moment,cs_bound,bound_respected,margin,reaches_cq,audit_holds,audit_gap\n";
  for (const auto& x : r.records) {
    out << x.k << ',' << x.size_index << ',' << x.shift_index << ',' << x.trial << ','
        << x.size << ',' << flag(x.clamped) << ',' << x.shift_count << ','
        << x.delta_size << ',' << x.sumset << ',' << x.second_moment.str() << ','
        << x.cs_bound.str() << ',' << flag(x.bound_respected) << ','
        << fmt_double(x.margin) << ',' << flag(x.reaches_cq) << ','
        << flag(x.audit_holds) << ',' << fmt_double(x.audit_gap) << '\n';
  }
}

}  // namespace fqs
