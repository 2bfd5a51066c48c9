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

#ifndef FQSPECTRA_EXPERIMENTS_H_
#define FQSPECTRA_EXPERIMENTS_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fqspectra/count.h"
#include "fqspectra/geometry.h"
#include "fqspectra/regularity.h"

namespace fqs {

inline constexpr const char* kVersion = "0.1.0";

// A subset size: either absolute, or a multiple of the critical size
// q^{(d-1)/2 + 1/(k-1)} (written "2x" in plan files).
struct SizeSpec {
  double value = 0;
  bool relative = false;

  static SizeSpec parse(const std::string& text);
  std::string to_string() const;
};

// |X| for sumset runs: absolute, or all of F_q.
struct ShiftSpec {
  std::uint64_t value = 1;
  bool all = false;

  static ShiftSpec parse(const std::string& text);
  std::string to_string() const;
};

struct ExperimentPlan {
  int p = 3;
  int n = 1;
  int d = 2;
  VarietyFamily family;
  std::vector<int> ks = {3};
  // "sum_squares", "diag:a1,..,ad" or "matrix:a11,a12,..,add" (row major).
  std::string form = "sum_squares";
  int poly_s = 2;
  std::vector<Elem> poly_coeffs;  // empty means all ones
  std::vector<SizeSpec> sizes = {{0.5, true}, {1, true}, {2, true}, {4, true}};
  std::vector<ShiftSpec> shift_sizes = {{1, false}};
  int trials = 20;
  std::uint64_t seed = 0;
  double sumset_c = 0.5;
  int threads = 1;

  // Key-value text, one "key = value" per line, '#' starts a comment.
  static ExperimentPlan parse(std::istream& in);
  static ExperimentPlan parse_file(const std::string& path);
  std::string to_text() const;
};

QuadraticForm resolve_form(const FieldContext& f, int d, const std::string& spec);
DiagonalPoly resolve_poly(const ExperimentPlan& plan);

// q^{(d-1)/2 + 1/(k-1)}
double critical_size(Elem q, int d, int k);

// Uniform size-subset of V's point list from a seeded Fisher-Yates shuffle of
// the whole list; for fixed (seed, trial) smaller sizes are prefixes, so the
// samples are nested. Result is sorted.
std::vector<PointId> sample_subset(const Variety& v, std::uint64_t size,
                                   std::uint64_t seed, std::uint64_t trial);
std::vector<Elem> sample_shifts(Elem q, std::uint64_t size, std::uint64_t seed,
                                std::uint64_t trial);

struct ReportHeader {
  std::string kind;
  std::string plan_text;
  std::uint64_t seed = 0;
  std::string version = kVersion;
  RegularityReport regularity;
  std::uint64_t hard_failures = 0;  // exact inequalities violated
};

struct CoverageRecord {
  int k = 0;
  std::size_t size_index = 0;
  int trial = 0;
  std::uint64_t size = 0;
  bool clamped = false;
  std::vector<Count> nu;  // nu_k(t) for t in F_q
  Count min_nonzero_nu;
  std::optional<double> deviation;  // max_{t != 0} |nu(t) q / |E|^k - 1|
  bool covers_nonzero = false;
  bool covers_all = false;
  std::optional<double> margin;  // hypothesis margin, see below
  std::uint64_t audits = 0;
  std::uint64_t audit_failures = 0;
  std::uint64_t reference_failures = 0;
  double min_gap_ratio = 0;  // min over t of gap / bound
};

struct CoverageSummary {
  int k = 0;
  std::size_t size_index = 0;
  double coverage_rate = 0;
  std::optional<double> mean_deviation;
  std::optional<double> max_deviation;
};

struct CoverageReport {
  ReportHeader header;
  std::vector<CoverageRecord> records;  // ordered by (k, size index, trial)
  std::vector<CoverageSummary> summaries;
};

struct EnergyRecord {
  int k = 0;
  std::size_t size_index = 0;
  int trial = 0;
  std::uint64_t size = 0;
  bool clamped = false;
  bool skipped = false;  // |E| <= q^{(d-1)/2}
  Count value;           // Lambda_k (even) or Lambda_{k-1} Lambda_{k+1} (odd)
  double ratio = 0;
  bool identity_ok = true;  // Lambda_2 == |E|
  bool audited = false;     // variety-graph energy audit ran (even k >= 4)
  bool audit_holds = true;
  double upper_gap = 0;
  double two_sided_gap = 0;
};

struct EnergyBoundReport {
  ReportHeader header;
  std::vector<EnergyRecord> records;
};

struct SumsetRecord {
  int k = 0;
  std::size_t size_index = 0;
  std::size_t shift_index = 0;
  int trial = 0;
  std::uint64_t size = 0;
  bool clamped = false;
  std::uint64_t shift_count = 0;
  std::uint64_t delta_size = 0;
  std::uint64_t sumset = 0;
  Count second_moment;
  Rational cs_bound;
  bool bound_respected = true;  // sumset >= cs_bound, exact
  double margin = 0;            // |X||E|^{2k-2} / q^{(d-1)(k-1)+2}
  bool reaches_cq = false;
  bool audit_holds = true;
  double audit_gap = 0;
};

struct SumsetReport {
  ReportHeader header;
  double lambda = 0;         // measured lambda(C_{P'})
  double mixing_lambda = 0;  // max over all nontrivial characters, used by the audit
  std::vector<SumsetRecord> records;
};

CoverageReport coverage_experiment(const ExperimentPlan& plan);
EnergyBoundReport energy_bound_experiment(const ExperimentPlan& plan);
SumsetReport sumset_experiment(const ExperimentPlan& plan);

}  // namespace fqs

#endif  // FQSPECTRA_EXPERIMENTS_H_
