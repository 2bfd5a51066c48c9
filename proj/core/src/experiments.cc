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

#include "fqspectra/experiments.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fqspectra/audits.h"
#include "fqspectra/energy.h"
#include "fqspectra/error.h"
#include "fqspectra/parallel.h"
#include "fqspectra/rng.h"
#include "fqspectra/spectra.h"

namespace fqs {
namespace {

constexpr std::uint64_t kSubsetStream = 0x7375627365747321ULL;
constexpr std::uint64_t kShiftStream = 0x7368696674732121ULL;

std::vector<std::uint64_t> shuffled_indices(std::uint64_t n, std::uint64_t seed,
                                            std::uint64_t trial,
                                            std::uint64_t stream) {
  std::vector<std::uint64_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::uint64_t{0});
  Rng rng(derive_seed(seed, {stream, trial}));
  for (std::uint64_t i = n; i > 1; --i) {
    const std::uint64_t j = rng.uniform(i);
    std::swap(idx[i - 1], idx[j]);
  }
  return idx;
}

struct Setup {
  FieldContext field;
  AffineSpace space;
  Variety variety;
  RegularityReport regularity;
};

Setup make_setup(const ExperimentPlan& plan) {
  FieldContext f = FieldContext::make(plan.p, plan.n);
  AffineSpace space(f, plan.d);
  Variety v = builtin_variety(space, plan.family);
  RegularityReport reg = regularity_check(space, v, {}, plan.threads);
  return {std::move(f), std::move(space), std::move(v), reg};
}

ReportHeader make_header(const std::string& kind, const ExperimentPlan& plan,
                         const RegularityReport& reg) {
  ReportHeader h;
  h.kind = kind;
  h.plan_text = plan.to_text();
  h.seed = plan.seed;
  h.regularity = reg;
  return h;
}

struct ResolvedSize {
  std::uint64_t size = 0;
  bool clamped = false;
};

ResolvedSize resolve_size(const SizeSpec& spec, Elem q, int d, int k,
                          std::uint64_t available) {
  ResolvedSize r;
  if (spec.relative) {
    const double target = std::round(spec.value * critical_size(q, d, k));
    r.size = static_cast<std::uint64_t>(target);
    if (r.size > available) {
      r.size = available;
      r.clamped = true;
    }
  } else {
    r.size = static_cast<std::uint64_t>(spec.value);
    if (r.size > available) {
      throw Error(ErrorCode::kSizeExceedsVariety,
                  "requested |E| = " + std::to_string(r.size) + " but |V| = " +
                      std::to_string(available));
    }
  }
  return r;
}

long double to_ld(const Count& c) { return to_long_double(c); }

}  // namespace

std::vector<PointId> sample_subset(const Variety& v, std::uint64_t size,
                                   std::uint64_t seed, std::uint64_t trial) {
  if (size > v.points.size()) {
    throw Error(ErrorCode::kSizeExceedsVariety,
                "subset size " + std::to_string(size) + " exceeds |V| = " +
                    std::to_string(v.points.size()));
  }
  const auto order = shuffled_indices(v.points.size(), seed, trial, kSubsetStream);
  std::vector<PointId> out;
  out.reserve(size);
  for (std::uint64_t i = 0; i < size; ++i) out.push_back(v.points[order[i]]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Elem> sample_shifts(Elem q, std::uint64_t size, std::uint64_t seed,
                                std::uint64_t trial) {
  if (size > q) throw Error(ErrorCode::kInvalidArgument, "|X| exceeds q");
  const auto order = shuffled_indices(q, seed, trial, kShiftStream);
  std::vector<Elem> out;
  for (std::uint64_t i = 0; i < size; ++i) out.push_back(static_cast<Elem>(order[i]));
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------

CoverageReport coverage_experiment(const ExperimentPlan& plan) {
  const Setup s = make_setup(plan);
  const FieldContext& f = s.field;
  const Elem q = f.q();
  const int d = plan.d;
  const QuadraticForm form = resolve_form(f, d, plan.form);

  std::vector<EuclideanSpectrum> graphs;
  for (Elem t = 1; t < q; ++t) {
    graphs.push_back(euclidean_spectrum(s.space, form, t, {.threads = plan.threads}));
  }

  CoverageReport report;
  report.header = make_header("coverage", plan, s.regularity);
  const std::size_t per_k = plan.sizes.size() * plan.trials;
  report.records.resize(plan.ks.size() * per_k);

  parallel_for(report.records.size(), plan.threads, [&](std::uint64_t b, std::uint64_t e) {
    for (std::uint64_t job = b; job < e; ++job) {
      const int k = plan.ks[job / per_k];
      const std::size_t si = (job % per_k) / plan.trials;
      const int trial = static_cast<int>(job % plan.trials);
      CoverageRecord& r = report.records[job];
      r.k = k;
      r.size_index = si;
      r.trial = trial;
      const ResolvedSize rs = resolve_size(plan.sizes[si], q, d, k, s.variety.size());
      r.size = rs.size;
      r.clamped = rs.clamped;
      const auto set = sample_subset(s.variety, r.size, plan.seed, trial);

      const CountTable nu = nu_from_fold(s.space, fold_counts(s.space, set, k), form);
      r.nu.reserve(q);
      for (Elem t = 0; t < q; ++t) r.nu.push_back(nu.at(t));
      const DeltaSet cover = support_set(nu);
      r.covers_nonzero = cover.covers_nonzero;
      r.covers_all = cover.covers_all;
      r.min_nonzero_nu = *std::min_element(r.nu.begin() + 1, r.nu.end());
      if (r.size == 0) continue;

      const Count mass = power(Count(r.size), k);
      const long double mass_ld = to_ld(mass);
      long double worst = 0;
      for (Elem t = 1; t < q; ++t) {
        const Count diff = r.nu[t] * q - mass;
        worst = std::max(worst, to_ld(abs(diff)) / mass_ld);
      }
      r.deviation = static_cast<double>(worst);

      const EnergyProfile profile = energy_profile(s.space, set, k);
      const long double lead = std::pow(static_cast<long double>(q), (d + 1) / 2.0L);
      const long double norm = k % 2 == 0
                                   ? to_ld(profile.lambda.at(k))
                                   : std::sqrt(to_ld(profile.odd_products.at(k)));
      r.margin = static_cast<double>(lead * norm / mass_ld);

      r.min_gap_ratio = 1.0;
      for (Elem t = 1; t < q; ++t) {
        const CountAudit a = audit_nu_deviation(r.nu[t], graphs[t - 1], r.size, k, profile);
        ++r.audits;
        if (!a.holds()) ++r.audit_failures;
        if (!a.reference_holds) ++r.reference_failures;
        if (a.mixing.bound > 0) {
          r.min_gap_ratio = std::min(r.min_gap_ratio,
                                     static_cast<double>(a.mixing.gap / a.mixing.bound));
        }
      }
    }
  });

  for (const auto& r : report.records) report.header.hard_failures += r.audit_failures;
  for (std::size_t ki = 0; ki < plan.ks.size(); ++ki) {
    for (std::size_t si = 0; si < plan.sizes.size(); ++si) {
      CoverageSummary sum;
      sum.k = plan.ks[ki];
      sum.size_index = si;
      int covered = 0;
      int measured = 0;
      double total = 0;
      double worst = 0;
      for (int trial = 0; trial < plan.trials; ++trial) {
        const auto& r = report.records[ki * per_k + si * plan.trials + trial];
        covered += r.covers_nonzero ? 1 : 0;
        if (r.deviation) {
          ++measured;
          total += *r.deviation;
          worst = std::max(worst, *r.deviation);
        }
      }
      sum.coverage_rate = static_cast<double>(covered) / plan.trials;
      if (measured > 0) {
        sum.mean_deviation = total / measured;
        sum.max_deviation = worst;
      }
      report.summaries.push_back(sum);
    }
  }
  return report;
}

// ---------------------------------------------------------------------------

EnergyBoundReport energy_bound_experiment(const ExperimentPlan& plan) {
  const Setup s = make_setup(plan);
  const Elem q = s.field.q();
  const int d = plan.d;
  const ConnectionSet variety_graph(s.space, s.variety.points);
  const Spectrum variety_spectrum =
      cayley_spectrum(s.space, s.variety.points, {.threads = plan.threads});
  const double floor_size = std::pow(static_cast<double>(q), (d - 1) / 2.0);

  EnergyBoundReport report;
  report.header = make_header("energy", plan, s.regularity);
  const std::size_t per_k = plan.sizes.size() * plan.trials;
  report.records.resize(plan.ks.size() * per_k);

  parallel_for(report.records.size(), plan.threads, [&](std::uint64_t b, std::uint64_t e) {
    for (std::uint64_t job = b; job < e; ++job) {
      const int k = plan.ks[job / per_k];
      const std::size_t si = (job % per_k) / plan.trials;
      const int trial = static_cast<int>(job % plan.trials);
      EnergyRecord& r = report.records[job];
      r.k = k;
      r.size_index = si;
      r.trial = trial;
      const ResolvedSize rs =
          resolve_size(plan.sizes[si], q, d, std::max(k, 2), s.variety.size());
      r.size = rs.size;
      r.clamped = rs.clamped;
      if (static_cast<double>(r.size) <= floor_size) {
        r.skipped = true;
        continue;
      }
      const auto set = sample_subset(s.variety, r.size, plan.seed, trial);
      const EnergyProfile profile = energy_profile(s.space, set, k);
      if (k % 2 == 0) {
        r.value = profile.lambda.at(k);
        r.ratio = energy_bound_ratio(q, d, k, r.size, r.value);
      } else {
        r.value = k == 1 ? profile.lambda.at(2) : profile.odd_products.at(k);
        r.ratio = k == 1 ? 0.0 : energy_product_ratio(q, d, k, r.size, r.value);
      }
      if (profile.lambda.count(2)) r.identity_ok = profile.lambda.at(2) == r.size;

      std::vector<int> audited;
      if (k % 2 == 0 && k >= 4) audited.push_back(k);
      if (k % 2 == 1) {
        if (k - 1 >= 4) audited.push_back(k - 1);
        if (k + 1 >= 4) audited.push_back(k + 1);
      }
      r.upper_gap = 0;
      r.two_sided_gap = 0;
      bool first = true;
      for (int kk : audited) {
        const EnergyAudit a = audit_energy_mixing(variety_graph, variety_spectrum, set, kk);
        r.audited = true;
        r.audit_holds = r.audit_holds && a.holds();
        const double ug = static_cast<double>(a.upper_gap);
        const double tg = static_cast<double>(a.two_sided_gap);
        r.upper_gap = first ? ug : std::min(r.upper_gap, ug);
        r.two_sided_gap = first ? tg : std::min(r.two_sided_gap, tg);
        first = false;
      }
    }
  });

  for (const auto& r : report.records) {
    if (!r.identity_ok || !r.audit_holds) ++report.header.hard_failures;
  }
  return report;
}

// ---------------------------------------------------------------------------

SumsetReport sumset_experiment(const ExperimentPlan& plan) {
  const Setup s = make_setup(plan);
  const FieldContext& f = s.field;
  const Elem q = f.q();
  const int d = plan.d;
  const DiagonalPoly poly = resolve_poly(plan);
  validate_affine_poly(f, poly);
  const PolySpec poly_spec = poly.to_poly();

  SumsetReport report;
  report.header = make_header("sumset", plan, s.regularity);
  report.lambda = affine_lambda(f, poly);
  report.mixing_lambda = affine_mixing_lambda(f, poly);
  const std::size_t per_size = plan.shift_sizes.size() * plan.trials;
  const std::size_t per_k = plan.sizes.size() * per_size;
  report.records.resize(plan.ks.size() * per_k);

  parallel_for(report.records.size(), plan.threads, [&](std::uint64_t b, std::uint64_t e) {
    for (std::uint64_t job = b; job < e; ++job) {
      const int k = plan.ks[job / per_k];
      const std::size_t si = (job % per_k) / per_size;
      const std::size_t xi = (job % per_size) / plan.trials;
      const int trial = static_cast<int>(job % plan.trials);
      SumsetRecord& r = report.records[job];
      r.k = k;
      r.size_index = si;
      r.shift_index = xi;
      r.trial = trial;
      const ResolvedSize rs =
          resolve_size(plan.sizes[si], q, d, std::max(k, 2), s.variety.size());
      r.size = rs.size;
      r.clamped = rs.clamped;
      const ShiftSpec& xs = plan.shift_sizes[xi];
      r.shift_count = xs.all ? q : xs.value;
      const auto set = sample_subset(s.variety, r.size, plan.seed, trial);
      const auto shifts = sample_shifts(q, r.shift_count, plan.seed, trial);

      const CountTable fold = fold_counts(s.space, set, k);
      const CountTable nu = nu_P_from_fold(s.space, fold, shifts, poly);
      const DeltaSet delta = delta_from_fold(s.space, fold, poly_spec);
      r.delta_size = delta.values.size();
      r.sumset = sumset_size(f, shifts, delta.values);
      r.second_moment = second_moment(nu, r.shift_count, r.size, k);
      r.cs_bound = sumset_lower_bound(r.shift_count, r.size, k, r.second_moment);
      r.bound_respected = Rational(r.sumset) >= r.cs_bound;
      r.margin = static_cast<double>(
          static_cast<long double>(r.shift_count) *
          std::pow(static_cast<long double>(r.size), 2 * k - 2) /
          std::pow(static_cast<long double>(q), (d - 1) * (k - 1) + 2));
      r.reaches_cq = static_cast<double>(r.sumset) >= plan.sumset_c * q;
      if (r.size == 0) continue;
      const EnergyProfile profile = energy_profile(s.space, set, k);
      const CountAudit a = audit_second_moment(f, d, r.second_moment, r.shift_count, r.size,
                                               k, profile, report.mixing_lambda);
      r.audit_holds = a.holds();
      r.audit_gap = a.mixing.bound > 0
                        ? static_cast<double>(a.mixing.gap / a.mixing.bound)
                        : static_cast<double>(a.mixing.gap);
    }
  });

  for (const auto& r : report.records) {
    if (!r.bound_respected || !r.audit_holds) ++report.header.hard_failures;
  }
  return report;
}

}  // namespace fqs
