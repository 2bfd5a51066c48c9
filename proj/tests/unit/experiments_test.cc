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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fqspectra/energy.h"
#include "fqspectra/error.h"
#include "fqspectra/io.h"

namespace fqs {
namespace {

ExperimentPlan plan_from(const std::string& text) {
  std::istringstream in(text);
  return ExperimentPlan::parse(in);
}

TEST(Plan, ParsesAndRoundTrips) {
  const ExperimentPlan plan = plan_from(
      "# comment\n"
      "p = 5\n"
      "d = 3\n"
      "variety = sphere\n"
      "j = 2\n"
      "k = 2, 3\n"
      "sizes = 0.5x, 1x, 40\n"
      "x_sizes = 1, all\n"
      "trials = 4\n"
      "seed = 42  # trailing comment\n");
  EXPECT_EQ(plan.p, 5);
  EXPECT_EQ(plan.family.j, 2u);
  EXPECT_EQ(plan.ks, (std::vector<int>{2, 3}));
  ASSERT_EQ(plan.sizes.size(), 3u);
  EXPECT_TRUE(plan.sizes[0].relative);
  EXPECT_FALSE(plan.sizes[2].relative);
  EXPECT_TRUE(plan.shift_sizes[1].all);
  const ExperimentPlan again = plan_from(plan.to_text());
  EXPECT_EQ(again.to_text(), plan.to_text());
}

TEST(Plan, RejectsUnknownKeysAndBadValues) {
  EXPECT_THROW(plan_from("colour = red\n"), Error);
  EXPECT_THROW(plan_from("trials = 0\n"), Error);
  EXPECT_THROW(plan_from("p = five\n"), Error);
  EXPECT_THROW(plan_from("sizes = -3\n"), Error);
}

TEST(Plan, CriticalSize) {
  EXPECT_NEAR(critical_size(7, 3, 3), std::pow(7.0, 1.5), 1e-9);
  EXPECT_NEAR(critical_size(5, 2, 2), std::pow(5.0, 1.5), 1e-9);
}

TEST(SampleSubset, ContractExamples) {
  const AffineSpace space(FieldContext::make(5, 1), 3);
  const Variety v = builtin_variety(space, VarietyFamily::parse("sphere", 1));
  EXPECT_EQ(sample_subset(v, v.size(), 7, 0), v.points);
  EXPECT_TRUE(sample_subset(v, 0, 7, 0).empty());
  EXPECT_EQ(sample_subset(v, 10, 42, 0), sample_subset(v, 10, 42, 0));
  EXPECT_NE(sample_subset(v, 10, 42, 0), sample_subset(v, 10, 42, 1));
  EXPECT_THROW(sample_subset(v, v.size() + 1, 0, 0), Error);
  const auto s = sample_subset(v, 12, 1, 3);
  EXPECT_TRUE(std::is_sorted(s.begin(), s.end()));
  EXPECT_TRUE(std::includes(v.points.begin(), v.points.end(), s.begin(), s.end()));
}

TEST(SampleSubset, SamplesAreNestedAndDistanceSetsGrow) {
  const auto f = FieldContext::make(7, 1);
  const AffineSpace space(f, 2);
  const Variety v = builtin_variety(space, VarietyFamily::parse("sphere", 1));
  const PolySpec q = QuadraticForm::sum_of_squares(f, 2).to_poly(f);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<Elem> previous;
    std::vector<PointId> smaller;
    for (std::uint64_t size = 0; size <= v.size(); size += 2) {
      const auto e = sample_subset(v, size, 3, trial);
      EXPECT_TRUE(std::includes(e.begin(), e.end(), smaller.begin(), smaller.end()));
      const auto delta = delta_set(space, e, q, 2).values;
      EXPECT_TRUE(std::includes(delta.begin(), delta.end(), previous.begin(), previous.end()));
      previous = delta;
      smaller = e;
    }
  }
}

TEST(SampleShifts, DeterministicDistinct) {
  const auto x = sample_shifts(11, 5, 9, 2);
  EXPECT_EQ(x, sample_shifts(11, 5, 9, 2));
  EXPECT_EQ(x.size(), 5u);
  EXPECT_TRUE(std::adjacent_find(x.begin(), x.end()) == x.end());
  EXPECT_EQ(sample_shifts(11, 11, 0, 0).size(), 11u);
  EXPECT_THROW(sample_shifts(11, 12, 0, 0), Error);
}

TEST(CoverageExperiment, WholeSphereOverF3) {
  ExperimentPlan plan = plan_from("p = 3\nd = 2\nk = 2\nsizes = 4, 0\ntrials = 2\n");
  const CoverageReport r = coverage_experiment(plan);
  ASSERT_EQ(r.records.size(), 4u);
  const CoverageRecord& full = r.records[0];
  EXPECT_EQ(full.size, 4u);
  EXPECT_EQ(full.nu, (std::vector<Count>{4, 4, 8}));
  EXPECT_EQ(full.min_nonzero_nu, 4);
  EXPECT_TRUE(full.covers_nonzero);
  EXPECT_TRUE(full.covers_all);
  EXPECT_EQ(full.audit_failures, 0u);
  EXPECT_EQ(full.audits, 2u);
  const CoverageRecord& empty = r.records[2];
  EXPECT_EQ(empty.size, 0u);
  EXPECT_FALSE(empty.covers_nonzero);
  EXPECT_FALSE(empty.deviation.has_value());
  EXPECT_EQ(r.summaries.size(), 2u);
  EXPECT_EQ(r.summaries[0].coverage_rate, 1.0);
  EXPECT_EQ(r.summaries[1].coverage_rate, 0.0);
  EXPECT_EQ(r.header.hard_failures, 0u);
}

TEST(CoverageExperiment, OutputIndependentOfThreadCount) {
  ExperimentPlan plan = plan_from("p = 5\nd = 3\nk = 2, 3\nsizes = 0.5x, 1x\ntrials = 3\n");
  plan.threads = 1;
  const std::string one = report_json(coverage_experiment(plan));
  plan.threads = 3;
  EXPECT_EQ(report_json(coverage_experiment(plan)), one);
}

TEST(CoverageExperiment, AbsoluteSizeBeyondVarietyFails) {
  ExperimentPlan plan = plan_from("p = 3\nd = 2\nk = 2\nsizes = 5\ntrials = 1\n");
  try {
    coverage_experiment(plan);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSizeExceedsVariety);
  }
  plan.sizes = {SizeSpec::parse("100x")};
  const CoverageReport r = coverage_experiment(plan);
  EXPECT_TRUE(r.records[0].clamped);
  EXPECT_EQ(r.records[0].size, 4u);
}

TEST(EnergyExperiment, SphereOverF3) {
  ExperimentPlan plan = plan_from("p = 3\nd = 2\nk = 2, 4\nsizes = 4, 1\ntrials = 1\n");
  const EnergyBoundReport r = energy_bound_experiment(plan);
  ASSERT_EQ(r.records.size(), 4u);
  EXPECT_EQ(r.records[0].value, 4);
  EXPECT_TRUE(r.records[0].identity_ok);
  EXPECT_TRUE(r.records[1].skipped);  // 1 <= sqrt(3)
  EXPECT_EQ(r.records[2].value, 36);
  EXPECT_NEAR(r.records[2].ratio, 36.0 / (12.0 + 64.0 / 3.0), 1e-9);
  EXPECT_TRUE(r.records[2].audited);
  EXPECT_TRUE(r.records[2].audit_holds);
  EXPECT_EQ(r.header.hard_failures, 0u);
}

TEST(SumsetExperiment, SphereOverF3WithZeroShift) {
  ExperimentPlan plan =
      plan_from("p = 3\nd = 2\nk = 2\nsizes = 4, 0\nx_sizes = 1, all\ntrials = 1\n");
  const SumsetReport r = sumset_experiment(plan);
  EXPECT_NEAR(r.lambda, 9.0, 1e-9);
  ASSERT_EQ(r.records.size(), 4u);
  const SumsetRecord& a = r.records[0];
  EXPECT_EQ(a.shift_count, 1u);
  EXPECT_EQ(a.delta_size, 3u);
  EXPECT_EQ(a.sumset, 3u);
  EXPECT_TRUE(a.bound_respected);
  EXPECT_TRUE(a.reaches_cq);
  EXPECT_TRUE(a.audit_holds);
  const SumsetRecord& all = r.records[1];
  EXPECT_EQ(all.shift_count, 3u);
  EXPECT_EQ(all.sumset, 3u);
  EXPECT_EQ(r.records[2].sumset, 0u);
  EXPECT_EQ(r.header.hard_failures, 0u);
}

TEST(Reports, CsvHasOneRowPerRecord) {
  ExperimentPlan plan = plan_from("p = 3\nd = 2\nk = 2\nsizes = 4\ntrials = 3\n");
  std::ostringstream out;
  write_report_csv(out, coverage_experiment(plan));
  const std::string text = out.str();
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 4);
}

}  // namespace
}  // namespace fqs
