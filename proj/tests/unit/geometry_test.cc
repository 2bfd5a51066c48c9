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

#include "fqspectra/geometry.h"

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "fqspectra/error.h"
#include "fqspectra/regularity.h"
#include "oracles.h"

namespace fqs {
namespace {

std::vector<std::vector<Elem>> coords_of(const AffineSpace& space, const Variety& v) {
  std::vector<std::vector<Elem>> out;
  for (PointId x : v.points) out.push_back(space.decode(x));
  return out;
}

template <class F>
ErrorCode code_of(F&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an error";
  return ErrorCode::kInvalidArgument;
}

TEST(AffineSpace, EncodingIsLexicographic) {
  const AffineSpace space(FieldContext::make(3, 1), 2);
  EXPECT_EQ(space.size(), 9u);
  const std::vector<Elem> c = {1, 2};
  EXPECT_EQ(space.encode(c), 5u);
  EXPECT_EQ(space.decode(5), c);
  EXPECT_EQ(space.add(5, 5), space.encode(std::vector<Elem>{2, 1}));
  EXPECT_EQ(space.neg(5), space.encode(std::vector<Elem>{2, 1}));
}

TEST(AffineSpace, GroupLawMatchesCoordinates) {
  const auto f = FieldContext::make(3, 2);
  const AffineSpace space(f, 2);
  const oracle::NaiveField naive(3, 2);
  for (PointId a = 0; a < space.size(); a += 7) {
    for (PointId b = 0; b < space.size(); b += 5) {
      ASSERT_EQ(space.add(a, b), oracle::add_points(naive, a, b, 2));
      ASSERT_EQ(space.sub(a, b), oracle::sub_points(naive, a, b, 2));
    }
  }
}

TEST(EvalPoly, Examples) {
  const auto f3 = FieldContext::make(3, 1);
  const auto f5 = FieldContext::make(5, 1);
  EXPECT_EQ(eval_poly(f3, PolySpec::parse(f3, 2, "x1^2 + x2^2"), std::vector<Elem>{1, 1}), 2u);
  EXPECT_EQ(eval_poly(f3, PolySpec::parse(f3, 2, "x1*x2 - 1"), std::vector<Elem>{2, 2}), 0u);
  EXPECT_EQ(eval_poly(f5, PolySpec::sphere(f5, 2, 1), std::vector<Elem>{2, 1}), 4u);
  EXPECT_EQ(code_of([&] {
              eval_poly(f3, PolySpec::sphere(f3, 2, 1), std::vector<Elem>{1});
            }),
            ErrorCode::kDimensionMismatch);
}

TEST(PolySpec, ParseMergesLikeTermsAndRoundTrips) {
  const auto f = FieldContext::make(5, 1);
  const PolySpec a = PolySpec::parse(f, 3, "x1^2 + 2*x2^2 + 3*x1^2 - x3 + 4");
  const PolySpec b = PolySpec::parse(f, 3, a.to_string());
  EXPECT_EQ(a.to_string(), b.to_string());
  EXPECT_EQ(a.total_degree(), 2);
  EXPECT_EQ(a.terms().size(), 4u);
  for (Elem x = 0; x < 5; ++x) {
    const std::vector<Elem> pt = {x, (x + 1) % 5, (x + 3) % 5};
    EXPECT_EQ(eval_poly(f, a, pt), (4 * x * x + 2 * pt[1] * pt[1] + 4 * pt[2] + 4) % 5);
  }
  EXPECT_EQ(code_of([&] { PolySpec::parse(f, 2, "x3^2"); }), ErrorCode::kParseError);
}

TEST(EnumerateVariety, WorkedExamplesOverF3) {
  const auto f = FieldContext::make(3, 1);
  const AffineSpace space(f, 2);
  using Pts = std::vector<std::vector<Elem>>;

  const Variety sphere = builtin_variety(space, VarietyFamily::parse("sphere", 1));
  EXPECT_EQ(coords_of(space, sphere), (Pts{{0, 1}, {0, 2}, {1, 0}, {2, 0}}));
  EXPECT_EQ(sphere.size(), 4u);

  const Variety para = builtin_variety(space, VarietyFamily::parse("paraboloid", 0));
  EXPECT_EQ(coords_of(space, para), (Pts{{0, 0}, {1, 1}, {2, 1}}));

  const Variety mink = builtin_variety(space, VarietyFamily::parse("minkowski", 1));
  EXPECT_EQ(coords_of(space, mink), (Pts{{1, 1}, {2, 2}}));
}

TEST(EnumerateVariety, FamilyPreconditions) {
  const AffineSpace space(FieldContext::make(3, 1), 2);
  EXPECT_EQ(code_of([&] { builtin_variety(space, VarietyFamily::parse("sphere", 0)); }),
            ErrorCode::kZeroParameter);
  EXPECT_EQ(code_of([&] { builtin_variety(space, VarietyFamily::parse("minkowski", 0)); }),
            ErrorCode::kZeroParameter);
  EXPECT_EQ(code_of([&] { VarietyFamily::parse("torus", 1); }), ErrorCode::kInvalidArgument);
  const AffineSpace line(FieldContext::make(3, 1), 1);
  EXPECT_EQ(code_of([&] { builtin_variety(line, VarietyFamily::parse("sphere", 1)); }),
            ErrorCode::kInvalidArgument);
}

TEST(EnumerateVariety, ParaboloidOverF5IsAFunctionGraph) {
  const AffineSpace space(FieldContext::make(5, 1), 2);
  const Variety v = builtin_variety(space, VarietyFamily::parse("paraboloid", 0));
  ASSERT_EQ(v.size(), 5u);
  for (PointId x : v.points) {
    const auto c = space.decode(x);
    EXPECT_EQ(c[1], c[0] * c[0] % 5);
  }
}

TEST(EnumerateVariety, FamilySizesOverPrimeFields) {
  for (int p : {3, 5, 7, 11, 13}) {
    const auto f = FieldContext::make(p, 1);
    for (int d : {2, 3}) {
      const AffineSpace space(f, d);
      const double base = std::pow(p, d - 1);
      const Variety para = builtin_variety(space, VarietyFamily::parse("paraboloid", 0));
      EXPECT_EQ(para.size(), static_cast<std::size_t>(base));
      for (Elem j = 1; j < static_cast<Elem>(p); ++j) {
        const Variety s = builtin_variety(space, VarietyFamily::parse("sphere", j));
        EXPECT_LE(std::abs(static_cast<double>(s.size()) - base),
                  2 * std::pow(p, (d - 1) / 2.0))
            << "p=" << p << " d=" << d << " j=" << j;
      }
    }
  }
}

TEST(EnumerateVariety, MatchesBruteForceAndIsStable) {
  const auto f = FieldContext::make(3, 2);
  const AffineSpace space(f, 2);
  const PolySpec spec = PolySpec::parse(f, 2, "x1^2 + 3*x2^2 + 1");
  const Variety v = enumerate_variety(space, spec);
  std::vector<PointId> expect;
  for (PointId x = 0; x < space.size(); ++x) {
    if (eval_poly(f, spec, space.decode(x)) == 0) expect.push_back(x);
  }
  EXPECT_EQ(v.points, expect);
  EXPECT_EQ(enumerate_variety(space, spec).points, v.points);
}

TEST(EnumerateVariety, RefusesHugeSearchSpaces) {
  const auto f = FieldContext::make(101, 1);
  EXPECT_EQ(code_of([&] {
              const AffineSpace space(f, 4);
              enumerate_variety(space, PolySpec::sphere(f, 4, 1));
            }),
            ErrorCode::kSearchSpaceTooLarge);
}

TEST(QuadraticForm, DegenerateAndSymmetric) {
  const auto f = FieldContext::make(3, 1);
  EXPECT_EQ(code_of([&] { QuadraticForm::make(f, 2, {1, 1, 1, 1}); }),
            ErrorCode::kDegenerateForm);
  EXPECT_EQ(code_of([&] { QuadraticForm::make(f, 2, {1, 1, 0, 1}); }),
            ErrorCode::kInvalidArgument);
  const QuadraticForm q = QuadraticForm::make(f, 2, {0, 1, 1, 0});  // 2 x y
  EXPECT_EQ(q.eval(f, std::vector<Elem>{1, 1}), 2u);
  EXPECT_EQ(eval_poly(f, q.to_poly(f), std::vector<Elem>{2, 1}), 1u);
  EXPECT_EQ(determinant(f, 2, {0, 1, 1, 0}), 2u);
}

TEST(DiagonalPoly, RecognisesDiagonalShapes) {
  const auto f = FieldContext::make(5, 1);
  const DiagonalPoly p = DiagonalPoly::from_poly(PolySpec::parse(f, 2, "2*x1^3 + x2^3"));
  EXPECT_EQ(p.exponent(), 3);
  EXPECT_EQ(p.coeffs()[0], 2u);
  EXPECT_EQ(p.eval(f, std::vector<Elem>{1, 2}), (2 + 8) % 5u);
  EXPECT_EQ(code_of([&] { DiagonalPoly::from_poly(PolySpec::parse(f, 2, "x1^2 + x2^3")); }),
            ErrorCode::kNotDiagonal);
  EXPECT_EQ(code_of([&] { DiagonalPoly::from_poly(PolySpec::parse(f, 2, "x1*x2")); }),
            ErrorCode::kNotDiagonal);
  EXPECT_EQ(code_of([&] { DiagonalPoly::make({1, 0}, 2); }), ErrorCode::kNotDiagonal);
}

TEST(VarietyIo, RoundTrip) {
  const AffineSpace space(FieldContext::make(5, 1), 3);
  const Variety v = builtin_variety(space, VarietyFamily::parse("sphere", 2));
  std::stringstream buf;
  write_variety(buf, space, v);
  std::string header;
  std::getline(std::istringstream(buf.str()), header);
  EXPECT_EQ(header, "5 3 " + std::to_string(v.size()));
  const Variety back = read_variety(buf, space);
  EXPECT_EQ(back.points, v.points);
  std::istringstream wrong("7 3 0\n");
  EXPECT_EQ(code_of([&] { read_variety(wrong, space); }), ErrorCode::kInvalidArgument);
}

TEST(Regularity, SphereOverF3) {
  const AffineSpace space(FieldContext::make(3, 1), 2);
  const Variety v = builtin_variety(space, VarietyFamily::parse("sphere", 1));
  const RegularityReport r = regularity_check(space, v);
  EXPECT_NEAR(r.c1, 4.0 / 3.0, 1e-12);
  EXPECT_NEAR(r.max_sum, 2.0, 1e-9);
  // q^{(d+1)/2} * max |hat 1_V| = 2 / sqrt(3)
  EXPECT_NEAR(r.c2, 2.0 / std::sqrt(3.0), 1e-9);
  EXPECT_TRUE(r.verdict);
  EXPECT_TRUE(r.parseval_ok);
  EXPECT_TRUE(r.cross_checked);
  EXPECT_LT(r.cross_check_rel_error, 1e-6);
}

TEST(Regularity, ParaboloidOverF3) {
  const AffineSpace space(FieldContext::make(3, 1), 2);
  const Variety v = builtin_variety(space, VarietyFamily::parse("paraboloid", 0));
  const RegularityReport r = regularity_check(space, v);
  EXPECT_NEAR(r.c1, 1.0, 1e-12);
  EXPECT_NEAR(r.max_sum, std::sqrt(3.0), 1e-9);
  EXPECT_NEAR(r.c2, 1.0, 1e-9);
}

TEST(Regularity, WholeSpaceHasNoFourierMassButFailsSize) {
  const AffineSpace space(FieldContext::make(3, 1), 2);
  Variety v;
  v.dim = 2;
  for (PointId x = 0; x < 9; ++x) v.points.push_back(x);
  const RegularityReport r = regularity_check(space, v);
  EXPECT_NEAR(r.c2, 0.0, 1e-9);
  EXPECT_NEAR(r.c1, 3.0, 1e-12);
  EXPECT_FALSE(r.verdict);
  Variety empty;
  empty.dim = 2;
  EXPECT_EQ(code_of([&] { regularity_check(space, empty); }), ErrorCode::kEmptyVariety);
}

TEST(Regularity, ParsevalAcrossFamilies) {
  for (auto [p, n, d] : {std::tuple{5, 1, 3}, {3, 2, 2}, {7, 1, 2}}) {
    const AffineSpace space(FieldContext::make(p, n), d);
    for (const char* fam : {"sphere", "paraboloid", "minkowski"}) {
      const Variety v = builtin_variety(space, VarietyFamily::parse(fam, 1));
      const RegularityReport r = regularity_check(space, v);
      EXPECT_TRUE(r.parseval_ok) << fam;
      EXPECT_LT(r.parseval_rel_error, 1e-6);
      if (r.cross_checked) EXPECT_LT(r.cross_check_rel_error, 1e-6);
    }
  }
}

}  // namespace
}  // namespace fqs
