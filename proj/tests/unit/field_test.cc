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

#include "fqspectra/field.h"

#include <gtest/gtest.h>

#include <cmath>
#include <tuple>

#include "fqspectra/error.h"
#include "fqspectra/rng.h"
#include "oracles.h"

namespace fqs {
namespace {

ErrorCode code_of(int p, int n) {
  try {
    FieldContext::make(p, n);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for " << p << "^" << n;
  return ErrorCode::kInvalidArgument;
}

TEST(FieldContext, RejectsBadParameters) {
  EXPECT_EQ(code_of(2, 1), ErrorCode::kEvenCharacteristic);
  EXPECT_EQ(code_of(9, 1), ErrorCode::kNotPrime);
  EXPECT_EQ(code_of(1, 1), ErrorCode::kNotPrime);
  EXPECT_EQ(code_of(3, 5), ErrorCode::kDegreeTooLarge);
  EXPECT_EQ(code_of(37, 4), ErrorCode::kOrderTooLarge);
  EXPECT_EQ(code_of(3, 0), ErrorCode::kInvalidArgument);
}

TEST(FieldContext, PrimeFieldF3) {
  const auto f = FieldContext::make(3, 1);
  EXPECT_EQ(f.q(), 3u);
  EXPECT_EQ(f.mul(2, 2), 1u);
  EXPECT_EQ(f.add(2, 2), 1u);
  EXPECT_EQ(f.neg(1), 2u);
}

TEST(FieldContext, F9UsesXSquaredPlusOne) {
  const auto f = FieldContext::make(3, 2);
  const auto m = f.modulus();
  ASSERT_EQ(m.size(), 3u);
  EXPECT_EQ(m[0], 1);
  EXPECT_EQ(m[1], 0);
  EXPECT_EQ(m[2], 1);
  // x has encoding 3; x * x = -1 = 2.
  EXPECT_EQ(f.mul(3, 3), 2u);
}

TEST(FieldContext, InverseInF5) {
  const auto f = FieldContext::make(5, 1);
  EXPECT_EQ(f.inv(2), 3u);
  try {
    f.inv(0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInverseOfZero);
  }
}

TEST(FieldContext, CharacterExamples) {
  const auto f3 = FieldContext::make(3, 1);
  EXPECT_EQ(f3.character(0), Complex(1.0, 0.0));
  const Complex s = f3.character(1) + f3.character(2);
  EXPECT_NEAR(s.real(), -1.0, 1e-12);
  EXPECT_NEAR(s.imag(), 0.0, 1e-12);

  const auto f9 = FieldContext::make(3, 2);
  Complex total = 0;
  for (Elem x = 0; x < 9; ++x) total += f9.character(x);
  EXPECT_LT(std::abs(total), 1e-12);
}

class FieldOracle : public ::testing::TestWithParam<std::tuple<int, int>> {};

TEST_P(FieldOracle, ModulusMatchesBruteForceSearch) {
  const auto [p, n] = GetParam();
  const auto f = FieldContext::make(p, n);
  const oracle::NaiveField naive(p, n);
  const auto m = f.modulus();
  ASSERT_EQ(m.size(), naive.modulus.size());
  for (std::size_t i = 0; i < m.size(); ++i) EXPECT_EQ(m[i], naive.modulus[i]);
}

TEST_P(FieldOracle, ArithmeticAndTraceMatchNaivePolynomials) {
  const auto [p, n] = GetParam();
  const auto f = FieldContext::make(p, n);
  const oracle::NaiveField naive(p, n);
  Rng rng(derive_seed(7, {static_cast<std::uint64_t>(p), static_cast<std::uint64_t>(n)}));
  for (int i = 0; i < 400; ++i) {
    const Elem a = static_cast<Elem>(rng.uniform(f.q()));
    const Elem b = static_cast<Elem>(rng.uniform(f.q()));
    ASSERT_EQ(f.add(a, b), naive.add(a, b));
    ASSERT_EQ(f.sub(a, b), naive.sub(a, b));
    ASSERT_EQ(f.mul(a, b), naive.mul(a, b));
    if (f.q() <= 2000) ASSERT_EQ(f.trace(a), naive.trace(a));
    if (a != 0) ASSERT_EQ(f.mul(a, f.inv(a)), 1u);
    ASSERT_EQ(f.trace_mul(a, b), f.trace(f.mul(a, b)));
  }
}

TEST_P(FieldOracle, FrobeniusIsAdditive) {
  const auto [p, n] = GetParam();
  const auto f = FieldContext::make(p, n);
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const Elem a = static_cast<Elem>(rng.uniform(f.q()));
    const Elem b = static_cast<Elem>(rng.uniform(f.q()));
    ASSERT_EQ(f.frobenius(f.add(a, b)), f.add(f.frobenius(a), f.frobenius(b)));
  }
}

TEST_P(FieldOracle, CharacterIsAHomomorphism) {
  const auto [p, n] = GetParam();
  const auto f = FieldContext::make(p, n);
  Rng rng(13);
  for (int i = 0; i < 1000; ++i) {
    const Elem x = static_cast<Elem>(rng.uniform(f.q()));
    const Elem y = static_cast<Elem>(rng.uniform(f.q()));
    ASSERT_LT(std::abs(f.character(f.add(x, y)) - f.character(x) * f.character(y)), 1e-10);
    ASSERT_NEAR(std::abs(f.character(x)), 1.0, 1e-12);
  }
}

TEST_P(FieldOracle, TraceFibersAreBalanced) {
  const auto [p, n] = GetParam();
  const auto f = FieldContext::make(p, n);
  if (f.q() > 100000) GTEST_SKIP();
  std::vector<std::uint64_t> fiber(p, 0);
  for (Elem x = 0; x < f.q(); ++x) ++fiber[f.trace(x)];
  for (int r = 0; r < p; ++r) EXPECT_EQ(fiber[r], f.q() / p);
}

TEST_P(FieldOracle, CharacterOrthogonality) {
  const auto [p, n] = GetParam();
  const auto f = FieldContext::make(p, n);
  if (f.q() > 200) GTEST_SKIP();
  for (Elem m = 0; m < f.q(); ++m) {
    Complex s = 0;
    for (Elem x = 0; x < f.q(); ++x) s += f.character(f.mul(m, x));
    if (m == 0) {
      EXPECT_EQ(s, Complex(f.q(), 0));
    } else {
      EXPECT_LT(std::abs(s), 1e-8);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(
    SmallFields, FieldOracle,
    ::testing::Values(std::make_tuple(3, 1), std::make_tuple(5, 1), std::make_tuple(13, 1),
                      std::make_tuple(3, 2), std::make_tuple(5, 2), std::make_tuple(7, 2),
                      std::make_tuple(3, 3), std::make_tuple(5, 3), std::make_tuple(3, 4),
                      std::make_tuple(7, 4), std::make_tuple(31, 4), std::make_tuple(1021, 2)));

TEST(FieldContext, GeneratorHasFullOrder) {
  for (auto [p, n] : {std::pair{3, 2}, {5, 3}, {7, 1}, {3, 4}}) {
    const auto f = FieldContext::make(p, n);
    const Elem g = f.generator();
    Elem x = g;
    std::uint64_t order = 1;
    while (x != 1) {
      x = f.mul(x, g);
      ++order;
    }
    EXPECT_EQ(order, f.q() - 1u);
  }
}

TEST(FieldContext, CopiesShareState) {
  const auto f = FieldContext::make(5, 2);
  const FieldContext g = f;
  EXPECT_EQ(g.mul(7, 11), f.mul(7, 11));
  EXPECT_EQ(f.pow(7, 24), 1u);
  EXPECT_EQ(f.from_int(-1), f.neg(1));
}

}  // namespace
}  // namespace fqs
