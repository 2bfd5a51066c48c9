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

#ifndef FQSPECTRA_FIELD_H_
#define FQSPECTRA_FIELD_H_

#include <complex>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace fqs {

// Field elements are integers 0..q-1. Digit i of the base-p expansion is the
// coefficient of x^i in the polynomial representation modulo `modulus()`.
using Elem = std::uint32_t;
using Complex = std::complex<double>;

inline constexpr int kMaxExtensionDegree = 4;
inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 20;
// Fields up to this order use discrete log tables for multiplication.
inline constexpr std::uint64_t kLogTableLimit = std::uint64_t{1} << 16;
// Fields up to this order keep a q*q table of Tr(a*b).
inline constexpr std::uint64_t kTraceProductTableLimit = 1024;

bool is_prime(std::uint64_t v);

// F_q for q = p^n with p an odd prime. Immutable after construction; copies
// share the precomputed tables.
class FieldContext {
 public:
  // Picks the lexicographically smallest monic irreducible modulus of degree
  // n (coefficient vectors compared from x^{n-1} down to the constant term).
  static FieldContext make(int p, int n);

  int p() const { return t_->p; }
  int n() const { return t_->n; }
  Elem q() const { return t_->q; }
  // Coefficients c_0..c_n of the monic modulus (c_n == 1).
  std::span<const int> modulus() const { return t_->modulus; }
  // A fixed primitive element.
  Elem generator() const { return t_->generator; }

  Elem add(Elem a, Elem b) const {
    if (t_->n == 1) {
      Elem s = a + b;
      return s >= t_->q ? s - t_->q : s;
    }
    return digitwise(a, b, false);
  }
  Elem sub(Elem a, Elem b) const {
    if (t_->n == 1) return a >= b ? a - b : a + t_->q - b;
    return digitwise(a, b, true);
  }
  Elem neg(Elem a) const { return sub(0, a); }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    if (t_->n == 1) {
      return static_cast<Elem>(std::uint64_t{a} * b % t_->q);
    }
    if (!t_->log.empty()) {
      std::uint32_t e = t_->log[a] + t_->log[b];
      if (e >= t_->q - 1) e -= t_->q - 1;
      return t_->exp[e];
    }
    return poly_mul(a, b);
  }
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t e) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  // Embeds an integer into the prime subfield.
  Elem from_int(long long v) const;

  // Absolute trace into F_p, as an integer 0..p-1.
  int trace(Elem a) const {
    return t_->n == 1 ? static_cast<int>(a) : t_->trace[a];
  }
  // Tr(a*b) through a lookup table for small q.
  int trace_mul(Elem a, Elem b) const {
    if (!t_->trace_product.empty()) {
      return t_->trace_product[std::size_t{a} * t_->q + b];
    }
    return trace(mul(a, b));
  }

  // Canonical additive character chi(a) = exp(2 pi i Tr(a) / p).
  Complex character(Elem a) const { return t_->roots[trace(a)]; }
  // roots()[r] = exp(2 pi i r / p).
  std::span<const Complex> roots() const { return t_->roots; }

  // Frobenius x -> x^p.
  Elem frobenius(Elem a) const { return pow(a, static_cast<std::uint64_t>(p())); }

 private:
  struct Tables {
    int p = 0;
    int n = 0;
    Elem q = 0;
    std::vector<int> modulus;
    Elem generator = 0;
    std::vector<std::uint32_t> log;
    std::vector<Elem> exp;
    std::vector<std::uint16_t> trace;
    std::vector<std::uint16_t> trace_product;
    std::vector<Complex> roots;
    std::vector<Elem> digit_weight;
  };

  explicit FieldContext(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}

  Elem digitwise(Elem a, Elem b, bool subtract) const;
  Elem poly_mul(Elem a, Elem b) const;

  std::shared_ptr<const Tables> t_;
};

}  // namespace fqs

#endif  // FQSPECTRA_FIELD_H_
