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

#include <cmath>
#include <numbers>
#include <string>

#include "fqspectra/error.h"

namespace fqs {
namespace {

using Poly = std::vector<int>;  // low-order coefficient first

Poly to_digits(Elem a, int p, int n) {
  Poly d(n);
  for (int i = 0; i < n; ++i) {
    d[i] = static_cast<int>(a % p);
    a /= p;
  }
  return d;
}

Elem from_digits(const Poly& d, int p) {
  Elem v = 0;
  for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) v = v * p + d[i];
  return v;
}

// Remainder of `num` modulo monic `den`, both over F_p.
Poly poly_mod(Poly num, const Poly& den, int p) {
  const int dd = static_cast<int>(den.size()) - 1;
  for (int i = static_cast<int>(num.size()) - 1; i >= dd; --i) {
    const int c = num[i];
    if (c == 0) continue;
    for (int j = 0; j <= dd; ++j) {
      num[i - dd + j] = ((num[i - dd + j] - c * den[j]) % p + p) % p;
    }
  }
  num.resize(dd);
  return num;
}

Elem mul_mod(Elem a, Elem b, const Poly& modulus, int p, int n) {
  const Poly x = to_digits(a, p, n);
  const Poly y = to_digits(b, p, n);
  Poly prod(2 * n - 1, 0);
  for (int i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
  }
  return from_digits(poly_mod(std::move(prod), modulus, p), p);
}

Elem pow_mod(Elem a, std::uint64_t e, const Poly& modulus, int p, int n) {
  Elem result = 1;
  while (e > 0) {
    if (e & 1) result = mul_mod(result, a, modulus, p, n);
    a = mul_mod(a, a, modulus, p, n);
    e >>= 1;
  }
  return result;
}

bool is_irreducible(const Poly& f, int p) {
  const int n = static_cast<int>(f.size()) - 1;
  for (int deg = 1; deg <= n / 2; ++deg) {
    std::uint64_t count = 1;
    for (int i = 0; i < deg; ++i) count *= p;
    for (std::uint64_t tail = 0; tail < count; ++tail) {
      Poly g = to_digits(static_cast<Elem>(tail), p, deg);
      g.push_back(1);
      const Poly r = poly_mod(f, g, p);
      bool zero = true;
      for (int c : r) zero = zero && c == 0;
      if (zero) return false;
    }
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t f = 2; f * f <= v; ++f) {
    if (v % f != 0) continue;
    out.push_back(f);
    while (v % f == 0) v /= f;
  }
  if (v > 1) out.push_back(v);
  return out;
}

}  // namespace

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotPrime: return "NotPrime";
    case ErrorCode::kEvenCharacteristic: return "EvenCharacteristic";
    case ErrorCode::kDegreeTooLarge: return "DegreeTooLarge";
    case ErrorCode::kOrderTooLarge: return "OrderTooLarge";
    case ErrorCode::kInverseOfZero: return "InverseOfZero";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kSearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorCode::kZeroParameter: return "ZeroParameter";
    case ErrorCode::kEmptyVariety: return "EmptyVariety";
    case ErrorCode::kDegenerateForm: return "DegenerateForm";
    case ErrorCode::kExponentDivisibleByCharacteristic:
      return "ExponentDivisibleByCharacteristic";
    case ErrorCode::kNotDiagonal: return "NotDiagonal";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kOddK: return "OddK";
    case ErrorCode::kEmptyX: return "EmptyX";
    case ErrorCode::kInconsistentTotal: return "InconsistentTotal";
    case ErrorCode::kSizeExceedsVariety: return "SizeExceedsVariety";
    case ErrorCode::kSubsetTooSmall: return "SubsetTooSmall";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t f = 2; f * f <= v; ++f) {
    if (v % f == 0) return false;
  }
  return true;
}

FieldContext FieldContext::make(int p, int n) {
  if (p == 2) {
    throw Error(ErrorCode::kEvenCharacteristic,
                "p = 2; only odd characteristic is supported");
  }
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) {
    throw Error(ErrorCode::kNotPrime, "p = " + std::to_string(p) + " is not prime");
  }
  if (n < 1) {
    throw Error(ErrorCode::kInvalidArgument, "extension degree n must be >= 1");
  }
  if (n > kMaxExtensionDegree) {
    throw Error(ErrorCode::kDegreeTooLarge,
                "n = " + std::to_string(n) + " exceeds the maximum degree " +
                    std::to_string(kMaxExtensionDegree));
  }
  std::uint64_t q = 1;
  for (int i = 0; i < n; ++i) {
    q *= static_cast<std::uint64_t>(p);
    if (q > kMaxFieldOrder) {
      throw Error(ErrorCode::kOrderTooLarge,
                  "p^n exceeds the maximum field order 2^20");
    }
  }

  auto t = std::make_shared<Tables>();
  t->p = p;
  t->n = n;
  t->q = static_cast<Elem>(q);

  for (Elem tail = 0; tail < t->q; ++tail) {
    Poly f = to_digits(tail, p, n);
    f.push_back(1);
    if (is_irreducible(f, p)) {
      t->modulus = std::move(f);
      break;
    }
  }

  t->digit_weight.resize(n);
  Elem w = 1;
  for (int i = 0; i < n; ++i, w *= p) t->digit_weight[i] = w;

  const auto factors = prime_factors(q - 1);
  for (Elem g = 1; g < t->q; ++g) {
    bool primitive = true;
    for (std::uint64_t r : factors) {
      if (pow_mod(g, (q - 1) / r, t->modulus, p, n) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      t->generator = g;
      break;
    }
  }

  if (n > 1 && q <= kLogTableLimit) {
    t->log.assign(q, 0);
    t->exp.assign(q - 1, 0);
    Elem cur = 1;
    for (std::uint32_t e = 0; e + 1 < q; ++e) {
      t->exp[e] = cur;
      t->log[cur] = e;
      cur = mul_mod(cur, t->generator, t->modulus, p, n);
    }
  }

  if (n > 1) {
    // Tr is F_p-linear, so the traces of the basis 1, x, ..., x^{n-1} fix it.
    std::vector<int> basis_trace(n);
    for (int i = 0; i < n; ++i) {
      Elem b = t->digit_weight[i];
      Elem sum = 0;
      Elem cur = b;
      for (int j = 0; j < n; ++j) {
        const Poly a = to_digits(sum, p, n);
        const Poly c = to_digits(cur, p, n);
        Poly s(n);
        for (int k = 0; k < n; ++k) s[k] = (a[k] + c[k]) % p;
        sum = from_digits(s, p);
        cur = pow_mod(cur, static_cast<std::uint64_t>(p), t->modulus, p, n);
      }
      basis_trace[i] = static_cast<int>(sum);  // lies in F_p
    }
    t->trace.resize(q);
    for (Elem a = 0; a < t->q; ++a) {
      const Poly d = to_digits(a, p, n);
      int s = 0;
      for (int i = 0; i < n; ++i) s = (s + d[i] * basis_trace[i]) % p;
      t->trace[a] = static_cast<std::uint16_t>(s);
    }
  }

  t->roots.resize(p);
  for (int r = 0; r < p; ++r) {
    const double angle = 2.0 * std::numbers::pi * r / p;
    t->roots[r] = Complex(std::cos(angle), std::sin(angle));
  }
  t->roots[0] = Complex(1.0, 0.0);

  FieldContext ctx(t);
  if (q <= kTraceProductTableLimit) {
    t->trace_product.resize(q * q);
    for (Elem a = 0; a < t->q; ++a) {
      for (Elem b = 0; b < t->q; ++b) {
        t->trace_product[std::size_t{a} * q + b] =
            static_cast<std::uint16_t>(ctx.trace(ctx.mul(a, b)));
      }
    }
  }
  return FieldContext(std::move(t));
}

Elem FieldContext::digitwise(Elem a, Elem b, bool subtract) const {
  const Elem p = static_cast<Elem>(t_->p);
  Elem out = 0;
  for (int i = 0; i < t_->n; ++i) {
    const Elem w = t_->digit_weight[i];
    const Elem x = (a / w) % p;
    const Elem y = (b / w) % p;
    const Elem s = subtract ? (x + p - y) % p : (x + y) % p;
    out += s * w;
  }
  return out;
}

Elem FieldContext::poly_mul(Elem a, Elem b) const {
  return mul_mod(a, b, t_->modulus, t_->p, t_->n);
}

Elem FieldContext::inv(Elem a) const {
  if (a == 0) throw Error(ErrorCode::kInverseOfZero, "0 has no inverse");
  if (!t_->log.empty()) {
    const std::uint32_t l = t_->log[a];
    return t_->exp[l == 0 ? 0 : t_->q - 1 - l];
  }
  return pow(a, t_->q - 2);
}

Elem FieldContext::pow(Elem a, std::uint64_t e) const {
  Elem result = 1;
  while (e > 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

Elem FieldContext::from_int(long long v) const {
  const long long p = t_->p;
  return static_cast<Elem>(((v % p) + p) % p);
}

}  // namespace fqs
