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

// Brute-force reference implementations. Deliberately naive: polynomial
// arithmetic on coefficient vectors, tuple enumeration over E^k, and edge
// counting by membership tests. Slow, but independent of the library paths
// they check.

#ifndef FQSPECTRA_TESTS_ORACLES_H_
#define FQSPECTRA_TESTS_ORACLES_H_

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <set>
#include <vector>

#include "fqspectra/count.h"
#include "fqspectra/field.h"
#include "fqspectra/geometry.h"

namespace fqs::oracle {

using Poly = std::vector<int>;  // coefficients, constant term first

inline Poly trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

inline int mod(long long v, int p) { return static_cast<int>(((v % p) + p) % p); }

// Remainder of a modulo monic m over F_p.
inline Poly poly_rem(Poly a, const Poly& m, int p) {
  a = trim(a);
  const int dm = static_cast<int>(m.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= dm && !a.empty()) {
    const int shift = static_cast<int>(a.size()) - 1 - dm;
    const int c = a.back();
    for (int i = 0; i <= dm; ++i) a[shift + i] = mod(a[shift + i] - 1LL * c * m[i], p);
    a = trim(a);
  }
  return a;
}

inline bool divides(const Poly& g, const Poly& f, int p) { return poly_rem(f, g, p).empty(); }

// Monic polynomials of a degree, in the library's lexicographic order:
// coefficients compared from x^{deg-1} down to the constant term.
inline std::vector<Poly> monic_polys(int deg, int p) {
  std::vector<Poly> out;
  std::int64_t count = 1;
  for (int i = 0; i < deg; ++i) count *= p;
  for (std::int64_t v = 0; v < count; ++v) {
    Poly f(deg + 1, 0);
    f[deg] = 1;
    std::int64_t r = v;
    for (int i = 0; i < deg; ++i) {  // least significant digit = constant term
      f[i] = static_cast<int>(r % p);
      r /= p;
    }
    out.push_back(f);
  }
  return out;
}

inline bool irreducible(const Poly& f, int p) {
  const int n = static_cast<int>(f.size()) - 1;
  for (int deg = 1; deg <= n / 2; ++deg) {
    for (const Poly& g : monic_polys(deg, p)) {
      if (divides(g, f, p)) return false;
    }
  }
  return true;
}

inline Poly smallest_irreducible(int p, int n) {
  for (const Poly& f : monic_polys(n, p)) {
    if (irreducible(f, p)) return f;
  }
  return {};
}

struct NaiveField {
  int p;
  int n;
  Poly modulus;

  NaiveField(int p_, int n_) : p(p_), n(n_), modulus(smallest_irreducible(p_, n_)) {}

  Elem q() const {
    Elem v = 1;
    for (int i = 0; i < n; ++i) v *= p;
    return v;
  }
  Poly decode(Elem a) const {
    Poly c(n, 0);
    for (int i = 0; i < n; ++i) {
      c[i] = static_cast<int>(a % p);
      a /= p;
    }
    return c;
  }
  Elem encode(Poly c) const {
    c.resize(n, 0);
    Elem v = 0;
    for (int i = n - 1; i >= 0; --i) v = v * p + static_cast<Elem>(c[i]);
    return v;
  }
  Elem add(Elem a, Elem b) const {
    Poly x = decode(a), y = decode(b);
    for (int i = 0; i < n; ++i) x[i] = mod(x[i] + y[i], p);
    return encode(x);
  }
  Elem neg(Elem a) const {
    Poly x = decode(a);
    for (int& c : x) c = mod(-c, p);
    return encode(x);
  }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    Poly x = decode(a), y = decode(b);
    Poly r(2 * n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) r[i + j] = mod(r[i + j] + 1LL * x[i] * y[j], p);
    return encode(poly_rem(r, modulus, p));
  }
  Elem pow(Elem a, std::uint64_t e) const {
    Elem r = 1;
    for (std::uint64_t i = 0; i < e; ++i) r = mul(r, a);
    return r;
  }
  int trace(Elem a) const {
    Elem s = 0;
    Elem f = a;
    for (int i = 0; i < n; ++i) {
      s = add(s, f);
      f = pow(f, static_cast<std::uint64_t>(p));
    }
    return static_cast<int>(s);  // lies in F_p, so the encoding is the integer
  }
  std::complex<double> character(Elem a) const {
    return std::polar(1.0, 2 * std::numbers::pi * trace(a) / p);
  }
};

// Coordinates of a point in F_q^D (leading coordinate most significant).
inline std::vector<Elem> coords(PointId x, Elem q, int dim) {
  std::vector<Elem> c(dim);
  for (int i = dim - 1; i >= 0; --i) {
    c[i] = x % q;
    x /= q;
  }
  return c;
}

inline PointId point(const std::vector<Elem>& c, Elem q) {
  PointId v = 0;
  for (Elem x : c) v = v * q + x;
  return v;
}

inline PointId add_points(const NaiveField& f, PointId a, PointId b, int dim) {
  auto x = coords(a, f.q(), dim), y = coords(b, f.q(), dim);
  for (int i = 0; i < dim; ++i) x[i] = f.add(x[i], y[i]);
  return point(x, f.q());
}

inline PointId sub_points(const NaiveField& f, PointId a, PointId b, int dim) {
  auto x = coords(a, f.q(), dim), y = coords(b, f.q(), dim);
  for (int i = 0; i < dim; ++i) x[i] = f.sub(x[i], y[i]);
  return point(x, f.q());
}

inline Elem dot(const NaiveField& f, PointId a, PointId b, int dim) {
  auto x = coords(a, f.q(), dim), y = coords(b, f.q(), dim);
  Elem s = 0;
  for (int i = 0; i < dim; ++i) s = f.add(s, f.mul(x[i], y[i]));
  return s;
}

// lambda_m = sum_{s in S} chi(m . s)
inline std::complex<double> eigenvalue(const NaiveField& f, const std::vector<PointId>& set,
                                       PointId m, int dim) {
  std::complex<double> s = 0;
  for (PointId x : set) s += f.character(dot(f, m, x, dim));
  return s;
}

// Every k-tuple sum over E^k, as a map z -> r_k(z).
inline std::map<PointId, std::uint64_t> fold(const NaiveField& f, const std::vector<PointId>& set,
                                             int k, int dim) {
  std::map<PointId, std::uint64_t> out;
  if (k == 0) {
    out[0] = 1;
    return out;
  }
  if (set.empty()) return out;
  std::vector<std::size_t> idx(k, 0);
  for (;;) {
    PointId z = 0;
    for (std::size_t i : idx) z = add_points(f, z, set[i], dim);
    ++out[z];
    int pos = k - 1;
    while (pos >= 0 && ++idx[pos] == set.size()) idx[pos--] = 0;
    if (pos < 0) break;
  }
  return out;
}

inline std::uint64_t energy(const NaiveField& f, const std::vector<PointId>& set, int k, int dim) {
  std::uint64_t s = 0;
  for (const auto& [z, r] : fold(f, set, k / 2, dim)) s += r * r;
  return s;
}

inline Elem sum_of_squares(const NaiveField& f, PointId z, int dim) { return dot(f, z, z, dim); }

// nu_k(t) for Q = sum of squares.
inline std::vector<std::uint64_t> nu(const NaiveField& f, const std::vector<PointId>& set, int k,
                                     int dim) {
  std::vector<std::uint64_t> out(f.q(), 0);
  for (const auto& [z, r] : fold(f, set, k, dim)) out[sum_of_squares(f, z, dim)] += r;
  return out;
}

inline std::set<Elem> distances(const NaiveField& f, const std::vector<PointId>& set, int k,
                                int dim) {
  std::set<Elem> out;
  for (const auto& [z, r] : fold(f, set, k, dim)) out.insert(sum_of_squares(f, z, dim));
  return out;
}

// sum_{b, c} m_B(b) m_C(c) [c - b in S]
inline std::uint64_t edges(const NaiveField& f, const std::set<PointId>& s,
                           const std::map<PointId, std::uint64_t>& from,
                           const std::map<PointId, std::uint64_t>& to, int dim) {
  std::uint64_t e = 0;
  for (const auto& [b, mb] : from)
    for (const auto& [c, mc] : to)
      if (s.count(sub_points(f, c, b, dim))) e += mb * mc;
  return e;
}

}  // namespace fqs::oracle

#endif  // FQSPECTRA_TESTS_ORACLES_H_
