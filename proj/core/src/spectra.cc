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

#include "fqspectra/spectra.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "fqspectra/error.h"
#include "fqspectra/parallel.h"
#include "fqspectra/rng.h"

namespace fqs {
namespace {

void check_order(std::uint64_t order) {
  if (order > kMaxSpectrumOrder) {
    throw Error(ErrorCode::kSearchSpaceTooLarge,
                "group order " + std::to_string(order) + " exceeds 10^7");
  }
}

Complex combine_residues(const FieldContext& f,
                         std::span<const std::uint64_t> counts) {
  const auto roots = f.roots();
  double re = 0.0;
  double im = 0.0;
  for (std::size_t r = 0; r < counts.size(); ++r) {
    if (counts[r] == 0) continue;
    re += static_cast<double>(counts[r]) * roots[r].real();
    im += static_cast<double>(counts[r]) * roots[r].imag();
  }
  return {re, im};
}

std::vector<Elem> decode_all(const AffineSpace& space,
                             std::span<const PointId> set) {
  const int d = space.dim();
  std::vector<Elem> flat(set.size() * d);
  for (std::size_t i = 0; i < set.size(); ++i) {
    space.decode(set[i], std::span<Elem>(flat.data() + i * d, d));
  }
  return flat;
}

void direct_spectrum(const AffineSpace& space, std::span<const PointId> set,
                     int threads, std::vector<Complex>& out) {
  const FieldContext& f = space.field();
  const int d = space.dim();
  const int p = f.p();
  const std::vector<Elem> pts = decode_all(space, set);
  parallel_for(space.size(), threads, [&](std::uint64_t begin, std::uint64_t end) {
    std::vector<Elem> m(d);
    std::vector<std::uint64_t> counts(p);
    for (std::uint64_t id = begin; id < end; ++id) {
      space.decode(static_cast<PointId>(id), m);
      std::fill(counts.begin(), counts.end(), 0);
      for (std::size_t s = 0; s < set.size(); ++s) {
        const Elem* x = pts.data() + s * d;
        int r = 0;
        for (int i = 0; i < d; ++i) r += f.trace_mul(m[i], x[i]);
        ++counts[r % p];
      }
      out[id] = combine_residues(f, counts);
    }
  });
}

// Coordinate map m -> u with Tr(m y) = u . digits(y) over F_p, where u . v is
// the digitwise dot product of base-p expansions.
std::vector<Elem> trace_dual(const FieldContext& f) {
  const int n = f.n();
  const int p = f.p();
  std::vector<Elem> basis(n);
  Elem w = 1;
  for (int i = 0; i < n; ++i, w *= p) basis[i] = w;
  std::vector<Elem> dual(f.q());
  for (Elem m = 0; m < f.q(); ++m) {
    Elem u = 0;
    for (int b = n - 1; b >= 0; --b) u = u * p + static_cast<Elem>(f.trace_mul(m, basis[b]));
    dual[m] = u;
  }
  return dual;
}

void transform_spectrum(const AffineSpace& space, std::span<const PointId> set,
                        int threads, std::vector<Complex>& out) {
  const FieldContext& f = space.field();
  const std::uint64_t size = space.size();
  const int p = f.p();
  const auto roots = f.roots();
  std::vector<Complex> a(size, Complex(0.0, 0.0));
  for (PointId s : set) a[s] = Complex(1.0, 0.0);

  // Length-p DFT along every base-p digit: a(u) = sum_x 1_S(x) w^{u.x}.
  for (std::uint64_t w : space.digit_weights()) {
    const std::uint64_t fibers = size / p;
    parallel_for(fibers, threads, [&](std::uint64_t begin, std::uint64_t end) {
      std::vector<Complex> in(p);
      for (std::uint64_t fidx = begin; fidx < end; ++fidx) {
        const std::uint64_t hi = fidx / w;
        const std::uint64_t lo = fidx % w;
        const std::uint64_t base = hi * w * p + lo;
        for (int x = 0; x < p; ++x) in[x] = a[base + x * w];
        for (int u = 0; u < p; ++u) {
          Complex acc(0.0, 0.0);
          for (int x = 0; x < p; ++x) acc += in[x] * roots[(u * x) % p];
          a[base + u * w] = acc;
        }
      }
    });
  }

  const std::vector<Elem> dual = trace_dual(f);
  const int d = space.dim();
  parallel_for(size, threads, [&](std::uint64_t begin, std::uint64_t end) {
    std::vector<Elem> m(d);
    for (std::uint64_t id = begin; id < end; ++id) {
      space.decode(static_cast<PointId>(id), m);
      std::uint64_t u = 0;
      for (int i = 0; i < d; ++i) u = u * f.q() + dual[m[i]];
      out[id] = a[u];
    }
  });
}

Spectrum finish(const AffineSpace& space, std::uint64_t degree,
                std::vector<Complex> eig) {
  Spectrum s;
  s.q = space.q();
  s.dim = space.dim();
  s.order = space.size();
  s.degree = degree;
  s.eigenvalues = std::move(eig);
  std::tie(s.lambda, s.argmax_m) = second_eigenvalue(s.eigenvalues, degree);
  for (std::size_t m = 1; m < s.eigenvalues.size(); ++m) {
    s.mixing_lambda = std::max(s.mixing_lambda, std::abs(s.eigenvalues[m]));
  }
  return s;
}

}  // namespace

std::pair<double, PointId> second_eigenvalue(std::span<const Complex> eig,
                                             std::uint64_t degree) {
  const double deg = static_cast<double>(degree);
  const double tol = kDegreeTolerance * std::max(1.0, deg);
  double best = 0.0;
  PointId arg = 0;
  for (std::size_t m = 1; m < eig.size(); ++m) {
    const double mod = std::abs(eig[m]);
    if (std::abs(mod - deg) <= tol) continue;
    if (mod > best) {
      best = mod;
      arg = static_cast<PointId>(m);
    }
  }
  return {best, arg};
}

Complex character_sum(const AffineSpace& space, std::span<const PointId> set,
                      PointId m) {
  const FieldContext& f = space.field();
  const std::vector<Elem> mc = space.decode(m);
  std::vector<Elem> x(space.dim());
  std::vector<std::uint64_t> counts(f.p(), 0);
  for (PointId s : set) {
    space.decode(s, x);
    ++counts[space.trace_dot(mc, x)];
  }
  return combine_residues(f, counts);
}

Spectrum cayley_spectrum(const AffineSpace& space, std::span<const PointId> set,
                         const SpectrumOptions& options) {
  check_order(space.size());
  std::vector<std::uint8_t> seen(space.size(), 0);
  for (PointId s : set) {
    if (s >= space.size()) throw Error(ErrorCode::kInvalidArgument, "point out of range");
    if (seen[s]++) throw Error(ErrorCode::kInvalidArgument, "connection set has duplicates");
  }
  SpectrumMethod method = options.method;
  if (method == SpectrumMethod::kAuto) {
    const std::uint64_t transform_cost =
        static_cast<std::uint64_t>(space.digits()) * space.field().p();
    method = transform_cost < set.size() * static_cast<std::uint64_t>(space.dim())
                 ? SpectrumMethod::kTransform
                 : SpectrumMethod::kDirect;
  }
  std::vector<Complex> eig(space.size());
  if (method == SpectrumMethod::kTransform) {
    transform_spectrum(space, set, options.threads, eig);
  } else {
    direct_spectrum(space, set, options.threads, eig);
  }
  return finish(space, set.size(), std::move(eig));
}

// ---------------------------------------------------------------------------

std::vector<PointId> euclidean_connection_set(const AffineSpace& space,
                                              const QuadraticForm& form, Elem t) {
  if (form.dim() != space.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "form and space dimensions differ");
  }
  const FieldContext& f = space.field();
  std::vector<PointId> out;
  std::vector<Elem> x(space.dim(), 0);
  for (std::uint64_t id = 0; id < space.size(); ++id) {
    if (id != 0) {
      for (int i = space.dim() - 1; i >= 0; --i) {
        if (++x[i] < f.q()) break;
        x[i] = 0;
      }
      if (form.eval(f, x) == t) out.push_back(static_cast<PointId>(id));
    }
  }
  return out;
}

EuclideanSpectrum euclidean_spectrum(const AffineSpace& space,
                                     const QuadraticForm& form, Elem t,
                                     const SpectrumOptions& options) {
  if (t >= space.q()) throw Error(ErrorCode::kInvalidArgument, "t out of range");
  const auto set = euclidean_connection_set(space, form, t);
  EuclideanSpectrum out;
  out.t = t;
  out.spectrum = cayley_spectrum(space, set, options);
  out.check.bound = 2.0 * std::pow(static_cast<double>(space.q()),
                                   (space.dim() - 1) / 2.0);
  out.check.asserted = t != 0;
  out.check.holds = !out.check.asserted ||
                    out.spectrum.lambda <= out.check.bound + kBoundSlack;
  return out;
}

// ---------------------------------------------------------------------------

void validate_affine_poly(const FieldContext& f, const DiagonalPoly& poly) {
  for (Elem a : poly.coeffs()) {
    if (a >= f.q()) throw Error(ErrorCode::kInvalidArgument, "coefficient out of range");
  }
  if (poly.exponent() % f.p() == 0) {
    throw Error(ErrorCode::kExponentDivisibleByCharacteristic,
                "s = " + std::to_string(poly.exponent()) + " is divisible by p = " +
                    std::to_string(f.p()));
  }
}

AffineSpace affine_graph_space(const FieldContext& f, const DiagonalPoly& poly) {
  return AffineSpace(f, 2 * poly.dim() + 1);
}

std::vector<PointId> affine_connection_set(const AffineSpace& big,
                                           const DiagonalPoly& poly) {
  const FieldContext& f = big.field();
  const int d = poly.dim();
  if (big.dim() != 2 * d + 1) {
    throw Error(ErrorCode::kDimensionMismatch, "affine graph lives in F_q^{2d+1}");
  }
  const AffineSpace half(f, 2 * d);
  std::vector<PointId> out;
  out.reserve(half.size());
  std::vector<Elem> pt(2 * d + 1);
  std::vector<Elem> x(2 * d);
  for (std::uint64_t id = 0; id < half.size(); ++id) {
    half.decode(static_cast<PointId>(id), x);
    const Elem plus = poly.eval(f, std::span<const Elem>(x.data(), d));
    const Elem minus = poly.eval(f, std::span<const Elem>(x.data() + d, d));
    pt[0] = f.neg(f.sub(plus, minus));
    std::copy(x.begin(), x.end(), pt.begin() + 1);
    out.push_back(big.encode(pt));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Complex weil_sum(const FieldContext& f, Elem alpha, Elem beta, int s) {
  std::vector<std::uint64_t> counts(f.p(), 0);
  for (Elem y = 0; y < f.q(); ++y) {
    const int r = f.trace(f.mul(alpha, f.pow(y, s))) + f.trace_mul(beta, y);
    ++counts[r % f.p()];
  }
  return combine_residues(f, counts);
}

namespace {

// W(alpha, beta) for every beta, from exact residue counts.
std::vector<Complex> weil_row(const FieldContext& f, Elem alpha, int s) {
  const int p = f.p();
  std::vector<int> base(f.q());
  for (Elem y = 0; y < f.q(); ++y) base[y] = f.trace(f.mul(alpha, f.pow(y, s)));
  std::vector<Complex> row(f.q());
  std::vector<std::uint64_t> counts(p);
  for (Elem beta = 0; beta < f.q(); ++beta) {
    std::fill(counts.begin(), counts.end(), 0);
    for (Elem y = 0; y < f.q(); ++y) ++counts[(base[y] + f.trace_mul(beta, y)) % p];
    row[beta] = combine_residues(f, counts);
  }
  return row;
}

}  // namespace

AffineSpectrum affine_cayley_spectrum(const FieldContext& f,
                                      const DiagonalPoly& poly,
                                      const SpectrumOptions& options) {
  validate_affine_poly(f, poly);
  const int d = poly.dim();
  const AffineSpace big = affine_graph_space(f, poly);
  check_order(big.size());
  const AffineSpace half(f, 2 * d);
  const std::uint64_t inner = half.size();
  std::vector<Complex> eig(big.size());

  parallel_for(f.q(), options.threads, [&](std::uint64_t begin, std::uint64_t end) {
    std::vector<Elem> m(2 * d);
    for (std::uint64_t m0 = begin; m0 < end; ++m0) {
      // Factor j uses alpha = -m0 a_j on x_j and +m0 a_j on x_{d+j}.
      std::map<Elem, std::vector<Complex>> rows;
      std::vector<const std::vector<Complex>*> factor(2 * d);
      for (int j = 0; j < d; ++j) {
        const Elem a = f.mul(static_cast<Elem>(m0), poly.coeffs()[j]);
        for (int side = 0; side < 2; ++side) {
          const Elem alpha = side == 0 ? f.neg(a) : a;
          auto it = rows.find(alpha);
          if (it == rows.end()) {
            it = rows.emplace(alpha, weil_row(f, alpha, poly.exponent())).first;
          }
          factor[side * d + j] = &it->second;
        }
      }
      for (std::uint64_t r = 0; r < inner; ++r) {
        half.decode(static_cast<PointId>(r), m);
        Complex v(1.0, 0.0);
        for (int i = 0; i < 2 * d; ++i) v *= (*factor[i])[m[i]];
        eig[m0 * inner + r] = v;
      }
    }
  });

  AffineSpectrum out;
  out.spectrum = finish(big, inner, std::move(eig));
  out.check.asserted = true;
  out.check.bound = std::pow(static_cast<double>(f.q()), d);
  out.check.holds = out.spectrum.lambda <= out.check.bound + kBoundSlack;
  return out;
}

double affine_lambda(const FieldContext& f, const DiagonalPoly& poly) {
  validate_affine_poly(f, poly);
  const int d = poly.dim();
  std::map<Elem, double> row_max;
  auto max_of = [&](Elem alpha) {
    auto it = row_max.find(alpha);
    if (it != row_max.end()) return it->second;
    double best = 0.0;
    for (const Complex& w : weil_row(f, alpha, poly.exponent())) best = std::max(best, std::abs(w));
    row_max.emplace(alpha, best);
    return best;
  };
  const double degree = std::pow(static_cast<double>(f.q()), 2 * d);
  double lambda = 0.0;
  for (Elem m0 = 1; m0 < f.q(); ++m0) {
    double prod = 1.0;
    for (int j = 0; j < d; ++j) {
      const Elem a = f.mul(m0, poly.coeffs()[j]);
      prod *= max_of(f.neg(a)) * max_of(a);
    }
    if (std::abs(prod - degree) <= kDegreeTolerance * degree) {
      // Every factor has full modulus; the maximum must come from the full
      // spectrum instead.
      return affine_cayley_spectrum(f, poly).spectrum.lambda;
    }
    lambda = std::max(lambda, prod);
  }
  return lambda;
}

double affine_mixing_lambda(const FieldContext& f, const DiagonalPoly& poly) {
  validate_affine_poly(f, poly);
  std::map<Elem, double> row_max;
  auto max_of = [&](Elem alpha) {
    auto it = row_max.find(alpha);
    if (it != row_max.end()) return it->second;
    double best = 0.0;
    for (const Complex& w : weil_row(f, alpha, poly.exponent())) best = std::max(best, std::abs(w));
    row_max.emplace(alpha, best);
    return best;
  };
  // Characters with m_0 = 0 and m != 0 give exactly 0.
  double lambda = 0.0;
  for (Elem m0 = 1; m0 < f.q(); ++m0) {
    double prod = 1.0;
    for (int j = 0; j < poly.dim(); ++j) {
      const Elem a = f.mul(m0, poly.coeffs()[j]);
      prod *= max_of(f.neg(a)) * max_of(a);
    }
    lambda = std::max(lambda, prod);
  }
  return lambda;
}

// ---------------------------------------------------------------------------

bool normality_check(const AffineSpace& space, std::span<const PointId> set,
                     const NormalityOptions& options) {
  const ConnectionSet graph(space, set);
  const std::uint64_t n = space.size();
  auto pair_ok = [&](PointId x, PointId y) {
    std::uint64_t plus = 0;
    std::uint64_t minus = 0;
    for (PointId s : set) {
      // z = x + s is an out-neighbour of x; is it one of y?
      if (graph.has_edge(y, space.add(x, s))) ++plus;
      // z = x - s is an in-neighbour of x; is it one of y?
      if (graph.has_edge(space.sub(x, s), y)) ++minus;
    }
    return plus == minus;
  };
  const std::uint64_t pairs = n * (n - 1) / 2;
  if (pairs <= options.max_pairs) {
    for (std::uint64_t x = 0; x < n; ++x) {
      for (std::uint64_t y = x + 1; y < n; ++y) {
        if (!pair_ok(static_cast<PointId>(x), static_cast<PointId>(y))) return false;
      }
    }
    return true;
  }
  Rng rng(derive_seed(options.seed, {0x6e6f726dULL}));
  for (std::uint64_t i = 0; i < options.max_pairs; ++i) {
    const auto x = static_cast<PointId>(rng.uniform(n));
    const auto y = static_cast<PointId>(rng.uniform(n));
    if (!pair_ok(x, y)) return false;
  }
  return true;
}

bool normality_check(const Digraph& g) {
  const int n = g.vertices;
  std::vector<std::vector<std::uint8_t>> adj(n, std::vector<std::uint8_t>(n, 0));
  for (auto [u, v] : g.edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw Error(ErrorCode::kInvalidArgument, "edge endpoint out of range");
    }
    adj[u][v] = 1;
  }
  for (int x = 0; x < n; ++x) {
    for (int y = x; y < n; ++y) {
      int plus = 0;
      int minus = 0;
      for (int z = 0; z < n; ++z) {
        plus += adj[x][z] & adj[y][z];
        minus += adj[z][x] & adj[z][y];
      }
      if (plus != minus) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

ConnectionSet::ConnectionSet(AffineSpace space, std::span<const PointId> set)
    : space_(std::move(space)), points_(set.begin(), set.end()),
      member_(space_.size(), 0) {
  for (PointId s : points_) {
    if (s >= space_.size()) throw Error(ErrorCode::kInvalidArgument, "point out of range");
    member_[s] = 1;
  }
}

Multiset Multiset::from_points(std::vector<PointId> points) {
  std::sort(points.begin(), points.end());
  Multiset m;
  for (PointId x : points) {
    if (!m.entries.empty() && m.entries.back().first == x) {
      ++m.entries.back().second;
    } else {
      m.entries.emplace_back(x, 1);
    }
  }
  return m;
}

Count Multiset::mass() const {
  Count total = 0;
  for (const auto& e : entries) total += e.second;
  return total;
}

Count Multiset::square_norm() const {
  Count total = 0;
  for (const auto& e : entries) total += Count(e.second) * e.second;
  return total;
}

Count edge_count(const ConnectionSet& graph, const Multiset& from,
                 const Multiset& to) {
  const AffineSpace& space = graph.space();
  const std::size_t via_pairs = from.entries.size() * to.entries.size();
  const std::size_t via_set = from.entries.size() * graph.points().size();
  Count total = 0;
  if (via_pairs <= via_set) {
    for (const auto& [b, mb] : from.entries) {
      Count inner = 0;
      for (const auto& [c, mc] : to.entries) {
        if (graph.has_edge(b, c)) inner += mc;
      }
      total += inner * mb;
    }
    return total;
  }
  std::vector<std::uint64_t> dense(space.size(), 0);
  for (const auto& [c, mc] : to.entries) dense[c] = mc;
  for (const auto& [b, mb] : from.entries) {
    Count inner = 0;
    for (PointId s : graph.points()) inner += dense[space.add(b, s)];
    total += inner * mb;
  }
  return total;
}

MixingAudit mixing_inequality(const Count& observed, const Count& degree,
                              const Count& order, const Count& mass_from,
                              const Count& mass_to, const Count& square_from,
                              const Count& square_to, double lambda) {
  MixingAudit a;
  a.observed = observed;
  const Count numer = degree * mass_from * mass_to;
  // main = numer / order, compared as observed*order - numer to stay exact.
  const Count diff = observed * order - numer;
  const long double ord = to_long_double(order);
  a.main_term = to_long_double(numer) / ord;
  const long double deviation = to_long_double(abs(diff)) / ord;
  a.bound = static_cast<long double>(lambda) *
            std::sqrt(to_long_double(square_from)) *
            std::sqrt(to_long_double(square_to));
  a.gap = a.bound - deviation;
  a.holds = a.gap >= -(1e-6L * a.bound + 1e-12L * a.main_term);
  return a;
}

MixingAudit mixing_audit(const Spectrum& spectrum, const ConnectionSet& graph,
                         const Multiset& from, const Multiset& to) {
  return mixing_inequality(edge_count(graph, from, to), Count(spectrum.degree),
                           Count(spectrum.order), from.mass(), to.mass(),
                           from.square_norm(), to.square_norm(), spectrum.mixing_lambda);
}

}  // namespace fqs
