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

#include "fqspectra/audits.h"

#include <cmath>

#include "fqspectra/error.h"
#include "fqspectra/rng.h"

namespace fqs {
namespace {

long double ipow(long double base, int e) {
  long double r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

CountAudit audit_nu_deviation(const Count& nu_t, const EuclideanSpectrum& graph,
                              std::uint64_t set_size, int k,
                              const EnergyProfile& profile) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be >= 1");
  const int m = k / 2;
  const Count e(set_size);
  const Spectrum& s = graph.spectrum;
  // Sources: m-fold sums; targets: negated (k-m)-fold sums.
  const Count& sq_from = profile_lambda(profile, 2 * m);
  const Count& sq_to = profile_lambda(profile, 2 * (k - m));
  CountAudit a;
  a.kind = k % 2 == 0 ? "nu_deviation_even" : "nu_deviation_odd";
  a.k = k;
  a.t = graph.t;
  a.mixing = mixing_inequality(nu_t, Count(s.degree), Count(s.order), power(e, m),
                               power(e, k - m), sq_from, sq_to, s.mixing_lambda);
  a.reference_main = to_long_double(power(e, k)) / s.q;
  a.reference_holds =
      std::abs(to_long_double(nu_t) - a.reference_main) <= a.mixing.bound * (1 + 1e-6L);
  return a;
}

EnergyAudit audit_energy_mixing(const ConnectionSet& variety,
                                const Spectrum& variety_graph,
                                std::span<const PointId> set, int k) {
  if (k < 4 || k % 2 != 0) {
    throw Error(ErrorCode::kOddK, "energy audit needs an even k >= 4");
  }
  const AffineSpace& space = variety.space();
  for (PointId x : set) {
    if (!variety.contains(x)) {
      throw Error(ErrorCode::kInvalidArgument, "E must be a subset of V");
    }
  }
  const int half = k / 2;
  const CountTable from = fold_counts(space, set, half - 1);
  const CountTable to = fold_counts(space, set, half);

  // N_V = sum_a r_{k/2-1}(a) sum_{v in V} r_{k/2}(a + v)
  Count n_v = 0;
  for (std::uint64_t a = 0; a < from.size(); ++a) {
    if (!from.nonzero(a)) continue;
    Count inner = 0;
    for (PointId v : variety.points()) {
      inner += to.at(space.add(static_cast<PointId>(a), v));
    }
    n_v += inner * from.at(a);
  }

  EnergyAudit out;
  out.k = k;
  out.energy = to.square_sum();
  out.variety_count = n_v;
  const Count e(set.size());
  out.mixing = mixing_inequality(n_v, Count(variety_graph.degree),
                                 Count(variety_graph.order), power(e, half - 1),
                                 power(e, half), from.square_sum(), out.energy,
                                 variety_graph.mixing_lambda);
  out.dominated = out.energy <= n_v;
  const long double lam = to_long_double(out.energy);
  out.upper_gap = out.mixing.main_term + out.mixing.bound - lam;
  out.two_sided_gap = out.mixing.bound - std::abs(lam - out.mixing.main_term);
  out.reference_main = to_long_double(power(e, k - 1)) / variety_graph.q;
  return out;
}

CountAudit audit_second_moment(const FieldContext& f, int d,
                               const Count& second, std::uint64_t shift_count,
                               std::uint64_t set_size, int k,
                               const EnergyProfile& profile, double lambda) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be >= 1");
  const int lo = k / 2;
  const int hi = k - lo;
  const Count x(shift_count);
  const Count e(set_size);
  // Sources carry lo-fold sums of both halves, targets hi-fold sums.
  const Count& l_lo = profile_lambda(profile, 2 * lo);
  const Count& l_hi = profile_lambda(profile, 2 * hi);
  const Count q(f.q());
  const Count degree = power(q, 2 * d);
  CountAudit a;
  a.kind = k % 2 == 0 ? "second_moment_even" : "second_moment_odd";
  a.k = k;
  a.mixing = mixing_inequality(second, degree, degree * q, x * power(e, 2 * lo),
                               x * power(e, 2 * hi), x * l_lo * l_lo,
                               x * l_hi * l_hi, lambda);
  a.reference_main = a.mixing.main_term;
  // The one-sided form: sum nu^2 <= |X|^2 |E|^{2k} / q + lambda * norm.
  a.reference_holds = to_long_double(second) <=
                      (a.mixing.main_term + a.mixing.bound) * (1 + 1e-12L) +
                          1e-6L * a.mixing.bound;
  return a;
}

MixingSweep random_mixing_sweep(const Spectrum& spectrum, const ConnectionSet& graph,
                                std::uint64_t pairs, std::uint64_t seed,
                                std::uint64_t max_draws) {
  MixingSweep out;
  const std::uint64_t n = graph.space().size();
  auto draw = [&](Rng& rng) {
    std::vector<PointId> pts(1 + rng.uniform(max_draws));
    for (PointId& x : pts) x = static_cast<PointId>(rng.uniform(n));
    return Multiset::from_points(std::move(pts));
  };
  for (std::uint64_t i = 0; i < pairs; ++i) {
    Rng rng(derive_seed(seed, {0x6d6978ULL, i}));
    const Multiset from = draw(rng);
    const Multiset to = draw(rng);
    const MixingAudit a = mixing_audit(spectrum, graph, from, to);
    ++out.pairs;
    if (!a.holds) ++out.violations;
    if (a.bound > 0) {
      const double ratio = static_cast<double>(a.gap / a.bound);
      if (ratio < out.min_gap_ratio) {
        out.min_gap_ratio = ratio;
        out.worst = a;
      }
    }
  }
  return out;
}

double energy_bound_ratio(Elem q, int d, int k, std::uint64_t set_size,
                          const Count& energy) {
  const long double qq = q;
  const long double e = static_cast<long double>(set_size);
  const long double denom = std::pow(qq, (d - 1) * (k - 2) / 2.0L) * e + ipow(e, k - 1) / qq;
  return static_cast<double>(to_long_double(energy) / denom);
}

double energy_product_ratio(Elem q, int d, int k, std::uint64_t set_size,
                            const Count& product) {
  const long double qq = q;
  const long double e = static_cast<long double>(set_size);
  const long double denom = std::pow(qq, (d - 1) * (k - 2)) * e * e +
                            std::pow(qq, ((d - 1) * (k - 3) - 2) / 2.0L) * ipow(e, k + 1) +
                            ipow(e, 2 * k - 2) / (qq * qq);
  return static_cast<double>(to_long_double(product) / denom);
}

}  // namespace fqs
