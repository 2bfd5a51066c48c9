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

#ifndef FQSPECTRA_AUDITS_H_
#define FQSPECTRA_AUDITS_H_

#include <cstdint>
#include <span>
#include <string>

#include "fqspectra/count.h"
#include "fqspectra/energy.h"
#include "fqspectra/spectra.h"

namespace fqs {

// Exact counting inequalities obtained from the multiset mixing lemma with
// the measured second eigenvalue. `mixing` is the hard check; the reference
// fields restate the inequality with the idealised main term for reporting.
struct CountAudit {
  std::string kind;
  int k = 0;
  Elem t = 0;
  MixingAudit mixing;
  long double reference_main = 0;  // e.g. |E|^k / q
  bool reference_holds = true;     // |observed - reference_main| <= bound
  bool holds() const { return mixing.holds; }
};

// |nu_k(t) - |S_t| |E|^k / q^d| <= lambda(E_q(d,Q,t)) * norm, where norm is
// Lambda_k for even k and sqrt(Lambda_{k-1} Lambda_{k+1}) for odd k.
CountAudit audit_nu_deviation(const Count& nu_t, const EuclideanSpectrum& graph,
                              std::uint64_t set_size, int k,
                              const EnergyProfile& profile);

// Energy against the variety graph C_V for E subset V and even k >= 4:
//   Lambda_k <= N_V := #{(x_1..x_{k-1}) : sum_{i<=k/2} x_i - sum_{i>k/2} x_i in V}
// and N_V obeys the mixing inequality with Lambda_{k-2}, Lambda_k.
struct EnergyAudit {
  int k = 0;
  Count energy;          // Lambda_k
  Count variety_count;   // N_V
  MixingAudit mixing;    // on N_V
  bool dominated = true; // Lambda_k <= N_V
  long double upper_gap = 0;      // main + bound - Lambda_k
  long double two_sided_gap = 0;  // bound - |Lambda_k - main|, reported only
  long double reference_main = 0; // |E|^{k-1} / q
  bool holds() const { return dominated && mixing.holds && upper_gap >= -1e-6L * mixing.bound; }
};

EnergyAudit audit_energy_mixing(const ConnectionSet& variety,
                                const Spectrum& variety_graph,
                                std::span<const PointId> set, int k);

// sum_t nu_{P,k}(t)^2 against |X|^2 |E|^{2k} / q, with deviation bounded by
// lambda(C_{P'}) |X| Lambda_{k-1} Lambda_{k+1} (odd k) or |X| Lambda_k^2.
CountAudit audit_second_moment(const FieldContext& f, int d,
                               const Count& second, std::uint64_t shift_count,
                               std::uint64_t set_size, int k,
                               const EnergyProfile& profile, double lambda);

// Mixing inequality over random multiset pairs. Supports are drawn
// uniformly with repetition, so multiplicities above one occur naturally.
struct MixingSweep {
  std::uint64_t pairs = 0;
  std::uint64_t violations = 0;
  double min_gap_ratio = 1.0;  // min of gap / bound over pairs with bound > 0
  MixingAudit worst;           // the pair attaining min_gap_ratio
};

MixingSweep random_mixing_sweep(const Spectrum& spectrum, const ConnectionSet& graph,
                                std::uint64_t pairs, std::uint64_t seed,
                                std::uint64_t max_draws = 40);

// Lambda_k / (q^{(d-1)(k-2)/2} |E| + |E|^{k-1} / q) for even k.
double energy_bound_ratio(Elem q, int d, int k, std::uint64_t set_size,
                          const Count& energy);

// Lambda_{k-1} Lambda_{k+1} / (q^{(d-1)(k-2)} |E|^2
//   + q^{((d-1)(k-3)-2)/2} |E|^{k+1} + |E|^{2k-2} / q^2) for odd k.
double energy_product_ratio(Elem q, int d, int k, std::uint64_t set_size,
                            const Count& product);

}  // namespace fqs

#endif  // FQSPECTRA_AUDITS_H_
