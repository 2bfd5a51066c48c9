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

#ifndef FQSPECTRA_REGULARITY_H_
#define FQSPECTRA_REGULARITY_H_

#include "fqspectra/geometry.h"
#include "fqspectra/spectra.h"

namespace fqs {

struct RegularityThresholds {
  double c1_lo = 0.5;
  double c1_hi = 2.0;
  double c2_max = 3.0;
};

inline constexpr std::uint64_t kMaxRegularityScan = 10'000'000;

// Measured constants of a variety at fixed q:
//   c1 = |V| / q^{d-1}
//   c2 = q^{(d+1)/2} max_{m != 0} |hat 1_V(m)|
//      = max_{m != 0} |sum_{x in V} chi(-m.x)| / q^{(d-1)/2}
struct RegularityReport {
  double c1 = 0.0;
  double c2 = 0.0;
  double max_sum = 0.0;  // largest nontrivial character-sum modulus
  PointId argmax_m = 0;
  bool verdict = false;
  // sum_m |sum_{x in V} chi(-m.x)|^2 against q^d |V|.
  double parseval_rel_error = 0.0;
  bool parseval_ok = true;
  // Direct summation cross-check, run when q^d |V| is small enough.
  bool cross_checked = false;
  double cross_check_rel_error = 0.0;
};

RegularityReport regularity_check(const AffineSpace& space, const Variety& v,
                                  const RegularityThresholds& thresholds = {},
                                  int threads = 1);

}  // namespace fqs

#endif  // FQSPECTRA_REGULARITY_H_
