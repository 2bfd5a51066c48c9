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

#include "fqspectra/regularity.h"

#include <algorithm>
#include <cmath>

#include "fqspectra/error.h"

namespace fqs {

namespace {
constexpr std::uint64_t kCrossCheckLimit = 50'000'000;
}  // namespace

RegularityReport regularity_check(const AffineSpace& space, const Variety& v,
                                  const RegularityThresholds& thresholds,
                                  int threads) {
  if (v.points.empty()) throw Error(ErrorCode::kEmptyVariety, "variety has no points");
  if (space.size() > kMaxRegularityScan) {
    throw Error(ErrorCode::kSearchSpaceTooLarge, "q^d exceeds 10^7 for the m-scan");
  }
  const double q = space.q();
  const int d = space.dim();

  // sum_{x in V} chi(-m.x) = lambda_{-m}; the maximum over m != 0 is the same
  // as over -m != 0, so the Cayley spectrum of V carries everything needed.
  const Spectrum spec = cayley_spectrum(
      space, v.points, {.method = SpectrumMethod::kTransform, .threads = threads});

  RegularityReport r;
  double parseval = 0.0;
  for (std::size_t m = 0; m < spec.eigenvalues.size(); ++m) {
    const double mod = std::abs(spec.eigenvalues[m]);
    parseval += mod * mod;
    if (m != 0 && mod > r.max_sum) {
      r.max_sum = mod;
      r.argmax_m = static_cast<PointId>(m);
    }
  }
  const double expected = static_cast<double>(space.size()) * v.points.size();
  r.parseval_rel_error = std::abs(parseval - expected) / expected;
  r.parseval_ok = r.parseval_rel_error <= 1e-6;

  if (space.size() * v.points.size() <= kCrossCheckLimit) {
    const Spectrum direct = cayley_spectrum(
        space, v.points, {.method = SpectrumMethod::kDirect, .threads = threads});
    double worst = 0.0;
    const double scale = std::max<double>(1.0, v.points.size());
    for (std::size_t m = 0; m < spec.eigenvalues.size(); ++m) {
      worst = std::max(worst, std::abs(spec.eigenvalues[m] - direct.eigenvalues[m]) / scale);
    }
    r.cross_checked = true;
    r.cross_check_rel_error = worst;
  }

  r.c1 = static_cast<double>(v.points.size()) / std::pow(q, d - 1);
  r.c2 = r.max_sum / std::pow(q, (d - 1) / 2.0);
  r.verdict = thresholds.c1_lo <= r.c1 && r.c1 <= thresholds.c1_hi &&
              r.c2 <= thresholds.c2_max;
  return r;
}

}  // namespace fqs
