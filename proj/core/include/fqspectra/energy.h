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

#ifndef FQSPECTRA_ENERGY_H_
#define FQSPECTRA_ENERGY_H_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <vector>

#include "fqspectra/count.h"
#include "fqspectra/geometry.h"

namespace fqs {

// Exact nonnegative counts over F_q^D (dim = D) or over F_q (dim = 1).
// Storage is 64-bit while the defining total stays below 2^63 and switches
// to arbitrary precision above that.
class CountTable {
 public:
  CountTable() = default;
  CountTable(Elem q, int dim, std::uint64_t size, bool wide);

  Elem q() const { return q_; }
  int dim() const { return dim_; }
  std::uint64_t size() const { return wide_ ? big_.size() : small_.size(); }
  bool wide() const { return wide_; }

  Count at(std::uint64_t i) const { return wide_ ? big_[i] : Count(small_[i]); }
  bool nonzero(std::uint64_t i) const {
    return wide_ ? !big_[i].is_zero() : small_[i] != 0;
  }
  void add(std::uint64_t i, const Count& v);

  Count total() const;
  Count square_sum() const;

  std::vector<std::uint64_t>& small() { return small_; }
  const std::vector<std::uint64_t>& small() const { return small_; }
  std::vector<Count>& big() { return big_; }
  const std::vector<Count>& big() const { return big_; }

 private:
  Elem q_ = 0;
  int dim_ = 0;
  bool wide_ = false;
  std::vector<std::uint64_t> small_;
  std::vector<Count> big_;
};

inline constexpr std::uint64_t kFoldBudget = 1'000'000'000;

Count power(const Count& base, int e);

// r_j(z) = #{(x_1..x_j) in E^j : x_1 + ... + x_j = z}, by iterated sparse
// folds r_j = r_{j-1} * 1_E. j = 0 gives the point mass at 0.
CountTable fold_counts(const AffineSpace& space, std::span<const PointId> set,
                       int j, std::uint64_t budget = kFoldBudget);

// Lambda_k(E) = sum_z r_{k/2}(z)^2 for even k >= 2.
Count lambda_k(const AffineSpace& space, std::span<const PointId> set, int k);

struct EnergyProfile {
  std::uint64_t size = 0;
  std::map<int, Count> lambda;        // even k
  std::map<int, Count> odd_products;  // odd k: Lambda_{k-1} Lambda_{k+1}
};

// Even energies up to max_k (one further when needed by the odd products).
EnergyProfile energy_profile(const AffineSpace& space,
                             std::span<const PointId> set, int max_k);

// Energy of order k read from a profile, with Lambda_0 = 1.
const Count& profile_lambda(const EnergyProfile& profile, int k);

// nu_k(t) = sum_{z : Q(z) = t} r_k(z)
CountTable nu_k(const AffineSpace& space, std::span<const PointId> set,
                const QuadraticForm& form, int k);
CountTable nu_from_fold(const AffineSpace& space, const CountTable& fold,
                        const QuadraticForm& form);

// nu_{P,k}(t) = sum_{a in X} sum_{z : a + P(z) = t} r_k(z)
CountTable nu_P_k(const AffineSpace& space, std::span<const PointId> set,
                  std::span<const Elem> shifts, const DiagonalPoly& poly, int k);
CountTable nu_P_from_fold(const AffineSpace& space, const CountTable& fold,
                          std::span<const Elem> shifts, const DiagonalPoly& poly);

struct DeltaSet {
  std::vector<Elem> values;  // sorted
  bool covers_nonzero = false;  // contains F_q \ {0}
  bool covers_all = false;      // equals F_q
};

// Delta_{k,F}(E) = {F(z) : r_k(z) > 0}
DeltaSet delta_set(const AffineSpace& space, std::span<const PointId> set,
                   const PolySpec& poly, int k);
DeltaSet delta_from_fold(const AffineSpace& space, const CountTable& fold,
                         const PolySpec& poly);
// Support of a table over F_q, with coverage flags.
DeltaSet support_set(const CountTable& table_over_fq);

// sum_t nu(t)^2; the table must total |X| |E|^k.
Count second_moment(const CountTable& nu, std::uint64_t shift_count,
                    std::uint64_t set_size, int k);

// Cauchy-Schwarz: |X + Delta| >= |X|^2 |E|^{2k} / sum_t nu(t)^2.
Rational sumset_lower_bound(std::uint64_t shift_count, std::uint64_t set_size,
                            int k, const Count& second);

// |X + D| in F_q.
std::uint64_t sumset_size(const FieldContext& f, std::span<const Elem> shifts,
                          std::span<const Elem> values);

// CSV with header "t,count".
void write_count_table_csv(std::ostream& out, const CountTable& table);

}  // namespace fqs

#endif  // FQSPECTRA_ENERGY_H_
