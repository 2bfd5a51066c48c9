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

#include "fqspectra/energy.h"

#include <algorithm>
#include <limits>
#include <ostream>
#include <string>

#include "fqspectra/error.h"

namespace fqs {

CountTable::CountTable(Elem q, int dim, std::uint64_t size, bool wide)
    : q_(q), dim_(dim), wide_(wide) {
  if (wide) {
    big_.assign(size, Count(0));
  } else {
    small_.assign(size, 0);
  }
}

void CountTable::add(std::uint64_t i, const Count& v) {
  if (wide_) {
    big_[i] += v;
  } else {
    small_[i] += v.convert_to<std::uint64_t>();
  }
}

Count CountTable::total() const {
  Count t = 0;
  if (wide_) {
    for (const auto& v : big_) t += v;
  } else {
    for (std::uint64_t v : small_) t += v;
  }
  return t;
}

Count CountTable::square_sum() const {
  Count t = 0;
  if (wide_) {
    for (const auto& v : big_) t += v * v;
  } else {
    for (std::uint64_t v : small_) {
      if (v != 0) t += Count(v) * v;
    }
  }
  return t;
}

Count power(const Count& base, int e) {
  Count r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

namespace {

template <class T>
void fold_step(const AffineSpace& space, const std::vector<T>& prev,
               std::span<const PointId> set, std::vector<T>& next) {
  std::fill(next.begin(), next.end(), T(0));
  for (std::uint64_t z = 0; z < prev.size(); ++z) {
    if (prev[z] == 0) continue;
    const T& v = prev[z];
    for (PointId e : set) next[space.add(static_cast<PointId>(z), e)] += v;
  }
}

std::uint64_t fold_cost(std::uint64_t set_size, std::uint64_t space_size, int j) {
  // Sparse fold i -> i+1 touches at most min(|E|^i, q^d) nonzero entries.
  long double cost = 0;
  long double support = 1;
  for (int i = 1; i < j; ++i) {
    support = std::min<long double>(support * set_size, space_size);
    cost += support * set_size;
  }
  return cost > static_cast<long double>(std::numeric_limits<std::uint64_t>::max())
             ? std::numeric_limits<std::uint64_t>::max()
             : static_cast<std::uint64_t>(cost);
}

Elem eval_point(const FieldContext& f, const PolySpec& poly,
                std::span<const Elem> x) {
  return eval_poly(f, poly, x);
}

}  // namespace

CountTable fold_counts(const AffineSpace& space, std::span<const PointId> set,
                       int j, std::uint64_t budget) {
  if (j < 0) throw Error(ErrorCode::kInvalidArgument, "fold depth must be >= 0");
  for (PointId e : set) {
    if (e >= space.size()) throw Error(ErrorCode::kInvalidArgument, "point out of range");
  }
  const std::uint64_t cost = fold_cost(set.size(), space.size(), j);
  if (cost > budget) {
    throw Error(ErrorCode::kBudgetExceeded,
                "fold of depth " + std::to_string(j) + " needs ~" + std::to_string(cost) +
                    " operations, budget is " + std::to_string(budget));
  }
  const bool wide = power(Count(set.size()), j) >= (Count(1) << 63);
  CountTable table(space.q(), space.dim(), space.size(), wide);
  if (j == 0) {
    table.add(0, 1);
    return table;
  }
  if (wide) {
    auto& cur = table.big();
    for (PointId e : set) cur[e] += 1;
    std::vector<Count> next(space.size());
    for (int i = 1; i < j; ++i) {
      fold_step(space, cur, set, next);
      cur.swap(next);
    }
  } else {
    auto& cur = table.small();
    for (PointId e : set) cur[e] += 1;
    std::vector<std::uint64_t> next(space.size());
    for (int i = 1; i < j; ++i) {
      fold_step(space, cur, set, next);
      cur.swap(next);
    }
  }
  return table;
}

Count lambda_k(const AffineSpace& space, std::span<const PointId> set, int k) {
  if (k < 2 || k % 2 != 0) {
    throw Error(ErrorCode::kOddK, "Lambda_k needs an even k >= 2, got k = " + std::to_string(k));
  }
  return fold_counts(space, set, k / 2).square_sum();
}

EnergyProfile energy_profile(const AffineSpace& space,
                             std::span<const PointId> set, int max_k) {
  EnergyProfile prof;
  prof.size = set.size();
  const int top_even = max_k % 2 == 0 ? max_k : max_k + 1;
  for (int k = 2; k <= top_even; k += 2) prof.lambda[k] = lambda_k(space, set, k);
  for (int k = 3; k <= max_k; k += 2) {
    prof.odd_products[k] = prof.lambda.at(k - 1) * prof.lambda.at(k + 1);
  }
  return prof;
}

const Count& profile_lambda(const EnergyProfile& profile, int k) {
  static const Count kOne = 1;
  if (k == 0) return kOne;
  auto it = profile.lambda.find(k);
  if (it == profile.lambda.end()) {
    throw Error(ErrorCode::kInvalidArgument,
                "energy of order " + std::to_string(k) + " not in profile");
  }
  return it->second;
}

namespace {

// Pushes the mass of `fold` through z -> value(z) into a table over F_q.
template <class ValueFn>
CountTable push_forward(const AffineSpace& space, const CountTable& fold,
                        ValueFn&& value) {
  CountTable out(space.q(), 1, space.q(), fold.wide());
  std::vector<Elem> x(space.dim());
  for (std::uint64_t z = 0; z < fold.size(); ++z) {
    if (!fold.nonzero(z)) continue;
    space.decode(static_cast<PointId>(z), x);
    const Elem v = value(std::span<const Elem>(x));
    if (fold.wide()) {
      out.big()[v] += fold.big()[z];
    } else {
      out.small()[v] += fold.small()[z];
    }
  }
  return out;
}

}  // namespace

CountTable nu_from_fold(const AffineSpace& space, const CountTable& fold,
                        const QuadraticForm& form) {
  if (form.dim() != space.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "form and space dimensions differ");
  }
  const FieldContext& f = space.field();
  return push_forward(space, fold, [&](std::span<const Elem> x) { return form.eval(f, x); });
}

CountTable nu_k(const AffineSpace& space, std::span<const PointId> set,
                const QuadraticForm& form, int k) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be >= 1");
  return nu_from_fold(space, fold_counts(space, set, k), form);
}

CountTable nu_P_from_fold(const AffineSpace& space, const CountTable& fold,
                          std::span<const Elem> shifts,
                          const DiagonalPoly& poly) {
  if (shifts.empty()) throw Error(ErrorCode::kEmptyX, "shift set X is empty");
  if (poly.dim() != space.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "polynomial and space dimensions differ");
  }
  const FieldContext& f = space.field();
  std::vector<Elem> xs(shifts.begin(), shifts.end());
  std::sort(xs.begin(), xs.end());
  if (std::adjacent_find(xs.begin(), xs.end()) != xs.end()) {
    throw Error(ErrorCode::kInvalidArgument, "shift set X has duplicates");
  }
  for (Elem a : xs) {
    if (a >= f.q()) throw Error(ErrorCode::kInvalidArgument, "shift out of range");
  }
  const CountTable base =
      push_forward(space, fold, [&](std::span<const Elem> x) { return poly.eval(f, x); });
  CountTable out(f.q(), 1, f.q(), base.wide());
  for (Elem u = 0; u < f.q(); ++u) {
    if (!base.nonzero(u)) continue;
    for (Elem a : xs) {
      const Elem t = f.add(a, u);
      if (base.wide()) {
        out.big()[t] += base.big()[u];
      } else {
        out.small()[t] += base.small()[u];
      }
    }
  }
  return out;
}

CountTable nu_P_k(const AffineSpace& space, std::span<const PointId> set,
                  std::span<const Elem> shifts, const DiagonalPoly& poly, int k) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be >= 1");
  if (shifts.empty()) throw Error(ErrorCode::kEmptyX, "shift set X is empty");
  return nu_P_from_fold(space, fold_counts(space, set, k), shifts, poly);
}

DeltaSet support_set(const CountTable& table) {
  DeltaSet d;
  for (std::uint64_t t = 0; t < table.size(); ++t) {
    if (table.nonzero(t)) d.values.push_back(static_cast<Elem>(t));
  }
  const std::size_t q = table.size();
  d.covers_all = d.values.size() == q;
  const std::size_t nonzero_hits =
      d.values.size() - (!d.values.empty() && d.values.front() == 0 ? 1 : 0);
  d.covers_nonzero = nonzero_hits == q - 1;
  return d;
}

DeltaSet delta_from_fold(const AffineSpace& space, const CountTable& fold,
                         const PolySpec& poly) {
  if (poly.dim() != space.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "polynomial and space dimensions differ");
  }
  const FieldContext& f = space.field();
  return support_set(push_forward(
      space, fold, [&](std::span<const Elem> x) { return eval_point(f, poly, x); }));
}

DeltaSet delta_set(const AffineSpace& space, std::span<const PointId> set,
                   const PolySpec& poly, int k) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be >= 1");
  return delta_from_fold(space, fold_counts(space, set, k), poly);
}

Count second_moment(const CountTable& nu, std::uint64_t shift_count,
                    std::uint64_t set_size, int k) {
  const Count expected = Count(shift_count) * power(Count(set_size), k);
  const Count total = nu.total();
  if (total != expected) {
    throw Error(ErrorCode::kInconsistentTotal,
                "table sums to " + total.str() + ", expected |X||E|^k = " + expected.str());
  }
  return nu.square_sum();
}

Rational sumset_lower_bound(std::uint64_t shift_count, std::uint64_t set_size,
                            int k, const Count& second) {
  if (second.is_zero()) return Rational(0);
  const Count num = Count(shift_count) * shift_count * power(Count(set_size), 2 * k);
  return Rational(num, second);
}

std::uint64_t sumset_size(const FieldContext& f, std::span<const Elem> shifts,
                          std::span<const Elem> values) {
  std::vector<std::uint8_t> hit(f.q(), 0);
  for (Elem a : shifts) {
    for (Elem v : values) hit[f.add(a, v)] = 1;
  }
  return static_cast<std::uint64_t>(std::count(hit.begin(), hit.end(), 1));
}

void write_count_table_csv(std::ostream& out, const CountTable& table) {
  out << "t,count\n";
  for (std::uint64_t t = 0; t < table.size(); ++t) {
    out << t << ',' << table.at(t) << '\n';
  }
}

}  // namespace fqs
