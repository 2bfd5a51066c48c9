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

#ifndef FQSPECTRA_GEOMETRY_H_
#define FQSPECTRA_GEOMETRY_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fqspectra/field.h"

namespace fqs {

// Points of F_q^D are encoded as x_1 q^{D-1} + ... + x_D, so increasing
// encodings enumerate points lexicographically by coordinate.
using PointId = std::uint32_t;

inline constexpr std::uint64_t kMaxEnumeration = 100'000'000;

// The additive group F_q^D with the lexicographic point encoding. Viewed as
// (Z_p)^{nD}, a PointId is a base-p number with nD digits and group addition
// is carry-free digitwise addition.
class AffineSpace {
 public:
  AffineSpace(FieldContext field, int dim);

  const FieldContext& field() const { return field_; }
  int dim() const { return dim_; }
  Elem q() const { return field_.q(); }
  std::uint64_t size() const { return size_; }
  // Number of base-p digits of an encoding (n * dim).
  int digits() const { return static_cast<int>(digit_weight_.size()); }
  std::span<const std::uint64_t> digit_weights() const { return digit_weight_; }

  PointId encode(std::span<const Elem> coords) const;
  void decode(PointId x, std::span<Elem> coords) const;
  std::vector<Elem> decode(PointId x) const;

  PointId add(PointId a, PointId b) const { return combine(a, b, false); }
  PointId sub(PointId a, PointId b) const { return combine(a, b, true); }
  PointId neg(PointId a) const { return combine(0, a, true); }

  // Tr(m . x) in F_p as 0..p-1.
  int trace_dot(std::span<const Elem> m, std::span<const Elem> x) const;

 private:
  PointId combine(PointId a, PointId b, bool subtract) const;

  FieldContext field_;
  int dim_;
  std::uint64_t size_;
  std::vector<std::uint64_t> coord_weight_;
  std::vector<std::uint64_t> digit_weight_;
};

struct Monomial {
  Elem coef = 0;
  std::vector<int> exponents;
};

inline constexpr int kMaxTotalDegree = 64;

// F(x) = sum of coef * prod x_i^{e_i}. Coefficients are nonzero and exponent
// vectors are distinct; a constant term has the all-zero exponent vector.
class PolySpec {
 public:
  PolySpec() = default;
  static PolySpec make(int dim, std::vector<Monomial> terms);

  int dim() const { return dim_; }
  const std::vector<Monomial>& terms() const { return terms_; }
  int total_degree() const;

  // sum x_i^2 - j
  static PolySpec sphere(const FieldContext& f, int dim, Elem j);
  // x_1^2 + ... + x_{d-1}^2 - x_d
  static PolySpec paraboloid(const FieldContext& f, int dim);
  // x_1 x_2 ... x_d - j
  static PolySpec minkowski(const FieldContext& f, int dim, Elem j);

  // Text form such as "x1^2 + x2^2 + 2"; coefficients are element encodings.
  std::string to_string() const;
  static PolySpec parse(const FieldContext& f, int dim, const std::string& text);

 private:
  int dim_ = 0;
  std::vector<Monomial> terms_;
};

Elem eval_poly(const FieldContext& f, const PolySpec& spec,
               std::span<const Elem> x);

// Q(x) = x^T M x with M symmetric and non-singular over F_q.
class QuadraticForm {
 public:
  static QuadraticForm make(const FieldContext& f, int dim,
                            std::vector<Elem> matrix);
  static QuadraticForm diagonal(const FieldContext& f, std::vector<Elem> diag);
  static QuadraticForm sum_of_squares(const FieldContext& f, int dim);

  int dim() const { return dim_; }
  Elem entry(int i, int j) const { return matrix_[i * dim_ + j]; }
  Elem eval(const FieldContext& f, std::span<const Elem> x) const;
  PolySpec to_poly(const FieldContext& f) const;

 private:
  int dim_ = 0;
  std::vector<Elem> matrix_;
};

Elem determinant(const FieldContext& f, int dim, std::vector<Elem> matrix);

// P(x) = sum a_j x_j^s with every a_j != 0 and s >= 2.
class DiagonalPoly {
 public:
  static DiagonalPoly make(std::vector<Elem> coeffs, int s);
  // Recognises a diagonal polynomial; throws NotDiagonal otherwise.
  static DiagonalPoly from_poly(const PolySpec& spec);

  int dim() const { return static_cast<int>(coeffs_.size()); }
  int exponent() const { return s_; }
  std::span<const Elem> coeffs() const { return coeffs_; }
  Elem eval(const FieldContext& f, std::span<const Elem> x) const;
  PolySpec to_poly() const;

 private:
  std::vector<Elem> coeffs_;
  int s_ = 2;
};

// Zero set of a polynomial, or an imported point list when spec is empty.
struct Variety {
  int dim = 0;
  std::optional<PolySpec> spec;
  std::vector<PointId> points;  // sorted, duplicate-free

  std::size_t size() const { return points.size(); }
};

Variety enumerate_variety(const AffineSpace& space, const PolySpec& spec);

struct VarietyFamily {
  enum class Kind { kSphere, kParaboloid, kMinkowski };
  Kind kind = Kind::kSphere;
  Elem j = 1;

  static VarietyFamily parse(const std::string& name, Elem j);
  std::string name() const;
};

Variety builtin_variety(const AffineSpace& space, const VarietyFamily& family);

// Header "q d |V|" then one point per line as comma-separated coordinates.
void write_variety(std::ostream& out, const AffineSpace& space,
                   const Variety& v);
Variety read_variety(std::istream& in, const AffineSpace& space);

// Sorts and deduplicates in place; throws if a point is out of range.
void normalize_point_set(const AffineSpace& space, std::vector<PointId>& pts);

}  // namespace fqs

#endif  // FQSPECTRA_GEOMETRY_H_
