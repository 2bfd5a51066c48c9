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

#include "fqspectra/geometry.h"

#include <algorithm>
#include <cctype>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "fqspectra/error.h"

namespace fqs {

AffineSpace::AffineSpace(FieldContext field, int dim)
    : field_(std::move(field)), dim_(dim) {
  if (dim < 1) throw Error(ErrorCode::kInvalidArgument, "dimension must be >= 1");
  size_ = 1;
  coord_weight_.assign(dim, 0);
  for (int i = dim - 1; i >= 0; --i) {
    coord_weight_[i] = size_;
    size_ *= field_.q();
    if (size_ > std::numeric_limits<PointId>::max()) {
      throw Error(ErrorCode::kSearchSpaceTooLarge,
                  "q^d does not fit the 32-bit point encoding");
    }
  }
  const int nd = field_.n() * dim;
  digit_weight_.resize(nd);
  std::uint64_t w = 1;
  for (int i = 0; i < nd; ++i, w *= field_.p()) digit_weight_[i] = w;
}

PointId AffineSpace::encode(std::span<const Elem> coords) const {
  if (static_cast<int>(coords.size()) != dim_) {
    throw Error(ErrorCode::kDimensionMismatch, "point has wrong arity");
  }
  std::uint64_t v = 0;
  for (int i = 0; i < dim_; ++i) {
    if (coords[i] >= field_.q()) {
      throw Error(ErrorCode::kInvalidArgument, "coordinate out of range");
    }
    v = v * field_.q() + coords[i];
  }
  return static_cast<PointId>(v);
}

void AffineSpace::decode(PointId x, std::span<Elem> coords) const {
  const Elem q = field_.q();
  for (int i = dim_ - 1; i >= 0; --i) {
    coords[i] = x % q;
    x /= q;
  }
}

std::vector<Elem> AffineSpace::decode(PointId x) const {
  std::vector<Elem> c(dim_);
  decode(x, c);
  return c;
}

PointId AffineSpace::combine(PointId a, PointId b, bool subtract) const {
  const PointId p = static_cast<PointId>(field_.p());
  PointId out = 0;
  PointId w = 1;
  for (std::size_t i = 0; i < digit_weight_.size(); ++i) {
    const PointId x = a % p;
    const PointId y = b % p;
    a /= p;
    b /= p;
    const PointId s = subtract ? (x >= y ? x - y : x + p - y)
                               : (x + y >= p ? x + y - p : x + y);
    out += s * w;
    w *= p;
  }
  return out;
}

int AffineSpace::trace_dot(std::span<const Elem> m,
                           std::span<const Elem> x) const {
  int s = 0;
  for (int i = 0; i < dim_; ++i) s += field_.trace_mul(m[i], x[i]);
  return s % field_.p();
}

// ---------------------------------------------------------------------------

PolySpec PolySpec::make(int dim, std::vector<Monomial> terms) {
  if (dim < 1) throw Error(ErrorCode::kInvalidArgument, "dimension must be >= 1");
  for (const auto& t : terms) {
    if (t.coef == 0) {
      throw Error(ErrorCode::kInvalidArgument, "zero coefficient in polynomial");
    }
    if (static_cast<int>(t.exponents.size()) != dim) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "exponent vector length differs from dimension");
    }
    int deg = 0;
    for (int e : t.exponents) {
      if (e < 0) throw Error(ErrorCode::kInvalidArgument, "negative exponent");
      deg += e;
    }
    if (deg > kMaxTotalDegree) {
      throw Error(ErrorCode::kInvalidArgument, "total degree exceeds 64");
    }
  }
  for (std::size_t a = 0; a < terms.size(); ++a) {
    for (std::size_t b = a + 1; b < terms.size(); ++b) {
      if (terms[a].exponents == terms[b].exponents) {
        throw Error(ErrorCode::kInvalidArgument, "repeated exponent vector");
      }
    }
  }
  PolySpec s;
  s.dim_ = dim;
  s.terms_ = std::move(terms);
  return s;
}

int PolySpec::total_degree() const {
  int best = 0;
  for (const auto& t : terms_) {
    int deg = 0;
    for (int e : t.exponents) deg += e;
    best = std::max(best, deg);
  }
  return best;
}

PolySpec PolySpec::sphere(const FieldContext& f, int dim, Elem j) {
  if (j == 0) throw Error(ErrorCode::kZeroParameter, "sphere radius j must be nonzero");
  std::vector<Monomial> terms;
  for (int i = 0; i < dim; ++i) {
    Monomial m{1, std::vector<int>(dim, 0)};
    m.exponents[i] = 2;
    terms.push_back(std::move(m));
  }
  terms.push_back({f.neg(j), std::vector<int>(dim, 0)});
  return make(dim, std::move(terms));
}

PolySpec PolySpec::paraboloid(const FieldContext& f, int dim) {
  std::vector<Monomial> terms;
  for (int i = 0; i + 1 < dim; ++i) {
    Monomial m{1, std::vector<int>(dim, 0)};
    m.exponents[i] = 2;
    terms.push_back(std::move(m));
  }
  Monomial last{f.neg(1), std::vector<int>(dim, 0)};
  last.exponents[dim - 1] = 1;
  terms.push_back(std::move(last));
  return make(dim, std::move(terms));
}

PolySpec PolySpec::minkowski(const FieldContext& f, int dim, Elem j) {
  if (j == 0) throw Error(ErrorCode::kZeroParameter, "Minkowski radius j must be nonzero");
  std::vector<Monomial> terms;
  terms.push_back({1, std::vector<int>(dim, 1)});
  terms.push_back({f.neg(j), std::vector<int>(dim, 0)});
  return make(dim, std::move(terms));
}

std::string PolySpec::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t t = 0; t < terms_.size(); ++t) {
    if (t > 0) os << " + ";
    const auto& m = terms_[t];
    bool any = false;
    if (m.coef != 1) {
      os << m.coef;
      any = true;
    }
    for (int i = 0; i < dim_; ++i) {
      if (m.exponents[i] == 0) continue;
      if (any) os << '*';
      os << 'x' << (i + 1);
      if (m.exponents[i] > 1) os << '^' << m.exponents[i];
      any = true;
    }
    if (!any) os << m.coef;
  }
  return os.str();
}

PolySpec PolySpec::parse(const FieldContext& f, int dim,
                         const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw Error(ErrorCode::kParseError, "empty polynomial");
  auto fail = [&](const std::string& why) -> Error {
    return Error(ErrorCode::kParseError, why + " in \"" + text + "\"");
  };
  auto read_uint = [&](std::size_t& pos) -> unsigned long {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) throw fail("expected a number");
    return std::stoul(s.substr(start, pos - start));
  };

  std::map<std::vector<int>, Elem> acc;
  std::size_t pos = 0;
  bool first = true;
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    } else if (!first) {
      throw fail("expected '+' or '-'");
    }
    first = false;
    Elem coef = 1;
    std::vector<int> exps(dim, 0);
    bool factor_expected = true;
    while (factor_expected) {
      if (pos >= s.size()) throw fail("unexpected end");
      if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
        const unsigned long c = read_uint(pos);
        if (c >= f.q()) throw fail("coefficient exceeds field order");
        coef = f.mul(coef, static_cast<Elem>(c));
      } else if (s[pos] == 'x') {
        ++pos;
        const unsigned long var = read_uint(pos);
        if (var < 1 || static_cast<int>(var) > dim) throw fail("variable index out of range");
        int e = 1;
        if (pos < s.size() && s[pos] == '^') {
          ++pos;
          e = static_cast<int>(read_uint(pos));
        }
        exps[var - 1] += e;
      } else {
        throw fail(std::string("unexpected character '") + s[pos] + "'");
      }
      factor_expected = pos < s.size() && s[pos] == '*';
      if (factor_expected) ++pos;
    }
    if (negative) coef = f.neg(coef);
    auto [it, inserted] = acc.emplace(exps, coef);
    if (!inserted) it->second = f.add(it->second, coef);
  }
  std::vector<Monomial> terms;
  for (auto& [e, c] : acc) {
    if (c != 0) terms.push_back({c, e});
  }
  return make(dim, std::move(terms));
}

Elem eval_poly(const FieldContext& f, const PolySpec& spec,
               std::span<const Elem> x) {
  if (static_cast<int>(x.size()) != spec.dim()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "point has " + std::to_string(x.size()) + " coordinates, polynomial expects " +
                    std::to_string(spec.dim()));
  }
  Elem total = 0;
  for (const auto& t : spec.terms()) {
    Elem v = t.coef;
    for (int i = 0; i < spec.dim() && v != 0; ++i) {
      if (t.exponents[i] != 0) v = f.mul(v, f.pow(x[i], t.exponents[i]));
    }
    total = f.add(total, v);
  }
  return total;
}

// ---------------------------------------------------------------------------

Elem determinant(const FieldContext& f, int dim, std::vector<Elem> m) {
  Elem det = 1;
  for (int col = 0; col < dim; ++col) {
    int pivot = -1;
    for (int r = col; r < dim; ++r) {
      if (m[r * dim + col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return 0;
    if (pivot != col) {
      for (int c = 0; c < dim; ++c) std::swap(m[pivot * dim + c], m[col * dim + c]);
      det = f.neg(det);
    }
    const Elem pv = m[col * dim + col];
    det = f.mul(det, pv);
    const Elem pinv = f.inv(pv);
    for (int r = col + 1; r < dim; ++r) {
      const Elem factor = f.mul(m[r * dim + col], pinv);
      if (factor == 0) continue;
      for (int c = col; c < dim; ++c) {
        m[r * dim + c] = f.sub(m[r * dim + c], f.mul(factor, m[col * dim + c]));
      }
    }
  }
  return det;
}

QuadraticForm QuadraticForm::make(const FieldContext& f, int dim,
                                  std::vector<Elem> matrix) {
  if (dim < 1 || matrix.size() != static_cast<std::size_t>(dim) * dim) {
    throw Error(ErrorCode::kDimensionMismatch, "quadratic form matrix must be d x d");
  }
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      if (matrix[i * dim + j] >= f.q()) {
        throw Error(ErrorCode::kInvalidArgument, "matrix entry out of range");
      }
      if (matrix[i * dim + j] != matrix[j * dim + i]) {
        throw Error(ErrorCode::kInvalidArgument, "quadratic form matrix must be symmetric");
      }
    }
  }
  if (determinant(f, dim, matrix) == 0) {
    throw Error(ErrorCode::kDegenerateForm, "quadratic form has zero determinant");
  }
  QuadraticForm qf;
  qf.dim_ = dim;
  qf.matrix_ = std::move(matrix);
  return qf;
}

QuadraticForm QuadraticForm::diagonal(const FieldContext& f,
                                      std::vector<Elem> diag) {
  const int d = static_cast<int>(diag.size());
  std::vector<Elem> m(static_cast<std::size_t>(d) * d, 0);
  for (int i = 0; i < d; ++i) m[i * d + i] = diag[i];
  return make(f, d, std::move(m));
}

QuadraticForm QuadraticForm::sum_of_squares(const FieldContext& f, int dim) {
  return diagonal(f, std::vector<Elem>(dim, 1));
}

Elem QuadraticForm::eval(const FieldContext& f, std::span<const Elem> x) const {
  Elem total = 0;
  for (int i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    Elem row = 0;
    for (int j = 0; j < dim_; ++j) row = f.add(row, f.mul(matrix_[i * dim_ + j], x[j]));
    total = f.add(total, f.mul(x[i], row));
  }
  return total;
}

PolySpec QuadraticForm::to_poly(const FieldContext& f) const {
  std::vector<Monomial> terms;
  for (int i = 0; i < dim_; ++i) {
    for (int j = i; j < dim_; ++j) {
      Elem c = matrix_[i * dim_ + j];
      if (i != j) c = f.add(c, c);
      if (c == 0) continue;
      Monomial m{c, std::vector<int>(dim_, 0)};
      m.exponents[i] += 1;
      m.exponents[j] += 1;
      terms.push_back(std::move(m));
    }
  }
  return PolySpec::make(dim_, std::move(terms));
}

DiagonalPoly DiagonalPoly::make(std::vector<Elem> coeffs, int s) {
  if (coeffs.empty()) throw Error(ErrorCode::kNotDiagonal, "no coefficients");
  if (s < 2) throw Error(ErrorCode::kNotDiagonal, "exponent s must be >= 2");
  for (Elem a : coeffs) {
    if (a == 0) throw Error(ErrorCode::kNotDiagonal, "diagonal coefficient a_j is zero");
  }
  DiagonalPoly d;
  d.coeffs_ = std::move(coeffs);
  d.s_ = s;
  return d;
}

DiagonalPoly DiagonalPoly::from_poly(const PolySpec& spec) {
  const int d = spec.dim();
  if (static_cast<int>(spec.terms().size()) != d) {
    throw Error(ErrorCode::kNotDiagonal, "expected exactly one term per variable");
  }
  std::vector<Elem> coeffs(d, 0);
  int s = -1;
  for (const auto& t : spec.terms()) {
    int var = -1;
    for (int i = 0; i < d; ++i) {
      if (t.exponents[i] == 0) continue;
      if (var >= 0) throw Error(ErrorCode::kNotDiagonal, "mixed monomial");
      var = i;
    }
    if (var < 0) throw Error(ErrorCode::kNotDiagonal, "constant term");
    if (s >= 0 && t.exponents[var] != s) {
      throw Error(ErrorCode::kNotDiagonal, "unequal exponents");
    }
    s = t.exponents[var];
    if (coeffs[var] != 0) throw Error(ErrorCode::kNotDiagonal, "repeated variable");
    coeffs[var] = t.coef;
  }
  return make(std::move(coeffs), s);
}

Elem DiagonalPoly::eval(const FieldContext& f, std::span<const Elem> x) const {
  Elem total = 0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    total = f.add(total, f.mul(coeffs_[i], f.pow(x[i], s_)));
  }
  return total;
}

PolySpec DiagonalPoly::to_poly() const {
  const int d = dim();
  std::vector<Monomial> terms;
  for (int i = 0; i < d; ++i) {
    Monomial m{coeffs_[i], std::vector<int>(d, 0)};
    m.exponents[i] = s_;
    terms.push_back(std::move(m));
  }
  return PolySpec::make(d, std::move(terms));
}

// ---------------------------------------------------------------------------

Variety enumerate_variety(const AffineSpace& space, const PolySpec& spec) {
  if (spec.dim() != space.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "polynomial and space dimensions differ");
  }
  if (space.size() > kMaxEnumeration) {
    throw Error(ErrorCode::kSearchSpaceTooLarge,
                "q^d = " + std::to_string(space.size()) + " exceeds 10^8");
  }
  const FieldContext& f = space.field();
  const int d = space.dim();
  Variety v;
  v.dim = d;
  v.spec = spec;
  std::vector<Elem> x(d, 0);
  for (std::uint64_t id = 0; id < space.size(); ++id) {
    if (eval_poly(f, spec, x) == 0) v.points.push_back(static_cast<PointId>(id));
    for (int i = d - 1; i >= 0; --i) {
      if (++x[i] < f.q()) break;
      x[i] = 0;
    }
  }
  return v;
}

VarietyFamily VarietyFamily::parse(const std::string& name, Elem j) {
  VarietyFamily fam;
  fam.j = j;
  if (name == "sphere") {
    fam.kind = Kind::kSphere;
  } else if (name == "paraboloid") {
    fam.kind = Kind::kParaboloid;
  } else if (name == "minkowski") {
    fam.kind = Kind::kMinkowski;
  } else {
    throw Error(ErrorCode::kInvalidArgument, "unknown variety family '" + name + "'");
  }
  return fam;
}

std::string VarietyFamily::name() const {
  switch (kind) {
    case Kind::kSphere: return "sphere";
    case Kind::kParaboloid: return "paraboloid";
    case Kind::kMinkowski: return "minkowski";
  }
  return "unknown";
}

Variety builtin_variety(const AffineSpace& space, const VarietyFamily& family) {
  const int d = space.dim();
  if (d < 2) throw Error(ErrorCode::kInvalidArgument, "built-in families need d >= 2");
  const FieldContext& f = space.field();
  if (family.kind != VarietyFamily::Kind::kParaboloid && family.j >= f.q()) {
    throw Error(ErrorCode::kInvalidArgument, "parameter j out of range");
  }
  switch (family.kind) {
    case VarietyFamily::Kind::kSphere:
      return enumerate_variety(space, PolySpec::sphere(f, d, family.j));
    case VarietyFamily::Kind::kParaboloid:
      return enumerate_variety(space, PolySpec::paraboloid(f, d));
    case VarietyFamily::Kind::kMinkowski:
      return enumerate_variety(space, PolySpec::minkowski(f, d, family.j));
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown family");
}

void write_variety(std::ostream& out, const AffineSpace& space,
                   const Variety& v) {
  out << space.q() << ' ' << space.dim() << ' ' << v.points.size() << '\n';
  std::vector<Elem> c(space.dim());
  for (PointId x : v.points) {
    space.decode(x, c);
    for (int i = 0; i < space.dim(); ++i) {
      if (i > 0) out << ',';
      out << c[i];
    }
    out << '\n';
  }
}

Variety read_variety(std::istream& in, const AffineSpace& space) {
  std::uint64_t q = 0;
  int d = 0;
  std::uint64_t count = 0;
  std::string header;
  if (!std::getline(in, header)) throw Error(ErrorCode::kParseError, "missing header");
  std::istringstream hs(header);
  if (!(hs >> q >> d >> count)) {
    throw Error(ErrorCode::kParseError, "header must be 'q d |V|'");
  }
  if (q != space.q()) {
    throw Error(ErrorCode::kInvalidArgument,
                "file is over F_" + std::to_string(q) + " but the field is F_" +
                    std::to_string(space.q()));
  }
  if (d != space.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "file dimension differs from --d");
  }
  Variety v;
  v.dim = d;
  std::string line;
  std::vector<Elem> c(d);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string cell;
    int i = 0;
    while (std::getline(ls, cell, ',')) {
      if (i >= d) throw Error(ErrorCode::kParseError, "too many coordinates: " + line);
      try {
        c[i++] = static_cast<Elem>(std::stoul(cell));
      } catch (const std::exception&) {
        throw Error(ErrorCode::kParseError, "bad coordinate: " + line);
      }
    }
    if (i != d) throw Error(ErrorCode::kParseError, "too few coordinates: " + line);
    v.points.push_back(space.encode(c));
  }
  normalize_point_set(space, v.points);
  if (v.points.size() != count) {
    throw Error(ErrorCode::kParseError, "header count disagrees with point list");
  }
  return v;
}

void normalize_point_set(const AffineSpace& space, std::vector<PointId>& pts) {
  for (PointId x : pts) {
    if (x >= space.size()) throw Error(ErrorCode::kInvalidArgument, "point out of range");
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

}  // namespace fqs
