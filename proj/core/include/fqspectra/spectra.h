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

#ifndef FQSPECTRA_SPECTRA_H_
#define FQSPECTRA_SPECTRA_H_

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "fqspectra/count.h"
#include "fqspectra/field.h"
#include "fqspectra/geometry.h"

namespace fqs {

inline constexpr std::uint64_t kMaxSpectrumOrder = 10'000'000;

enum class SpectrumMethod {
  kAuto,
  // lambda_m = sum_{s in S} chi(m.s), one character sum per m.
  kDirect,
  // One DFT over (Z_p)^{nD}, then an index remap through the trace form.
  kTransform,
};

struct SpectrumOptions {
  SpectrumMethod method = SpectrumMethod::kAuto;
  int threads = 1;
};

// Eigenvalues of the Cayley (di)graph on F_q^D with connection set S,
// indexed by the character m.
struct Spectrum {
  Elem q = 0;
  int dim = 0;
  std::uint64_t order = 0;   // q^D
  std::uint64_t degree = 0;  // |S|
  std::vector<Complex> eigenvalues;
  // Largest |lambda_m| among eigenvalues whose modulus differs from the
  // degree; 0 when every eigenvalue has modulus 0 or degree.
  double lambda = 0.0;
  PointId argmax_m = 0;
  // max_{m != 0} |lambda_m| with nothing excluded. This is the constant for
  // which the mixing inequality holds on every connection set; it differs
  // from `lambda` only when a nontrivial character has modulus equal to the
  // degree (S inside a coset of a proper subgroup).
  double mixing_lambda = 0.0;
};

// Tolerance used to decide |lambda_m| == degree.
inline constexpr double kDegreeTolerance = 1e-9;

std::pair<double, PointId> second_eigenvalue(std::span<const Complex> eig,
                                             std::uint64_t degree);

// Single character sum sum_{s in S} chi(m.s), accumulated exactly by residue
// class of the trace before the final complex combination.
Complex character_sum(const AffineSpace& space, std::span<const PointId> set,
                      PointId m);

Spectrum cayley_spectrum(const AffineSpace& space, std::span<const PointId> set,
                         const SpectrumOptions& options = {});

struct BoundCheck {
  bool asserted = false;  // false when the inputs fall outside the hypothesis
  double bound = 0.0;
  bool holds = true;
};

inline constexpr double kBoundSlack = 1e-6;

// Connection set {x != 0 : Q(x) = t} of the finite Euclidean graph.
std::vector<PointId> euclidean_connection_set(const AffineSpace& space,
                                              const QuadraticForm& form, Elem t);

struct EuclideanSpectrum {
  Spectrum spectrum;
  Elem t = 0;
  // lambda <= 2 q^{(d-1)/2}; only asserted for t != 0.
  BoundCheck check;
};

EuclideanSpectrum euclidean_spectrum(const AffineSpace& space,
                                     const QuadraticForm& form, Elem t,
                                     const SpectrumOptions& options = {});

// Rejects non-admissible P for the affine graph (p | s, coefficient range).
void validate_affine_poly(const FieldContext& f, const DiagonalPoly& poly);

// F_q x F_q^{2d} as F_q^{2d+1} with x_0 as the leading coordinate.
AffineSpace affine_graph_space(const FieldContext& f, const DiagonalPoly& poly);

// S = {(x_0, x) : x_0 + P(x_1..x_d) - P(x_{d+1}..x_{2d}) = 0}.
std::vector<PointId> affine_connection_set(const AffineSpace& big,
                                           const DiagonalPoly& poly);

// sum_{y in F_q} chi(alpha y^s + beta y)
Complex weil_sum(const FieldContext& f, Elem alpha, Elem beta, int s);

struct AffineSpectrum {
  Spectrum spectrum;
  // lambda <= q^d
  BoundCheck check;
};

// Closed form: the eigenvalue at (m_0, m) factors into 2d one-variable Weil
// sums, so no connection set is materialised.
AffineSpectrum affine_cayley_spectrum(const FieldContext& f,
                                      const DiagonalPoly& poly,
                                      const SpectrumOptions& options = {});

// lambda(C_{P'}) from the factorisation alone: the maximum over m_0 != 0 of
// the product of per-coordinate maxima. Works beyond the 10^7 vertex cap.
double affine_lambda(const FieldContext& f, const DiagonalPoly& poly);
// max_{m != 0} |lambda_m| of C_{P'}, the constant used by mixing audits.
double affine_mixing_lambda(const FieldContext& f, const DiagonalPoly& poly);

struct NormalityOptions {
  // Full pair scan when the number of unordered pairs is at most this;
  // otherwise this many seeded random pairs.
  std::uint64_t max_pairs = 200'000;
  std::uint64_t seed = 0;
};

// |N+(x,y)| == |N-(x,y)| for the Cayley digraph x -> y iff y - x in S.
bool normality_check(const AffineSpace& space, std::span<const PointId> set,
                     const NormalityOptions& options = {});

struct Digraph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;
};

bool normality_check(const Digraph& g);

// Edge oracle for Cayley graphs: x -> y iff y - x in S.
class ConnectionSet {
 public:
  ConnectionSet(AffineSpace space, std::span<const PointId> set);

  const AffineSpace& space() const { return space_; }
  std::span<const PointId> points() const { return points_; }
  bool contains(PointId x) const { return member_[x] != 0; }
  bool has_edge(PointId from, PointId to) const {
    return contains(space_.sub(to, from));
  }

 private:
  AffineSpace space_;
  std::vector<PointId> points_;
  std::vector<std::uint8_t> member_;
};

// Vertices with multiplicities; entries sorted by point, no duplicates.
struct Multiset {
  std::vector<std::pair<PointId, std::uint64_t>> entries;

  static Multiset from_points(std::vector<PointId> points);
  Count mass() const;
  Count square_norm() const;  // sum of m(x)^2
};

Count edge_count(const ConnectionSet& graph, const Multiset& from,
                 const Multiset& to);

struct MixingAudit {
  Count observed;            // e(B, C)
  long double main_term = 0;  // degree |B| |C| / n
  long double bound = 0;      // lambda sqrt(sum m_B^2) sqrt(sum m_C^2)
  long double gap = 0;        // bound - |observed - main_term|
  bool holds = true;          // gap >= -1e-6 bound
};

// Evaluates the multiset mixing inequality from precomputed quantities.
MixingAudit mixing_inequality(const Count& observed, const Count& degree,
                              const Count& order, const Count& mass_from,
                              const Count& mass_to, const Count& square_from,
                              const Count& square_to, double lambda);

MixingAudit mixing_audit(const Spectrum& spectrum, const ConnectionSet& graph,
                         const Multiset& from, const Multiset& to);

}  // namespace fqs

#endif  // FQSPECTRA_SPECTRA_H_
