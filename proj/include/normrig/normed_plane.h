// Copyright 2026 The Authors.
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

#ifndef NORMRIG_NORMED_PLANE_H_
#define NORMRIG_NORMED_PLANE_H_

#include <cstdint>
#include <memory>
#include <string>
#include "absl/strings/string_view.h"
#include <vector>

#include "absl/status/statusor.h"
#include "normrig/graph.h"

namespace normrig {

// Coordinates in the standard basis b1 = (1,0), b2 = (0,1).
struct PlanePoint {
  double x = 0.0;
  double y = 0.0;

  friend PlanePoint operator-(PlanePoint p, PlanePoint q) {
    return {p.x - q.x, p.y - q.y};
  }
  friend PlanePoint operator*(double s, PlanePoint p) {
    return {s * p.x, s * p.y};
  }
  friend bool operator==(const PlanePoint&, const PlanePoint&) = default;
};

// Linear functional on the plane, acting by the dot pairing.
struct Covector {
  double x = 0.0;
  double y = 0.0;

  double operator()(PlanePoint p) const { return x * p.x + y * p.y; }
};

// A smooth, strictly convex normed plane. Subclasses supply the norm, the
// (unique) support functional at nonzero points, and the dimension of the
// space of trivial infinitesimal flexes.
class NormedPlane {
 public:
  virtual ~NormedPlane() = default;

  virtual double Norm(PlanePoint z) const = 0;
  // The functional f with f(z) = |z|^2 and dual norm |z|. z must be nonzero.
  virtual absl::StatusOr<Covector> SupportFunctional(PlanePoint z) const = 0;
  virtual int TrivialFlexDimension() const = 0;
  virtual bool IsAnalytic() const = 0;
  virtual std::string Name() const = 0;
};

// The lp norm (|x|^p + |y|^p)^(1/p) for 1 < p < inf, p != 2.
class LpPlane final : public NormedPlane {
 public:
  static absl::StatusOr<std::shared_ptr<const LpPlane>> Create(double p);

  double exponent() const { return p_; }

  double Norm(PlanePoint z) const override;
  absl::StatusOr<Covector> SupportFunctional(PlanePoint z) const override;
  // Linear isometries of lp (p != 2) are finite, so only translations.
  int TrivialFlexDimension() const override { return 2; }
  // Analytic off the origin iff p is an even integer.
  bool IsAnalytic() const override;
  std::string Name() const override;

 private:
  explicit LpPlane(double p) : p_(p) {}
  double p_;
};

using NormHandle = std::shared_ptr<const NormedPlane>;

// Parses "lp:<p>", e.g. "lp:4" or "lp:1.5".
absl::StatusOr<NormHandle> ParseNorm(absl::string_view spec);
NormHandle DefaultNorm();  // lp:4

// Placement aligned with Graph::vertices(): points[i] sits at vertices()[i].
using Placement = std::vector<PlanePoint>;

// Independent uniform samples from [-radius, radius]^2, deterministic in seed.
absl::StatusOr<Placement> RandomPlacement(const Graph& g, double radius,
                                          uint64_t seed);
// As RandomPlacement, then the designated v is moved onto u.
absl::StatusOr<Placement> RandomUvCoincidentPlacement(const Graph& g,
                                                      double radius,
                                                      uint64_t seed);

}  // namespace normrig

#endif  // NORMRIG_NORMED_PLANE_H_
