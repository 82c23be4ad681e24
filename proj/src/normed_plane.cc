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

#include "normrig/normed_plane.h"

#include <charconv>
#include <cmath>
#include <random>

#include "absl/strings/string_view.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"

namespace normrig {

absl::StatusOr<std::shared_ptr<const LpPlane>> LpPlane::Create(double p) {
  if (!std::isfinite(p) || p <= 1.0)
    return absl::InvalidArgumentError(
        absl::StrCat("lp norm needs 1 < p < inf, got ", p));
  if (p == 2.0)
    return absl::InvalidArgumentError(
        "lp:2 is Euclidean; only non-Euclidean planes are supported");
  return std::shared_ptr<const LpPlane>(new LpPlane(p));
}

double LpPlane::Norm(PlanePoint z) const {
  const double ax = std::abs(z.x), ay = std::abs(z.y);
  const double m = std::max(ax, ay);
  if (m == 0.0) return 0.0;
  return m * std::pow(std::pow(ax / m, p_) + std::pow(ay / m, p_), 1.0 / p_);
}

// phi_z = |z|^(2-p) (sign(z_i) |z_i|^(p-1))_i, written in the scaled form
// |z| * sign(z_i) (|z_i| / |z|)^(p-1) to avoid overflow for large p.
absl::StatusOr<Covector> LpPlane::SupportFunctional(PlanePoint z) const {
  const double n = Norm(z);
  if (n == 0.0)
    return absl::InvalidArgumentError(
        "support functional requested at the origin");
  auto component = [&](double c) {
    return n * std::copysign(std::pow(std::abs(c) / n, p_ - 1.0), c);
  };
  return Covector{component(z.x), component(z.y)};
}

bool LpPlane::IsAnalytic() const {
  return std::floor(p_) == p_ && static_cast<long long>(p_) % 2 == 0;
}

std::string LpPlane::Name() const { return absl::StrFormat("lp:%g", p_); }

absl::StatusOr<NormHandle> ParseNorm(absl::string_view spec) {
  constexpr absl::string_view kPrefix = "lp:";
  if (spec.substr(0, kPrefix.size()) != kPrefix)
    return absl::InvalidArgumentError(
        absl::StrCat("--norm: expected lp:<p>, got '", spec, "'"));
  const absl::string_view digits = spec.substr(kPrefix.size());
  double p = 0.0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (ec != std::errc() || ptr != digits.data() + digits.size())
    return absl::InvalidArgumentError(
        absl::StrCat("--norm: bad exponent '", digits, "'"));
  auto plane = LpPlane::Create(p);
  if (!plane.ok()) return plane.status();
  return NormHandle(*std::move(plane));
}

NormHandle DefaultNorm() { return *LpPlane::Create(4.0); }

absl::StatusOr<Placement> RandomPlacement(const Graph& g, double radius,
                                          uint64_t seed) {
  if (!(radius > 0.0))
    return absl::InvalidArgumentError("placement radius must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-radius, radius);
  Placement out(g.num_vertices());
  for (PlanePoint& p : out) {
    p.x = coord(rng);
    p.y = coord(rng);
  }
  return out;
}

absl::StatusOr<Placement> RandomUvCoincidentPlacement(const Graph& g,
                                                      double radius,
                                                      uint64_t seed) {
  const auto& pair = g.designated_pair();
  if (!pair)
    return absl::FailedPreconditionError(
        "uv-coincident placement needs a designated pair");
  if (pair->u == pair->v)
    return absl::InvalidArgumentError("designated pair must be distinct");
  auto placement = RandomPlacement(g, radius, seed);
  if (!placement.ok()) return placement;
  (*placement)[g.IndexOf(pair->v)] = (*placement)[g.IndexOf(pair->u)];
  return placement;
}

}  // namespace normrig
