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


#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "normrig/enumeration.h"
#include "absl/strings/str_cat.h"
#include "normrig/normed_plane.h"

namespace normrig {
namespace {

NormHandle Lp(double p) { return *ParseNorm(absl::StrCat("lp:", p)); }

TEST(NormedPlaneTest, CreateValidatesExponent) {
  EXPECT_FALSE(LpPlane::Create(2.0).ok());
  EXPECT_FALSE(LpPlane::Create(1.0).ok());
  EXPECT_FALSE(LpPlane::Create(0.5).ok());
  EXPECT_FALSE(LpPlane::Create(INFINITY).ok());
  EXPECT_FALSE(LpPlane::Create(NAN).ok());
  EXPECT_TRUE(LpPlane::Create(1.0001).ok());
}

TEST(NormedPlaneTest, ParseNorm) {
  EXPECT_EQ((*ParseNorm("lp:4"))->Name(), "lp:4");
  EXPECT_EQ((*ParseNorm("lp:1.5"))->Name(), "lp:1.5");
  EXPECT_FALSE(ParseNorm("lp:2").ok());
  EXPECT_FALSE(ParseNorm("l4").ok());
  EXPECT_FALSE(ParseNorm("lp:").ok());
  EXPECT_FALSE(ParseNorm("lp:4x").ok());
  EXPECT_EQ(DefaultNorm()->Name(), "lp:4");
}

TEST(NormedPlaneTest, Analyticity) {
  EXPECT_TRUE(Lp(4)->IsAnalytic());
  EXPECT_TRUE(Lp(6)->IsAnalytic());
  EXPECT_FALSE(Lp(3)->IsAnalytic());
  EXPECT_FALSE(Lp(1.5)->IsAnalytic());
  EXPECT_EQ(Lp(4)->TrivialFlexDimension(), 2);
}

TEST(NormedPlaneTest, NormValues) {
  EXPECT_DOUBLE_EQ(Lp(4)->Norm({1, 0}), 1.0);
  EXPECT_NEAR(Lp(4)->Norm({1, 1}), std::pow(2.0, 0.25), 1e-15);
  EXPECT_NEAR(Lp(3)->Norm({-3, 4}), std::cbrt(27.0 + 64.0), 1e-13);
  EXPECT_EQ(Lp(3)->Norm({0, 0}), 0.0);
  // Scaled evaluation survives extreme magnitudes.
  EXPECT_NEAR(Lp(7)->Norm({1e200, 1e200}) / 1e200, std::pow(2.0, 1.0 / 7), 1e-14);
  EXPECT_NEAR(Lp(7)->Norm({1e-200, 0}) / 1e-200, 1.0, 1e-14);
}

TEST(SupportFunctionalTest, PinnedValues) {
  const Covector axis = *Lp(4)->SupportFunctional({1, 0});
  EXPECT_NEAR(axis.x, 1.0, 1e-15);
  EXPECT_NEAR(axis.y, 0.0, 1e-15);
  const Covector diag = *Lp(4)->SupportFunctional({1, 1});
  EXPECT_NEAR(diag.x, std::pow(2.0, -0.5), 1e-15);
  EXPECT_NEAR(diag.y, std::pow(2.0, -0.5), 1e-15);
  EXPECT_NEAR(diag({1, 1}), std::sqrt(2.0), 1e-14);
  // The sup over the unit circle is the dual norm, 2^(1/4).
  double best = 0;
  for (int i = 0; i < 20000; ++i) {
    const double t = 2 * M_PI * i / 20000;
    const PlanePoint d{std::cos(t), std::sin(t)};
    best = std::max(best, diag((1.0 / Lp(4)->Norm(d)) * d));
  }
  EXPECT_NEAR(best, std::pow(2.0, 0.25), 1e-6);
  EXPECT_FALSE(Lp(4)->SupportFunctional({0, 0}).ok());
}

// The support functional of a smooth norm is the gradient of |z|^2 / 2.
TEST(SupportFunctionalTest, MatchesFiniteDifferenceGradient) {
  std::mt19937_64 rng(21);
  std::normal_distribution<double> normal;
  for (double p : {1.5, 3.0, 4.0, 7.0}) {
    const NormHandle norm = Lp(p);
    for (int i = 0; i < 500; ++i) {
      const PlanePoint z{normal(rng), normal(rng)};
      if (std::min(std::abs(z.x), std::abs(z.y)) < 1e-2) continue;
      const double h = 1e-6;
      auto half_sq = [&](PlanePoint q) { return 0.5 * std::pow(norm->Norm(q), 2); };
      const double gx = (half_sq({z.x + h, z.y}) - half_sq({z.x - h, z.y})) / (2 * h);
      const double gy = (half_sq({z.x, z.y + h}) - half_sq({z.x, z.y - h})) / (2 * h);
      const Covector f = *norm->SupportFunctional(z);
      const double scale = std::max(1.0, std::hypot(gx, gy));
      EXPECT_NEAR(f.x, gx, 1e-6 * scale) << "p=" << p;
      EXPECT_NEAR(f.y, gy, 1e-6 * scale) << "p=" << p;
    }
  }
}

TEST(SupportFunctionalTest, Invariants) {
  std::mt19937_64 rng(22);
  std::uniform_real_distribution<double> coord(-5, 5), lambda(0.01, 100);
  for (double p : {1.2, 1.5, 3.0, 4.0, 7.0}) {
    const NormHandle norm = Lp(p);
    for (int i = 0; i < 2000; ++i) {
      const PlanePoint z{coord(rng), coord(rng)};
      const double nz = norm->Norm(z);
      const Covector f = *norm->SupportFunctional(z);
      EXPECT_NEAR(f(z), nz * nz, 1e-10 * nz * nz);
      const double l = lambda(rng);
      const Covector g = *norm->SupportFunctional(l * z);
      EXPECT_NEAR(g.x, l * f.x, 1e-10 * std::max(1.0, std::abs(g.x)));
      EXPECT_NEAR(g.y, l * f.y, 1e-10 * std::max(1.0, std::abs(g.y)));
      // Holder: f(x) <= |z| |x| for any x.
      const PlanePoint x{coord(rng), coord(rng)};
      EXPECT_LE(f(x), nz * norm->Norm(x) * (1 + 1e-12));
    }
  }
}

TEST(PlacementTest, RandomPlacementIsDeterministicAndBounded) {
  const Graph g = Graph::Complete(6);
  const auto a = RandomPlacement(g, 2.0, 17);
  const auto b = RandomPlacement(g, 2.0, 17);
  const auto c = RandomPlacement(g, 2.0, 18);
  ASSERT_TRUE(a.ok());
  EXPECT_EQ(*a, *b);
  EXPECT_NE(*a, *c);
  for (const PlanePoint& q : *a) {
    EXPECT_LE(std::abs(q.x), 2.0);
    EXPECT_LE(std::abs(q.y), 2.0);
  }
  EXPECT_FALSE(RandomPlacement(g, 0.0, 1).ok());
}

TEST(PlacementTest, CoincidentPlacement) {
  const Graph g = TwoK4Graph();
  const auto p = RandomUvCoincidentPlacement(g, 1.0, 3);
  ASSERT_TRUE(p.ok());
  EXPECT_EQ((*p)[g.IndexOf(0)], (*p)[g.IndexOf(1)]);
  EXPECT_NE((*p)[g.IndexOf(2)], (*p)[g.IndexOf(0)]);
  EXPECT_FALSE(RandomUvCoincidentPlacement(Graph::Complete(3), 1.0, 3).ok());
}

}  // namespace
}  // namespace normrig
