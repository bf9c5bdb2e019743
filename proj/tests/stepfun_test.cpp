// Copyright 2026 The vilenkin-mra Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "vilenkin/stepfun.hpp"

using namespace vilenkin;

namespace {

StepFunction random_step(std::mt19937_64& rng, GroupParams p, int N, int M) {
  Grid g(p, N, M);
  return StepFunction(g, vk_test::random_values(rng, g.size()));
}

SpectralFunction random_spectral(std::mt19937_64& rng, GroupParams p, int N, int M) {
  Grid g(p, N, M);
  return SpectralFunction(g, vk_test::random_values(rng, g.size()));
}

// 1_{G_0} on the (0, M) grid.
StepFunction indicator_g0(GroupParams p, int N, int M) {
  Grid g(p, N, M);
  StepFunction f(g);
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g.element(i).in_subgroup(0)) f[i] = 1.0;
  }
  return f;
}

}  // namespace

TEST(Grid, TupleIndexRoundTrip) {
  Grid g(GroupParams(3), 2, 1);
  EXPECT_EQ(g.size(), 27u);
  for (std::size_t i = 0; i < g.size(); ++i) {
    EXPECT_EQ(g.index(g.tuple(i)), i);
    EXPECT_EQ(g.locate(g.element(i)), i);
    EXPECT_EQ(g.locate(g.character(i)), i);
  }
  EXPECT_EQ(g.tuple(1), (std::vector<int>{1, 0, 0}));
  EXPECT_EQ(g.element(1), GroupElement::basis(GroupParams(3), -2));
}

TEST(Grid, LocateOutside) {
  GroupParams p(3);
  Grid g(p, 1, 1);
  EXPECT_FALSE(g.locate(GroupElement::basis(p, -2)).has_value());
  EXPECT_EQ(g.locate(GroupElement::basis(p, 1)), g.locate(GroupElement(p)));
  EXPECT_FALSE(g.locate(CharacterWord::rademacher(p, 1)).has_value());
  EXPECT_EQ(g.locate(CharacterWord::rademacher(p, -2)), g.locate(CharacterWord(p)));
}

TEST(Grid, Errors) {
  EXPECT_THROW(Grid(GroupParams(3), -1, 0), std::invalid_argument);
  EXPECT_THROW(Grid(GroupParams(5), 20, 20), std::length_error);
  EXPECT_THROW(StepFunction(Grid(GroupParams(3), 1, 0), {1.0, 2.0}), std::invalid_argument);
}

TEST(Fourier, IndicatorOfG0) {
  for (int prime : {2, 3, 5}) {
    GroupParams p(prime);
    for (auto [N, M] : {std::pair{0, 0}, std::pair{0, 1}, std::pair{1, 1}, std::pair{2, 1}}) {
      auto F = fourier(indicator_g0(p, N, M));
      for (std::size_t i = 0; i < F.size(); ++i) {
        double expected = F.grid().character(i).in_annihilator(0) ? 1.0 : 0.0;
        EXPECT_NEAR(std::abs(F[i] - expected), 0.0, 1e-12);
      }
      auto f = inverse_fourier(F);
      EXPECT_LT(max_abs_difference(f.values(), indicator_g0(p, N, M).values()), 1e-12);
    }
  }
}

TEST(Fourier, ZeroMapsToZero) {
  StepFunction f(Grid(GroupParams(3), 1, 1));
  auto F = fourier(f);
  for (auto v : F.values()) EXPECT_EQ(v, Complex{});
}

TEST(Fourier, MatchesNaiveSum) {
  std::mt19937_64 rng(11);
  for (int prime : {2, 3, 5}) {
    for (int N = 0; N <= 2; ++N) {
      for (int M = 0; M <= 2; ++M) {
        auto f = random_step(rng, GroupParams(prime), N, M);
        EXPECT_LT(max_abs_difference(fourier(f).values(), vk_test::naive_fourier(f)), 1e-12);
        auto F = random_spectral(rng, GroupParams(prime), N, M);
        EXPECT_LT(max_abs_difference(inverse_fourier(F).values(), vk_test::naive_inverse(F)), 1e-12);
      }
    }
  }
}

TEST(Fourier, FastAgreesWithReference) {
  std::mt19937_64 rng(12);
  for (int prime : {2, 3, 5, 7}) {
    for (int N = 0; N <= 2; ++N) {
      for (int M = 0; M <= 2; ++M) {
        auto f = random_step(rng, GroupParams(prime), N, M);
        EXPECT_LT(max_abs_difference(fourier(f).values(), fourier_fast(f).values()), 1e-12);
        auto F = random_spectral(rng, GroupParams(prime), N, M);
        EXPECT_LT(max_abs_difference(inverse_fourier(F).values(), inverse_fourier_fast(F).values()),
                  1e-12);
      }
    }
  }
}

TEST(Fourier, RoundTripAndPlancherel) {
  std::mt19937_64 rng(13);
  for (int prime : {2, 3, 5}) {
    for (int N = 0; N <= 2; ++N) {
      for (int M = 0; M <= 2; ++M) {
        auto f = random_step(rng, GroupParams(prime), N, M);
        auto g = random_step(rng, GroupParams(prime), N, M);
        auto F = fourier(f);
        EXPECT_LT(max_abs_difference(inverse_fourier(F).values(), f.values()), 1e-10);
        EXPECT_LT(std::abs(inner_product(f, g) - inner_product(F, fourier(g))), 1e-12);
      }
    }
  }
}

TEST(Shift, Identity) {
  std::mt19937_64 rng(14);
  auto f = random_step(rng, GroupParams(3), 1, 1);
  EXPECT_EQ(max_abs_difference(shift(f, GroupElement(GroupParams(3))).values(), f.values()), 0.0);
}

TEST(Shift, ModulationLaw) {
  std::mt19937_64 rng(15);
  for (int prime : {2, 3, 5}) {
    GroupParams p(prime);
    auto f = random_step(rng, p, 2, 1);
    auto F = fourier(f);
    for (int i = 0; i < 10; ++i) {
      auto h = vk_test::random_element(rng, p, -2, 2);
      auto Fs = fourier(shift(f, h));
      for (std::size_t z = 0; z < F.size(); ++z) {
        Complex expected = std::conj(vk_test::omega(prime, pair(F.grid().character(z), h))) * F[z];
        EXPECT_LT(std::abs(Fs[z] - expected), 1e-12);
      }
    }
  }
}

TEST(Shift, DisjointCosets) {
  GroupParams p(3);
  auto f = indicator_g0(p, 1, 1);
  auto g = shift(f, GroupElement::basis(p, -1));
  EXPECT_NEAR(std::abs(inner_product(f, f) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(inner_product(f, g)), 0.0, 1e-15);
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool in_coset = (g.grid().element(i) - GroupElement::basis(p, -1)).in_subgroup(0);
    EXPECT_EQ(g[i], Complex(in_coset ? 1.0 : 0.0));
  }
}

TEST(Shift, BelowGridThrows) {
  GroupParams p(3);
  auto f = indicator_g0(p, 0, 1);
  EXPECT_THROW(shift(f, GroupElement::basis(p, -1)), std::domain_error);
  EXPECT_NO_THROW(shift(enlarge(f, 1, 1), GroupElement::basis(p, -1)));
}

TEST(Enlarge, PreservesValuesAndTransform) {
  std::mt19937_64 rng(16);
  GroupParams p(3);
  auto f = random_step(rng, p, 1, 1);
  auto big = enlarge(f, 2, 2);
  for (std::size_t i = 0; i < big.size(); ++i) {
    EXPECT_EQ(big[i], value_at(f, big.grid().element(i)));
  }
  EXPECT_NEAR(std::abs(inner_product(big, big) - inner_product(f, f)), 0.0, 1e-12);
  auto F = fourier(f);
  auto Fbig = fourier(big);
  for (std::size_t z = 0; z < Fbig.size(); ++z) {
    EXPECT_LT(std::abs(Fbig[z] - value_at(F, Fbig.grid().character(z))), 1e-12);
  }
}

TEST(Dilation, IdentityAndNorm) {
  std::mt19937_64 rng(17);
  for (int prime : {2, 3, 5}) {
    auto f = random_step(rng, GroupParams(prime), 2, 1);
    auto same = dilate_function(f, 0);
    EXPECT_EQ(max_abs_difference(same.values(), f.values()), 0.0);
    auto g = dilate_function(f, 1);
    EXPECT_NEAR(inner_product(g, g).real(), inner_product(f, f).real() / prime, 1e-12);
  }
}

TEST(Dilation, SpectralCovariance) {
  std::mt19937_64 rng(18);
  for (int prime : {2, 3, 5}) {
    auto f = random_step(rng, GroupParams(prime), 2, 1);
    auto F = fourier(f);
    auto G = fourier(dilate_function(f, 1));
    for (std::size_t z = 0; z < G.size(); ++z) {
      auto lowered = dilate_character(G.grid().character(z), -1);
      EXPECT_LT(std::abs(G[z] - value_at(F, lowered) / static_cast<double>(prime)), 1e-12);
    }
  }
}

TEST(Dilation, ShiftGramInvariance) {
  // p^{1/2} phi(A x - h) has the same Gram matrix over h in H_0 as phi(x - h).
  std::mt19937_64 rng(19);
  GroupParams p(3);
  auto phi = random_step(rng, p, 1, 1);
  std::vector<GroupElement> shifts;
  for (int a = 0; a < 3; ++a) shifts.push_back(GroupElement::basis(p, -1, a));
  for (const auto& h : shifts) {
    for (const auto& g : shifts) {
      Complex plain = inner_product(shift(phi, h), shift(phi, g));
      auto dh = dilate_function(shift(phi, h), 1);
      auto dg = dilate_function(shift(phi, g), 1);
      EXPECT_LT(std::abs(3.0 * inner_product(dh, dg) - plain), 1e-12);
    }
  }
}
