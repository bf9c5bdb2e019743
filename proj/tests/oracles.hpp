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


#ifndef VILENKIN_TESTS_ORACLES_HPP
#define VILENKIN_TESTS_ORACLES_HPP

// Brute-force reference computations shared by the tests. They use only the
// group arithmetic and std::exp, never the transform kernels under test.

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "vilenkin/group.hpp"
#include "vilenkin/stepfun.hpp"

namespace vk_test {

using vilenkin::Complex;

inline Complex omega(int p, long e) {
  return std::exp(Complex(0.0, 2.0 * std::numbers::pi * static_cast<double>(e) / p));
}

/// F(zeta) = p^{-M} sum_h f(h) conj((zeta, h)), summed over grid elements.
inline std::vector<Complex> naive_fourier(const vilenkin::StepFunction& f) {
  const auto& g = f.grid();
  std::vector<Complex> out(g.size());
  const double scale = std::pow(static_cast<double>(g.p()), -g.M());
  for (std::size_t z = 0; z < g.size(); ++z) {
    const auto zeta = g.character(z);
    Complex acc{};
    for (std::size_t h = 0; h < g.size(); ++h) {
      acc += f[h] * std::conj(omega(g.p(), vilenkin::pair(zeta, g.element(h))));
    }
    out[z] = acc * scale;
  }
  return out;
}

/// f(h) = p^{-N} sum_zeta F(zeta) (zeta, h).
inline std::vector<Complex> naive_inverse(const vilenkin::SpectralFunction& F) {
  const auto& g = F.grid();
  std::vector<Complex> out(g.size());
  const double scale = std::pow(static_cast<double>(g.p()), -g.N());
  for (std::size_t h = 0; h < g.size(); ++h) {
    const auto x = g.element(h);
    Complex acc{};
    for (std::size_t z = 0; z < g.size(); ++z) {
      acc += F[z] * omega(g.p(), vilenkin::pair(g.character(z), x));
    }
    out[h] = acc * scale;
  }
  return out;
}

inline std::vector<Complex> random_values(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> d;
  std::vector<Complex> v(n);
  for (auto& x : v) x = Complex(d(rng), d(rng));
  return v;
}

inline Complex random_phase(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> d(0.0, 2.0 * std::numbers::pi);
  return std::polar(1.0, d(rng));
}

inline vilenkin::GroupElement random_element(std::mt19937_64& rng, vilenkin::GroupParams params,
                                             int lo, int hi) {
  std::uniform_int_distribution<int> digit(0, params.p() - 1);
  vilenkin::DigitMap d;
  for (int k = lo; k <= hi; ++k) d[k] = digit(rng);
  return vilenkin::GroupElement(params, d);
}

inline vilenkin::CharacterWord random_word(std::mt19937_64& rng, vilenkin::GroupParams params,
                                           int lo, int hi) {
  std::uniform_int_distribution<int> digit(0, params.p() - 1);
  vilenkin::DigitMap d;
  for (int k = lo; k <= hi; ++k) d[k] = digit(rng);
  return vilenkin::CharacterWord(params, d);
}

}  // namespace vk_test

#endif  // VILENKIN_TESTS_ORACLES_HPP
