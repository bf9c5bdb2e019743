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

#include "vilenkin/stepfun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

namespace vilenkin {

UnitRoots::UnitRoots(int p) : roots_(static_cast<std::size_t>(p)) {
  for (int e = 0; e < p; ++e) {
    roots_[static_cast<std::size_t>(e)] =
        std::polar(1.0, 2.0 * std::numbers::pi * e / p);
  }
  // Exact values where the trigonometry would leave rounding dust.
  roots_[0] = Complex(1.0, 0.0);
  if (p == 2) roots_[1] = Complex(-1.0, 0.0);
}

// --- Grid -------------------------------------------------------------------

Grid::Grid(GroupParams params, int N, int M) : params_(params), N_(N), M_(M) {
  if (N < 0 || M < 0) {
    throw std::invalid_argument("grid: N and M must be non-negative, got N=" +
                                std::to_string(N) + " M=" + std::to_string(M));
  }
  std::size_t size = 1;
  for (int i = 0; i < N + M; ++i) {
    size *= static_cast<std::size_t>(params.p());
    if (size > kMaxCells) {
      throw std::length_error("grid: p^(N+M) exceeds the cell budget");
    }
  }
  size_ = size;
}

std::vector<int> Grid::tuple(std::size_t index) const {
  std::vector<int> t(static_cast<std::size_t>(width()));
  const auto p = static_cast<std::size_t>(this->p());
  for (auto& digit : t) {
    digit = static_cast<int>(index % p);
    index /= p;
  }
  return t;
}

std::size_t Grid::index(std::span<const int> tuple) const {
  if (tuple.size() != static_cast<std::size_t>(width())) {
    throw std::invalid_argument("grid: tuple length does not match N+M");
  }
  std::size_t idx = 0;
  for (auto it = tuple.rbegin(); it != tuple.rend(); ++it) {
    idx = idx * static_cast<std::size_t>(p()) + static_cast<std::size_t>(*it);
  }
  return idx;
}

GroupElement Grid::element(std::size_t index) const {
  auto t = tuple(index);
  DigitMap digits;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] != 0) digits.emplace(static_cast<int>(i) - N_, t[i]);
  }
  return GroupElement(params_, digits);
}

CharacterWord Grid::character(std::size_t index) const {
  auto t = tuple(index);
  DigitMap exps;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] != 0) exps.emplace(static_cast<int>(i) - N_, t[i]);
  }
  return CharacterWord(params_, exps);
}

std::optional<std::size_t> Grid::locate(const GroupElement& x) const {
  if (x.params() != params_) throw std::invalid_argument("locate: mismatched p");
  if (!x.in_subgroup(-N_)) return std::nullopt;
  std::vector<int> t(static_cast<std::size_t>(width()));
  for (auto [pos, d] : x.digits()) {
    if (pos <= highest()) t[static_cast<std::size_t>(pos + N_)] = d;
  }
  return index(t);
}

std::optional<std::size_t> Grid::locate(const CharacterWord& zeta) const {
  if (zeta.params() != params_) throw std::invalid_argument("locate: mismatched p");
  if (!zeta.in_annihilator(M_)) return std::nullopt;
  std::vector<int> t(static_cast<std::size_t>(width()));
  for (auto [pos, e] : zeta.exponents()) {
    if (pos >= lowest()) t[static_cast<std::size_t>(pos + N_)] = e;
  }
  return index(t);
}

// --- GridFunction -----------------------------------------------------------

template <Side S>
GridFunction<S>::GridFunction(Grid grid, std::vector<Complex> values)
    : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.size()) {
    throw std::invalid_argument("table has " + std::to_string(values_.size()) +
                                " values, grid needs " +
                                std::to_string(grid_.size()));
  }
}

template class GridFunction<Side::group>;
template class GridFunction<Side::spectral>;

Complex value_at(const StepFunction& f, const GroupElement& x) {
  auto idx = f.grid().locate(x);
  return idx ? f[*idx] : Complex{};
}

Complex value_at(const SpectralFunction& F, const CharacterWord& zeta) {
  auto idx = F.grid().locate(zeta);
  return idx ? F[*idx] : Complex{};
}

// --- transforms -------------------------------------------------------------

namespace {

// All digit tuples of a grid, row-major (index * width + i).
std::vector<int> all_tuples(const Grid& g) {
  const auto w = static_cast<std::size_t>(g.width());
  std::vector<int> out(g.size() * w);
  for (std::size_t idx = 0; idx < g.size(); ++idx) {
    auto t = g.tuple(idx);
    std::copy(t.begin(), t.end(), out.begin() + static_cast<std::ptrdiff_t>(idx * w));
  }
  return out;
}

// out[z] = scale * sum_h in[h] omega^{sign * <z,h>}
std::vector<Complex> naive_transform(const Grid& g, std::span<const Complex> in,
                                     int sign, double scale) {
  const int p = g.p();
  const UnitRoots roots(p);
  const auto w = static_cast<std::size_t>(g.width());
  const auto tuples = all_tuples(g);
  std::vector<Complex> out(g.size());
  for (std::size_t z = 0; z < g.size(); ++z) {
    const int* zt = tuples.data() + z * w;
    Complex acc{};
    for (std::size_t h = 0; h < g.size(); ++h) {
      const int* ht = tuples.data() + h * w;
      int e = 0;
      for (std::size_t i = 0; i < w; ++i) e = (e + zt[i] * ht[i]) % p;
      if (sign < 0) e = (p - e) % p;
      acc += in[h] * roots[e];
    }
    out[z] = acc * scale;
  }
  return out;
}

// Tensor product of p-point DFTs, one per digit axis.
std::vector<Complex> radix_transform(const Grid& g, std::span<const Complex> in,
                                     int sign, double scale) {
  const int p = g.p();
  const auto pp = static_cast<std::size_t>(p);
  const UnitRoots roots(p);
  std::vector<Complex> cur(in.begin(), in.end());
  std::vector<Complex> column(pp);
  std::size_t stride = 1;
  for (int axis = 0; axis < g.width(); ++axis) {
    const std::size_t block = stride * pp;
    for (std::size_t base = 0; base < cur.size(); base += block) {
      for (std::size_t off = 0; off < stride; ++off) {
        for (std::size_t a = 0; a < pp; ++a) column[a] = cur[base + off + a * stride];
        for (int alpha = 0; alpha < p; ++alpha) {
          Complex acc{};
          for (int a = 0; a < p; ++a) {
            int e = (alpha * a) % p;
            if (sign < 0) e = (p - e) % p;
            acc += column[static_cast<std::size_t>(a)] * roots[e];
          }
          cur[base + off + static_cast<std::size_t>(alpha) * stride] = acc;
        }
      }
    }
    stride = block;
  }
  for (auto& v : cur) v *= scale;
  return cur;
}

}  // namespace

SpectralFunction fourier(const StepFunction& f) {
  const Grid& g = f.grid();
  return SpectralFunction(g, naive_transform(g, f.values(), -1, g.params().scale(-g.M())));
}

StepFunction inverse_fourier(const SpectralFunction& F) {
  const Grid& g = F.grid();
  return StepFunction(g, naive_transform(g, F.values(), +1, g.params().scale(-g.N())));
}

SpectralFunction fourier_fast(const StepFunction& f) {
  const Grid& g = f.grid();
  return SpectralFunction(g, radix_transform(g, f.values(), -1, g.params().scale(-g.M())));
}

StepFunction inverse_fourier_fast(const SpectralFunction& F) {
  const Grid& g = F.grid();
  return StepFunction(g, radix_transform(g, F.values(), +1, g.params().scale(-g.N())));
}

// --- group-side operations --------------------------------------------------

StepFunction enlarge(const StepFunction& f, int N, int M) {
  const Grid& from = f.grid();
  if (N < from.N() || M < from.M()) {
    throw std::invalid_argument("enlarge: target grid is smaller than source");
  }
  Grid to(from.params(), N, M);
  StepFunction out(to);
  const int drop = N - from.N();
  for (std::size_t idx = 0; idx < to.size(); ++idx) {
    auto t = to.tuple(idx);
    bool outside = std::any_of(t.begin(), t.begin() + drop, [](int d) { return d != 0; });
    if (outside) continue;
    std::span<const int> kept(t.data() + drop, static_cast<std::size_t>(from.width()));
    out[idx] = f[from.index(kept)];
  }
  return out;
}

StepFunction shift(const StepFunction& f, const GroupElement& h) {
  const Grid& g = f.grid();
  if (h.params() != g.params()) throw std::invalid_argument("shift: mismatched p");
  if (!h.in_subgroup(g.lowest())) {
    throw std::domain_error(
        "shift: h has digits below position -N; enlarge the grid first");
  }
  const int p = g.p();
  std::vector<int> ht(static_cast<std::size_t>(g.width()));
  for (auto [pos, d] : h.digits()) {
    if (pos <= g.highest()) ht[static_cast<std::size_t>(pos + g.N())] = d;
  }
  StepFunction out(g);
  for (std::size_t idx = 0; idx < g.size(); ++idx) {
    auto t = g.tuple(idx);
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = (t[i] - ht[i] + p) % p;
    out[idx] = f[g.index(t)];
  }
  return out;
}

namespace {

template <Side S>
Complex raw_inner(const GridFunction<S>& a, const GridFunction<S>& b) {
  if (a.grid() != b.grid()) throw std::invalid_argument("inner_product: grid mismatch");
  Complex acc{};
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * std::conj(b[i]);
  return acc;
}

}  // namespace

Complex inner_product(const StepFunction& f, const StepFunction& g) {
  return raw_inner(f, g) * f.grid().params().scale(-f.grid().M());
}

Complex inner_product(const SpectralFunction& F, const SpectralFunction& G) {
  return raw_inner(F, G) * F.grid().params().scale(-F.grid().N());
}

StepFunction dilate_function(const StepFunction& f, int n) {
  const Grid& g = f.grid();
  Grid to(g.params(), std::max(g.N() - n, 0), std::max(g.M() + n, 0));
  StepFunction out(to);
  for (std::size_t idx = 0; idx < to.size(); ++idx) {
    out[idx] = value_at(f, dilate(to.element(idx), n));
  }
  return out;
}

double max_abs_difference(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) throw std::invalid_argument("max_abs_difference: size mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace vilenkin
