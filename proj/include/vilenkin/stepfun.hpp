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

#ifndef VILENKIN_STEPFUN_HPP
#define VILENKIN_STEPFUN_HPP

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "vilenkin/group.hpp"

namespace vilenkin {

using Complex = std::complex<double>;

/// The p roots of unity omega^e, omega = exp(2 pi i / p). Character values
/// enter the numerics only through this table, indexed by an exact Z_p
/// exponent.
class UnitRoots {
 public:
  explicit UnitRoots(int p);
  const Complex& operator[](int e) const { return roots_[static_cast<std::size_t>(e)]; }
  int p() const noexcept { return static_cast<int>(roots_.size()); }

 private:
  std::vector<Complex> roots_;
};

/// The finite coset grid shared by D_M(G_{-N}) and D_{-N}(G_M^perp).
///
/// A cell is a digit tuple (c_{-N}, ..., c_{M-1}); flat index
/// sum_j c_j p^{j+N}, least-significant digit at position -N. On the group
/// side a cell is the coset G_M + h; on the character side it is the coset
/// G_{-N}^perp r_{-N}^{c_{-N}} ... r_{M-1}^{c_{M-1}}.
class Grid {
 public:
  static constexpr std::size_t kMaxCells = std::size_t{1} << 26;

  /// Throws std::invalid_argument for negative N/M, std::length_error when
  /// p^{N+M} exceeds kMaxCells.
  Grid(GroupParams params, int N, int M);

  const GroupParams& params() const noexcept { return params_; }
  int p() const noexcept { return params_.p(); }
  int N() const noexcept { return N_; }
  int M() const noexcept { return M_; }
  int lowest() const noexcept { return -N_; }
  int highest() const noexcept { return M_ - 1; }
  int width() const noexcept { return N_ + M_; }
  std::size_t size() const noexcept { return size_; }

  /// Digits c_{-N}..c_{M-1} of a flat index (tuple[i] is position i - N).
  std::vector<int> tuple(std::size_t index) const;
  std::size_t index(std::span<const int> tuple) const;

  GroupElement element(std::size_t index) const;
  CharacterWord character(std::size_t index) const;

  /// Cell of the G_M-coset containing x; nullopt when x lies outside G_{-N}.
  std::optional<std::size_t> locate(const GroupElement& x) const;

  /// Cell of the G_{-N}^perp-coset containing zeta; nullopt when zeta lies
  /// outside G_M^perp.
  std::optional<std::size_t> locate(const CharacterWord& zeta) const;

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  GroupParams params_;
  int N_;
  int M_;
  std::size_t size_;
};

enum class Side { group, spectral };

/// Dense complex table over a Grid. The table is the function: support and
/// coset-constancy hold by construction.
template <Side S>
class GridFunction {
 public:
  explicit GridFunction(Grid grid)
      : grid_(grid), values_(grid.size(), Complex{}) {}

  /// Throws std::invalid_argument when values.size() != grid.size().
  GridFunction(Grid grid, std::vector<Complex> values);

  static constexpr Side side = S;

  const Grid& grid() const noexcept { return grid_; }
  std::span<const Complex> values() const noexcept { return values_; }
  std::span<Complex> values() noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  const Complex& operator[](std::size_t i) const { return values_[i]; }
  Complex& operator[](std::size_t i) { return values_[i]; }

 private:
  Grid grid_;
  std::vector<Complex> values_;
};

/// f in D_M(G_{-N}).
using StepFunction = GridFunction<Side::group>;
/// F in D_{-N}(G_M^perp).
using SpectralFunction = GridFunction<Side::spectral>;

/// f(x), zero outside G_{-N}.
Complex value_at(const StepFunction& f, const GroupElement& x);
/// F(zeta), zero outside G_M^perp.
Complex value_at(const SpectralFunction& F, const CharacterWord& zeta);

/// Reference transform: F(zeta) = p^{-M} sum_h f(h) conj(omega^{(zeta,h)}).
/// O(p^{2(N+M)}).
SpectralFunction fourier(const StepFunction& f);

/// Reference inverse: f(h) = p^{-N} sum_zeta F(zeta) omega^{(zeta,h)}.
StepFunction inverse_fourier(const SpectralFunction& F);

/// Radix-p factorized transforms: one p-point DFT per digit axis,
/// O((N+M) p^{N+M+1}). Agree with the reference transforms.
SpectralFunction fourier_fast(const StepFunction& f);
StepFunction inverse_fourier_fast(const SpectralFunction& F);

/// Embed f into the larger grid (N', M') with N' >= N and M' >= M.
/// Throws std::invalid_argument when the target is smaller.
StepFunction enlarge(const StepFunction& f, int N, int M);

/// x -> f(x - h). Digits of h at positions >= M do not move any coset.
/// Throws std::domain_error when h has a digit below -N, which would move
/// the support outside G_{-N}; enlarge() first in that case.
StepFunction shift(const StepFunction& f, const GroupElement& h);

/// <f, g> = p^{-M} sum f conj(g). Throws std::invalid_argument on grid
/// mismatch.
Complex inner_product(const StepFunction& f, const StepFunction& g);

/// <F, G> = p^{-N} sum F conj(G) (the character-side measure).
Complex inner_product(const SpectralFunction& F, const SpectralFunction& G);

/// x -> f(A^n x), tabulated on the grid (max(N-n, 0), max(M+n, 0)).
StepFunction dilate_function(const StepFunction& f, int n);

/// Largest |f_i - g_i| over two tables on the same grid.
double max_abs_difference(std::span<const Complex> a, std::span<const Complex> b);

}  // namespace vilenkin

#endif  // VILENKIN_STEPFUN_HPP
