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

#ifndef VILENKIN_MASK_HPP
#define VILENKIN_MASK_HPP

#include <complex>
#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include "vilenkin/group.hpp"
#include "vilenkin/stepfun.hpp"

namespace vilenkin {

/// Mask m_0 of the refinement equation phi^(chi) = m_0(chi) phi^(chi A^{-1}).
///
/// m_0 is constant on G_{-N}^perp-cosets and periodic in every exponent at
/// positions >= 1, so it is determined by p^{N+1} values. They are stored in
/// the order
///
///     k = alpha_0 + alpha_{-1} p + ... + alpha_{-N} p^N
///
/// (most significant digit at position -N; note this is the reverse of the
/// Grid convention). For N = 1 the table is also read as a p x p matrix
/// Lambda with row alpha_{-1} and column alpha_0, see lambda().
///
/// A Mask only guarantees the structural conditions (constancy, periodicity,
/// m_0 = 1 on G_{-N}^perp). Whether it is the mask of a step function is a
/// separate question answered by mask_validity().
class Mask {
 public:
  /// Throws std::invalid_argument when N < 1, values.size() != p^{N+1}, or
  /// |values[0] - 1| > eps.
  Mask(GroupParams params, int N, std::vector<Complex> values,
       double eps = kDefaultEps);

  /// N = 1 mask from the matrix view: rows[alpha_{-1}][alpha_0].
  static Mask from_lambda(GroupParams params,
                          const std::vector<std::vector<Complex>>& rows,
                          double eps = kDefaultEps);

  /// The classical mask: 1 where alpha_0 = 0, else 0. Its scaling function
  /// is the indicator of G_0.
  static Mask haar(GroupParams params, int N = 1);

  const GroupParams& params() const noexcept { return params_; }
  int p() const noexcept { return params_.p(); }
  int N() const noexcept { return N_; }
  std::size_t size() const noexcept { return values_.size(); }
  std::span<const Complex> values() const noexcept { return values_; }
  const Complex& operator[](std::size_t k) const { return values_[k]; }

  /// k for the exponent tuple (alpha_{-N}, ..., alpha_0), given in that order.
  std::size_t index(std::span<const int> alphas) const;
  /// Inverse of index(): (alpha_{-N}, ..., alpha_0).
  std::vector<int> alphas(std::size_t k) const;

  /// Lambda entry at row alpha_{-1}, column alpha_0 (N = 1 only).
  Complex lambda(int alpha_minus1, int alpha_0) const;

  /// m_0(zeta): exponents at positions >= 1 and < -N are ignored.
  Complex evaluate(const CharacterWord& zeta) const;

 private:
  GroupParams params_;
  int N_;
  std::vector<Complex> values_;
};

/// Coefficients beta_h of phi(x) = sum_h beta_h phi(Ax - h), h in H_0^{(N+1)},
/// indexed by l = a_{-1} + a_{-2} p + ... + a_{-N-1} p^N.
class CoefficientVector {
 public:
  /// Throws std::invalid_argument unless entries.size() == p^{N+1}, N >= 1.
  CoefficientVector(GroupParams params, int N, std::vector<Complex> entries);

  const GroupParams& params() const noexcept { return params_; }
  int N() const noexcept { return N_; }
  std::span<const Complex> entries() const noexcept { return entries_; }
  const Complex& operator[](std::size_t l) const { return entries_[l]; }
  std::size_t size() const noexcept { return entries_.size(); }

  /// The shift h_l in H_0^{(N+1)}.
  GroupElement shift(std::size_t l) const;

 private:
  GroupParams params_;
  int N_;
  std::vector<Complex> entries_;
};

/// The character chi_k representing mask slot k.
CharacterWord mask_character(const GroupParams& params, int N, std::size_t k);

/// m_0(chi_k) = (1/p) sum_l beta_l conj((chi_k, A^{-1} h_l)).
/// Throws std::invalid_argument when the result violates m_0(1) = 1.
Mask mask_from_coefficients(const CoefficientVector& beta,
                            double eps = kDefaultEps);

/// Solves the p^{N+1} system above for beta with one product against the
/// conjugate transpose of the unitary system matrix.
CoefficientVector coefficients_from_mask(const Mask& m);

/// U_{kl} = p^{-(N+1)/2} conj((chi_k, A^{-1} h_l)), row-major.
std::vector<Complex> coefficient_system_matrix(const GroupParams& params, int N);

class NoFiniteSupport : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ScalingFunction {
  SpectralFunction phi_hat;  ///< tabulated on the (N, M) grid
  int M;
};

/// prod_{j=0}^{M+N} m_0(chi A^{-j}) for the character cell `tuple` of an
/// (N, M+1)-shaped exponent window (tuple[i] is position i - N).
Complex truncated_product(const Mask& m, std::span<const int> tuple);

/// phi^ = prod_j m_0(chi A^{-j}) on the least M <= m_max whose product
/// vanishes on the shell G_{M+1}^perp \ G_M^perp.
/// Throws NoFiniteSupport if no such M exists up to m_max.
ScalingFunction scaling_from_mask(const Mask& m, int m_max,
                                  double eps = kDefaultEps);

/// F(zeta) == m_0(zeta) F(zeta A^{-1}) on every cell of the (N, M+1) grid.
bool refinement_check(const Mask& m, const SpectralFunction& F,
                      double eps = kDefaultEps);

/// Exponent tuple (alpha_{-N}, ..., alpha_{k-1}) of a G_{-N}^perp-coset.
using CosetTuple = std::vector<int>;

/// Both characterizations of "m_0 is a mask on D_{-N}(G_M^perp)".
struct ValidityReport {
  int M = 0;
  /// The (M+N+1)-fold product vanishes on G_{M+1}^perp \ G_M^perp.
  bool product_vanishes = false;
  /// Union of E_k A^{M+1-k}, k = -N+1..M+1, covers the same shell.
  bool cover_complete = false;
  /// E_k: zero cosets of m_0 in G_k^perp \ G_{k-1}^perp.
  std::map<int, std::vector<CosetTuple>> zero_sets;
  /// Shell cells (alpha_{-N}..alpha_M) where the product is nonzero.
  std::vector<CosetTuple> product_nonzero;
  /// Shell cells missed by the cover.
  std::vector<CosetTuple> uncovered;

  bool criteria_agree() const noexcept { return product_vanishes == cover_complete; }
  bool valid() const noexcept { return product_vanishes && cover_complete; }
};

ValidityReport mask_validity(const Mask& m, int M, double eps = kDefaultEps);

/// sum_{alpha_0} |m_0(alpha_{-N}, ..., alpha_{-1}, alpha_0)|^2 == 1 for every
/// prefix.
bool necessary_condition(const Mask& m, double eps = kDefaultEps);

}  // namespace vilenkin

#endif  // VILENKIN_MASK_HPP
