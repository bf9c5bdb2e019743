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

#include "vilenkin/mask.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <utility>

#include "odometer.hpp"

namespace vilenkin {

namespace {

std::size_t mask_size(const GroupParams& params, int N) {
  if (N < 1) throw std::invalid_argument("mask: N must be >= 1");
  return static_cast<std::size_t>(params.power(N + 1));
}

// k for the mask slot read by the window starting at tuple[first]:
// tuple[first + i] is alpha_{-N+i}; entries past the end count as 0.
std::size_t window_index(std::span<const int> tuple, std::size_t first, int N, int p) {
  std::size_t k = 0;
  for (std::size_t i = 0; i <= static_cast<std::size_t>(N); ++i) {
    const std::size_t at = first + i;
    const int a = at < tuple.size() ? tuple[at] : 0;
    k = k * static_cast<std::size_t>(p) + static_cast<std::size_t>(a);
  }
  return k;
}

}  // namespace

// --- Mask -------------------------------------------------------------------

Mask::Mask(GroupParams params, int N, std::vector<Complex> values, double eps)
    : params_(params), N_(N), values_(std::move(values)) {
  const std::size_t need = mask_size(params, N);
  if (values_.size() != need) {
    throw std::invalid_argument("mask: expected " + std::to_string(need) +
                                " values, got " + std::to_string(values_.size()));
  }
  if (std::abs(values_[0] - Complex(1.0, 0.0)) > eps) {
    throw std::invalid_argument("mask: m_0 must equal 1 on G_{-N}^perp");
  }
}

Mask Mask::from_lambda(GroupParams params,
                       const std::vector<std::vector<Complex>>& rows, double eps) {
  const auto p = static_cast<std::size_t>(params.p());
  if (rows.size() != p) throw std::invalid_argument("from_lambda: need p rows");
  std::vector<Complex> values(p * p);
  for (std::size_t r = 0; r < p; ++r) {
    if (rows[r].size() != p) throw std::invalid_argument("from_lambda: need p columns");
    for (std::size_t c = 0; c < p; ++c) values[r * p + c] = rows[r][c];
  }
  return Mask(params, 1, std::move(values), eps);
}

Mask Mask::haar(GroupParams params, int N) {
  std::vector<Complex> values(mask_size(params, N));
  for (std::size_t k = 0; k < values.size(); k += static_cast<std::size_t>(params.p())) {
    values[k] = 1.0;
  }
  return Mask(params, N, std::move(values));
}

std::size_t Mask::index(std::span<const int> alphas) const {
  if (alphas.size() != static_cast<std::size_t>(N_ + 1)) {
    throw std::invalid_argument("mask index: need N+1 exponents");
  }
  return window_index(alphas, 0, N_, p());
}

std::vector<int> Mask::alphas(std::size_t k) const {
  std::vector<int> out(static_cast<std::size_t>(N_ + 1));
  for (auto it = out.rbegin(); it != out.rend(); ++it) {
    *it = static_cast<int>(k % static_cast<std::size_t>(p()));
    k /= static_cast<std::size_t>(p());
  }
  return out;
}

Complex Mask::lambda(int alpha_minus1, int alpha_0) const {
  if (N_ != 1) throw std::logic_error("lambda view requires N = 1");
  if (alpha_minus1 < 0 || alpha_minus1 >= p() || alpha_0 < 0 || alpha_0 >= p()) {
    throw std::out_of_range("lambda: exponent outside 0..p-1");
  }
  return values_[static_cast<std::size_t>(alpha_0 + alpha_minus1 * p())];
}

Complex Mask::evaluate(const CharacterWord& zeta) const {
  if (zeta.params() != params_) throw std::invalid_argument("evaluate: mismatched p");
  std::vector<int> a(static_cast<std::size_t>(N_ + 1));
  for (int i = 0; i <= N_; ++i) a[static_cast<std::size_t>(i)] = zeta.exponent(i - N_);
  return values_[index(a)];
}

// --- coefficients -----------------------------------------------------------

CoefficientVector::CoefficientVector(GroupParams params, int N,
                                     std::vector<Complex> entries)
    : params_(params), N_(N), entries_(std::move(entries)) {
  const std::size_t need = mask_size(params, N);
  if (entries_.size() != need) {
    throw std::invalid_argument("coefficients: expected " + std::to_string(need) +
                                " entries, got " + std::to_string(entries_.size()));
  }
}

GroupElement CoefficientVector::shift(std::size_t l) const {
  DigitMap digits;
  for (int i = 0; i <= N_; ++i) {
    digits.emplace(-i - 1, static_cast<int>(l % static_cast<std::size_t>(params_.p())));
    l /= static_cast<std::size_t>(params_.p());
  }
  return GroupElement(params_, digits);
}

CharacterWord mask_character(const GroupParams& params, int N, std::size_t k) {
  DigitMap exps;
  for (int i = 0; i <= N; ++i) {
    exps.emplace(-i, static_cast<int>(k % static_cast<std::size_t>(params.p())));
    k /= static_cast<std::size_t>(params.p());
  }
  return CharacterWord(params, exps);
}

namespace {

// e_{kl} = exponent of (chi_k, A^{-1} h_l).
std::vector<int> system_exponents(const GroupParams& params, int N) {
  const std::size_t n = mask_size(params, N);
  const CoefficientVector shape(params, N, std::vector<Complex>(n));
  std::vector<CharacterWord> chars;
  std::vector<GroupElement> lifted;
  chars.reserve(n);
  lifted.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    chars.push_back(mask_character(params, N, i));
    lifted.push_back(dilate(shape.shift(i), -1));
  }
  std::vector<int> e(n * n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) e[k * n + l] = pair(chars[k], lifted[l]);
  }
  return e;
}

}  // namespace

std::vector<Complex> coefficient_system_matrix(const GroupParams& params, int N) {
  const UnitRoots roots(params.p());
  const auto e = system_exponents(params, N);
  const double norm = std::pow(static_cast<double>(params.p()), -(N + 1) / 2.0);
  std::vector<Complex> u(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) u[i] = std::conj(roots[e[i]]) * norm;
  return u;
}

Mask mask_from_coefficients(const CoefficientVector& beta, double eps) {
  const auto& params = beta.params();
  const int p = params.p();
  const UnitRoots roots(p);
  const auto e = system_exponents(params, beta.N());
  const std::size_t n = beta.size();
  std::vector<Complex> m(n);
  for (std::size_t k = 0; k < n; ++k) {
    Complex acc{};
    for (std::size_t l = 0; l < n; ++l) acc += beta[l] * std::conj(roots[e[k * n + l]]);
    m[k] = acc / static_cast<double>(p);
  }
  return Mask(params, beta.N(), std::move(m), eps);
}

CoefficientVector coefficients_from_mask(const Mask& m) {
  // m = p^{(N+1)/2 - 1} U beta with U unitary, hence beta = p^{1-(N+1)/2} U^* m.
  const auto u = coefficient_system_matrix(m.params(), m.N());
  const std::size_t n = m.size();
  const double scale = std::pow(static_cast<double>(m.p()), 1.0 - (m.N() + 1) / 2.0);
  std::vector<Complex> beta(n);
  for (std::size_t l = 0; l < n; ++l) {
    Complex acc{};
    for (std::size_t k = 0; k < n; ++k) acc += std::conj(u[k * n + l]) * m[k];
    beta[l] = acc * scale;
  }
  return CoefficientVector(m.params(), m.N(), std::move(beta));
}

// --- scaling function -------------------------------------------------------

Complex truncated_product(const Mask& m, std::span<const int> tuple) {
  // Factor j reads positions j-N..j of chi, i.e. tuple[j..j+N].
  Complex acc(1.0, 0.0);
  for (std::size_t j = 0; j < tuple.size(); ++j) {
    acc *= m[window_index(tuple, j, m.N(), m.p())];
    if (acc == Complex{}) break;
  }
  return acc;
}

namespace {

// Calls fn(tuple) for every cell (alpha_{-N}..alpha_M) with alpha_M != 0.
template <class Fn>
void for_each_shell_cell(int p, int N, int M, Fn&& fn) {
  const auto width = static_cast<std::size_t>(N + M + 1);
  detail::Odometer odo(p, width);
  do {
    if (odo.digits().back() != 0) fn(std::span<const int>(odo.digits()));
  } while (odo.next());
}

bool shell_vanishes(const Mask& m, int M, double eps) {
  bool vanishes = true;
  for_each_shell_cell(m.p(), m.N(), M, [&](std::span<const int> t) {
    if (vanishes && std::abs(truncated_product(m, t)) > eps) vanishes = false;
  });
  return vanishes;
}

}  // namespace

ScalingFunction scaling_from_mask(const Mask& m, int m_max, double eps) {
  if (m_max < 0) throw std::invalid_argument("scaling_from_mask: m_max must be >= 0");
  for (int M = 0; M <= m_max; ++M) {
    // Sizes the window up front so an oversized search fails loudly.
    Grid shell_window(m.params(), m.N(), M + 1);
    if (!shell_vanishes(m, M, eps)) continue;
    Grid grid(m.params(), m.N(), M);
    SpectralFunction phi(grid);
    for (std::size_t idx = 0; idx < grid.size(); ++idx) {
      phi[idx] = truncated_product(m, grid.tuple(idx));
    }
    return ScalingFunction{std::move(phi), M};
  }
  throw NoFiniteSupport("mask has no scaling function in D_{-N}(G_M^perp) for M <= " +
                        std::to_string(m_max));
}

bool refinement_check(const Mask& m, const SpectralFunction& F, double eps) {
  if (F.grid().params() != m.params()) {
    throw std::invalid_argument("refinement_check: mismatched p");
  }
  const Grid& g = F.grid();
  const int N = std::max(g.N(), m.N());
  const int M = g.M();
  const auto width = static_cast<std::size_t>(N + M + 1);
  // Tuple position q sits at index q + N.
  auto at = [&](std::span<const int> t, int q) {
    return t[static_cast<std::size_t>(q + N)];
  };
  std::vector<int> cell(static_cast<std::size_t>(g.width()));
  auto F_of = [&](std::span<const int> t, int offset) -> Complex {
    // F(zeta A^{-offset}): position q of the argument is position q + offset
    // of zeta. F vanishes outside G_M^perp.
    for (int q = M; q + offset <= M; ++q) {
      if (at(t, q + offset) != 0) return Complex{};
    }
    for (int q = g.lowest(); q <= g.highest(); ++q) {
      const int src = q + offset;
      cell[static_cast<std::size_t>(q + g.N())] = src >= -N && src <= M ? at(t, src) : 0;
    }
    return F[g.index(cell)];
  };
  detail::Odometer odo(m.p(), width);
  do {
    std::span<const int> t(odo.digits());
    const Complex lhs = F_of(t, 0);
    const Complex mask_value =
        m[window_index(t, static_cast<std::size_t>(N - m.N()), m.N(), m.p())];
    const Complex rhs = mask_value * F_of(t, 1);
    if (std::abs(lhs - rhs) > eps) return false;
  } while (odo.next());
  return true;
}

// --- validity ---------------------------------------------------------------

ValidityReport mask_validity(const Mask& m, int M, double eps) {
  if (M < 0) throw std::invalid_argument("mask_validity: M must be >= 0");
  const int p = m.p();
  const int N = m.N();
  Grid shell_window(m.params(), N, M + 1);

  ValidityReport r;
  r.M = M;

  // Route 1: the (M+N+1)-fold product on the shell.
  r.product_vanishes = true;
  for_each_shell_cell(p, N, M, [&](std::span<const int> t) {
    if (std::abs(truncated_product(m, t)) > eps) {
      r.product_vanishes = false;
      r.product_nonzero.emplace_back(t.begin(), t.end());
    }
  });

  // Route 2: zero sets E_k and their dilated images.
  std::map<int, std::set<CosetTuple>> zero_lookup;
  for (int k = -N + 1; k <= M + 1; ++k) {
    auto& list = r.zero_sets[k];
    auto& lookup = zero_lookup[k];
    detail::Odometer odo(p, static_cast<std::size_t>(N + k));
    do {
      const auto& t = odo.digits();
      if (t.back() == 0) continue;
      if (std::abs(m[window_index(t, 0, N, p)]) <= eps) {
        list.push_back(t);
        lookup.insert(t);
      }
    } while (odo.next());
  }

  r.cover_complete = true;
  for_each_shell_cell(p, N, M, [&](std::span<const int> t) {
    bool covered = false;
    for (int k = -N + 1; k <= M + 1 && !covered; ++k) {
      // E_k A^{M+1-k} fixes positions -N+M+1-k..M; shifting those back down
      // by M+1-k lands on positions -N..k-1.
      const auto first = static_cast<std::size_t>(M + 1 - k);
      CosetTuple slice(t.begin() + static_cast<std::ptrdiff_t>(first), t.end());
      covered = zero_lookup[k].contains(slice);
    }
    if (!covered) {
      r.cover_complete = false;
      r.uncovered.emplace_back(t.begin(), t.end());
    }
  });
  return r;
}

bool necessary_condition(const Mask& m, double eps) {
  // alpha_0 is the least-significant digit of k, so each prefix is a block of p.
  const auto p = static_cast<std::size_t>(m.p());
  for (std::size_t base = 0; base < m.size(); base += p) {
    double sum = 0.0;
    for (std::size_t a = 0; a < p; ++a) sum += std::norm(m[base + a]);
    if (std::abs(sum - 1.0) > eps) return false;
  }
  return true;
}

}  // namespace vilenkin
