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

#ifndef VILENKIN_MRA_HPP
#define VILENKIN_MRA_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "vilenkin/mask.hpp"
#include "vilenkin/stepfun.hpp"

namespace vilenkin {

/// Shifts (phi(x - h))_{h in H_0} are orthonormal iff for every prefix
/// (alpha_{-N}..alpha_{-1}) the sum over (alpha_0..alpha_{M-1}) of |F|^2 is 1.
bool orthonormality_spectral(const SpectralFunction& F, double eps = kDefaultEps);

/// Brute-force oracle: <f, f(. - h)> for every h in H_0^{(N)}, plus one shift
/// by g_{-N-1} on an enlarged grid (disjoint support). True iff the Gram row
/// is (1, 0, ..., 0) within eps.
bool orthonormality_direct(const StepFunction& f, double eps = kDefaultEps);

/// Least l >= -N with F = 0 outside G_l^perp.
int support_min_shell(const SpectralFunction& F, double eps = kDefaultEps);

/// Free choices of the 1-elementary construction for a given p and l.
struct ElementarySpec {
  int p = 3;
  int l = 1;
  /// Level-0 zero set: l distinct values in 1..p-1.
  std::vector<int> zero_set;
  /// Top of the chain, taken from the complement of zero_set in 1..p-1.
  int chain_top = 0;
  /// The remaining chain, a permutation of zero_set, listed from the element
  /// linked to chain_top down to the bottom of the chain.
  std::vector<int> chain_order;
  /// Either empty (all phases 1) or p*p unimodular values in mask order
  /// k = alpha_0 + alpha_{-1} p. Only unit-modulus slots use their phase;
  /// phases[0] must be 1.
  std::vector<Complex> phases;

  /// Throws std::invalid_argument describing the first violated constraint.
  void validate(double eps = kDefaultEps) const;
};

/// The N = 1 mask with
///   Lambda(0, 0) = 1, |Lambda(a, 0)| = 0 on zero_set and 1 elsewhere,
///   |Lambda(c_{s-1}, c_s)| = 1 along the chain c = (..., chain_order, chain_top),
/// every other entry 0. Each row of Lambda has exactly one unit entry.
Mask generate_elementary(const ElementarySpec& spec);

/// For every tuple (alpha_{-1}..alpha_{l-1}) other than the chain, the
/// (l+1)-fold Lambda product vanishes; along the chain it is unimodular; and
/// every row feeding into the bottom of the chain is zero.
bool elementary_chain_selftest(const Mask& m, const ElementarySpec& spec,
                               double eps = kDefaultEps);

struct MaskConditions {
  bool constant_on_cosets = true;  // T1, by construction of the table
  bool periodic = true;            // T2, by construction of evaluate()
  bool unit_at_identity = false;   // T3
};

struct MRAReport {
  int p = 0;
  int N = 0;
  MaskConditions mask_conditions;
  bool necessary_condition = false;
  bool no_finite_support = false;
  std::optional<int> M;
  bool mask_valid = false;
  bool refinement_holds = false;
  bool orthonormal_spectral = false;
  bool orthonormal_direct = false;
  std::optional<int> support_min_shell;
  bool density_hypothesis = false;
  bool verdict = false;
  std::optional<ValidityReport> validity;
  std::optional<SpectralFunction> scaling_function;
};

/// Default search cap for M: p - 1.
int default_m_max(const GroupParams& params) noexcept;

/// Full pipeline: structural conditions, necessary condition, scaling
/// function, validity (both criteria), refinement, both orthonormality
/// tests, support shell, density hypothesis. A mask without finite support
/// yields a report with verdict false rather than an exception.
MRAReport mra_report(const Mask& m, int m_max, double eps = kDefaultEps);

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One 0/1 pattern of the enumeration: row alpha_{-1} of Lambda has its
/// single unit entry at column columns[alpha_{-1}] (columns[0] == 0).
struct CatalogEntry {
  std::vector<int> columns;
  int l = 0;  ///< number of rows a != 0 with Lambda(a, 0) == 0
  std::optional<int> M;
  std::optional<int> support_min_shell;
  bool orthonormal_spectral = false;
  bool orthonormal_direct = false;
  bool verdict = false;
  /// l <= p-2 implies support inside G_l^perp; orthonormal implies support
  /// inside G_{p-2}^perp.
  bool bound_ok = true;
};

struct Catalog {
  int p = 0;
  std::vector<CatalogEntry> entries;
  std::size_t counterexamples = 0;
};

/// Lambda for a one-unit-per-row pattern.
Mask pattern_mask(const GroupParams& params, std::span<const int> columns);

/// Evaluates one pattern (phases 1).
CatalogEntry evaluate_pattern(const GroupParams& params, std::span<const int> columns,
                              double eps = kDefaultEps);

struct LevelRange {
  int min = 0;
  int max = 1 << 30;
};

/// All p^{p-1} patterns whose l lies in `levels`, in lexicographic order of
/// (columns[p-1], ..., columns[1]) with columns[1] fastest. Evaluations run
/// on `threads` workers (0 = hardware concurrency); the result order does not
/// depend on it. Throws BudgetExceeded when p^{p-1} > budget.
Catalog enumerate_elementary(const GroupParams& params, LevelRange levels = {},
                             std::size_t budget = 10000, double eps = kDefaultEps,
                             unsigned threads = 0);

}  // namespace vilenkin

#endif  // VILENKIN_MRA_HPP
