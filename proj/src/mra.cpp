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

#include "vilenkin/mra.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <set>
#include <thread>

#include "odometer.hpp"

namespace vilenkin {

// --- orthonormality ---------------------------------------------------------

bool orthonormality_spectral(const SpectralFunction& F, double eps) {
  const Grid& g = F.grid();
  const auto inner = static_cast<std::size_t>(g.params().power(g.N()));
  const auto outer = static_cast<std::size_t>(g.params().power(g.M()));
  // Positions -N..-1 are the low digits of the flat index.
  for (std::size_t prefix = 0; prefix < inner; ++prefix) {
    double sum = 0.0;
    for (std::size_t s = 0; s < outer; ++s) sum += std::norm(F[prefix + inner * s]);
    if (std::abs(sum - 1.0) > eps) return false;
  }
  return true;
}

bool orthonormality_direct(const StepFunction& f, double eps) {
  const Grid& g = f.grid();
  const auto& params = g.params();
  detail::Odometer odo(g.p(), static_cast<std::size_t>(g.N()));
  do {
    DigitMap digits;
    for (std::size_t i = 0; i < odo.digits().size(); ++i) {
      digits.emplace(static_cast<int>(i) - g.N(), odo.digits()[i]);
    }
    const GroupElement h(params, digits);
    const Complex ip = inner_product(f, shift(f, h));
    const Complex expected = h.is_zero() ? Complex(1.0, 0.0) : Complex{};
    if (std::abs(ip - expected) > eps) return false;
  } while (odo.next());

  // Shifts leaving G_{-N} have disjoint support; spot-check one of them.
  const StepFunction wide = enlarge(f, g.N() + 1, g.M());
  const Complex far = inner_product(wide, shift(wide, GroupElement::basis(params, -g.N() - 1)));
  return std::abs(far) <= eps;
}

int support_min_shell(const SpectralFunction& F, double eps) {
  const Grid& g = F.grid();
  int shell = -g.N();
  for (std::size_t idx = 0; idx < F.size(); ++idx) {
    if (std::abs(F[idx]) <= eps) continue;
    const auto t = g.tuple(idx);
    for (int i = static_cast<int>(t.size()) - 1; i >= 0; --i) {
      if (t[static_cast<std::size_t>(i)] != 0) {
        shell = std::max(shell, i - g.N() + 1);
        break;
      }
    }
  }
  return shell;
}

// --- elementary masks -------------------------------------------------------

void ElementarySpec::validate(double eps) const {
  auto fail = [](const std::string& what) { throw std::invalid_argument("elementary spec: " + what); };
  if (!is_prime(p)) fail("p must be prime");
  if (p < 3) fail("p must be at least 3");
  if (l < 1 || l > p - 2) fail("l must lie in [1, p-2]");
  if (static_cast<int>(zero_set.size()) != l) fail("zero set must have exactly l elements");
  std::set<int> zeros;
  for (int a : zero_set) {
    if (a < 1 || a > p - 1) fail("zero set values must lie in 1..p-1");
    if (!zeros.insert(a).second) fail("zero set values must be distinct");
  }
  if (chain_top < 1 || chain_top > p - 1) fail("chain top must lie in 1..p-1");
  if (zeros.contains(chain_top)) fail("chain top must not belong to the zero set");
  std::vector<int> order = chain_order;
  std::sort(order.begin(), order.end());
  if (!std::equal(order.begin(), order.end(), zeros.begin(), zeros.end())) {
    fail("chain order must be a permutation of the zero set");
  }
  if (!phases.empty()) {
    if (phases.size() != static_cast<std::size_t>(p * p)) fail("phases must have p*p entries");
    for (const auto& ph : phases) {
      if (std::abs(std::abs(ph) - 1.0) > eps) fail("phases must be unimodular");
    }
    if (std::abs(phases[0] - Complex(1.0, 0.0)) > eps) fail("phase at the identity slot must be 1");
  }
}

namespace {

// (chain_top, chain_order...) = (c_{l-1}, c_{l-2}, ..., c_{-1}).
std::vector<int> chain_top_down(const ElementarySpec& spec) {
  std::vector<int> seq{spec.chain_top};
  seq.insert(seq.end(), spec.chain_order.begin(), spec.chain_order.end());
  return seq;
}

}  // namespace

Mask generate_elementary(const ElementarySpec& spec) {
  spec.validate();
  const GroupParams params(spec.p);
  const int p = spec.p;
  std::vector<std::vector<Complex>> rows(static_cast<std::size_t>(p),
                                         std::vector<Complex>(static_cast<std::size_t>(p)));
  auto set_unit = [&](int row, int col) {
    const auto k = static_cast<std::size_t>(col + row * p);
    rows[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] =
        spec.phases.empty() || k == 0 ? Complex(1.0, 0.0) : spec.phases[k];
  };
  const std::set<int> zeros(spec.zero_set.begin(), spec.zero_set.end());
  set_unit(0, 0);
  for (int a = 1; a < p; ++a) {
    if (!zeros.contains(a)) set_unit(a, 0);
  }
  const auto seq = chain_top_down(spec);
  for (std::size_t i = 1; i < seq.size(); ++i) set_unit(seq[i], seq[i - 1]);
  return Mask::from_lambda(params, rows);
}

bool elementary_chain_selftest(const Mask& m, const ElementarySpec& spec, double eps) {
  if (m.N() != 1 || m.p() != spec.p) return false;
  const int p = spec.p;
  const int l = spec.l;
  auto seq = chain_top_down(spec);
  std::reverse(seq.begin(), seq.end());  // (c_{-1}, ..., c_{l-1})

  // Shell-l cells (alpha_{-1}..alpha_{l-1}), alpha_{l-1} != 0: the Lambda
  // product is unimodular on the chain and zero elsewhere.
  detail::Odometer odo(p, static_cast<std::size_t>(l + 1));
  do {
    const auto& t = odo.digits();
    if (t.back() == 0) continue;
    Complex prod(1.0, 0.0);
    for (std::size_t j = 0; j + 1 < t.size(); ++j) prod *= m.lambda(t[j], t[j + 1]);
    prod *= m.lambda(t.back(), 0);
    const bool on_chain = t == seq;
    if (on_chain && std::abs(std::abs(prod) - 1.0) > eps) return false;
    if (!on_chain && std::abs(prod) > eps) return false;
  } while (odo.next());

  // Nothing leads into the bottom of the chain.
  for (int a = 0; a < p; ++a) {
    if (std::abs(m.lambda(a, seq.front())) > eps) return false;
  }
  return true;
}

// --- report -----------------------------------------------------------------

int default_m_max(const GroupParams& params) noexcept { return params.p() - 1; }

MRAReport mra_report(const Mask& m, int m_max, double eps) {
  MRAReport r;
  r.p = m.p();
  r.N = m.N();
  r.mask_conditions.unit_at_identity = std::abs(m[0] - Complex(1.0, 0.0)) <= eps;
  r.necessary_condition = necessary_condition(m, eps);

  std::optional<ScalingFunction> sf;
  try {
    sf = scaling_from_mask(m, m_max, eps);
  } catch (const NoFiniteSupport&) {
    r.no_finite_support = true;
    return r;
  }
  r.M = sf->M;
  r.validity = mask_validity(m, sf->M, eps);
  r.mask_valid = r.validity->valid() && r.validity->criteria_agree();
  r.refinement_holds = refinement_check(m, sf->phi_hat, eps);
  r.orthonormal_spectral = orthonormality_spectral(sf->phi_hat, eps);
  r.orthonormal_direct = orthonormality_direct(inverse_fourier_fast(sf->phi_hat), eps);
  r.support_min_shell = support_min_shell(sf->phi_hat, eps);
  // phi^ is nonzero on the neighbourhood G_{-N}^perp of the identity, and
  // every chi A^{-n} eventually falls into it.
  r.density_hypothesis = std::abs(sf->phi_hat[0]) > eps;
  r.scaling_function = std::move(sf->phi_hat);

  const auto& c = r.mask_conditions;
  r.verdict = c.constant_on_cosets && c.periodic && c.unit_at_identity &&
              r.necessary_condition && r.mask_valid && r.refinement_holds &&
              r.orthonormal_spectral && r.orthonormal_direct && r.density_hypothesis;
  return r;
}

// --- enumeration ------------------------------------------------------------

Mask pattern_mask(const GroupParams& params, std::span<const int> columns) {
  const int p = params.p();
  if (columns.size() != static_cast<std::size_t>(p)) {
    throw std::invalid_argument("pattern: need one column per row");
  }
  if (columns[0] != 0) throw std::invalid_argument("pattern: row 0 must select column 0");
  std::vector<std::vector<Complex>> rows(static_cast<std::size_t>(p),
                                         std::vector<Complex>(static_cast<std::size_t>(p)));
  for (int a = 0; a < p; ++a) {
    const int c = columns[static_cast<std::size_t>(a)];
    if (c < 0 || c >= p) throw std::invalid_argument("pattern: column outside 0..p-1");
    rows[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)] = 1.0;
  }
  return Mask::from_lambda(params, rows);
}

namespace {

int pattern_level(std::span<const int> columns) {
  return static_cast<int>(std::count_if(columns.begin() + 1, columns.end(),
                                        [](int c) { return c != 0; }));
}

}  // namespace

CatalogEntry evaluate_pattern(const GroupParams& params, std::span<const int> columns,
                              double eps) {
  CatalogEntry e;
  e.columns.assign(columns.begin(), columns.end());
  e.l = pattern_level(columns);
  const MRAReport r = mra_report(pattern_mask(params, columns), default_m_max(params), eps);
  e.M = r.M;
  e.support_min_shell = r.support_min_shell;
  e.orthonormal_spectral = r.orthonormal_spectral;
  e.orthonormal_direct = r.orthonormal_direct;
  e.verdict = r.verdict;
  const int p = params.p();
  if (!e.support_min_shell) {
    e.bound_ok = false;
  } else {
    const int shell = *e.support_min_shell;
    const bool orthonormal = e.orthonormal_spectral || e.orthonormal_direct;
    e.bound_ok = (e.l > p - 2 || shell <= e.l) && (!orthonormal || shell <= p - 2);
  }
  return e;
}

Catalog enumerate_elementary(const GroupParams& params, LevelRange levels,
                             std::size_t budget, double eps, unsigned threads) {
  const int p = params.p();
  const auto count = static_cast<std::size_t>(params.power(p - 1));
  if (count > budget) {
    throw BudgetExceeded("enumeration of " + std::to_string(count) +
                         " patterns exceeds budget " + std::to_string(budget));
  }

  std::vector<std::vector<int>> patterns;
  detail::Odometer odo(p, static_cast<std::size_t>(p - 1));
  do {
    std::vector<int> columns{0};
    columns.insert(columns.end(), odo.digits().begin(), odo.digits().end());
    const int l = pattern_level(columns);
    if (l >= levels.min && l <= levels.max) patterns.push_back(std::move(columns));
  } while (odo.next());

  Catalog cat;
  cat.p = p;
  cat.entries.resize(patterns.size());

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(patterns.size(), 1)));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < patterns.size();) {
      try {
        cat.entries[i] = evaluate_pattern(params, patterns[i], eps);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();
  if (failure) std::rethrow_exception(failure);

  cat.counterexamples = static_cast<std::size_t>(
      std::count_if(cat.entries.begin(), cat.entries.end(),
                    [](const CatalogEntry& e) { return !e.bound_ok; }));
  return cat;
}

}  // namespace vilenkin
