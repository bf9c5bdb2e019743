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

#include "vilenkin/group.hpp"

#include <stdexcept>
#include <string>

namespace vilenkin {

namespace {

int reduce(std::int64_t v, int p) {
  auto r = static_cast<int>(v % p);
  return r < 0 ? r + p : r;
}

DigitMap canonical(const DigitMap& in, int p) {
  DigitMap out;
  for (auto [pos, d] : in) {
    int r = reduce(d, p);
    if (r != 0) out.emplace(pos, r);
  }
  return out;
}

DigitMap shifted(const DigitMap& in, int offset) {
  DigitMap out;
  for (auto [pos, d] : in) out.emplace(pos + offset, d);
  return out;
}

void require_same(const GroupParams& a, const GroupParams& b, const char* op) {
  if (a != b) {
    throw std::invalid_argument(std::string(op) + ": mismatched primes " +
                                std::to_string(a.p()) + " and " +
                                std::to_string(b.p()));
  }
}

std::optional<int> lowest(const DigitMap& m) {
  if (m.empty()) return std::nullopt;
  return m.begin()->first;
}

std::optional<int> highest(const DigitMap& m) {
  if (m.empty()) return std::nullopt;
  return m.rbegin()->first;
}

}  // namespace

bool is_prime(int n) noexcept {
  if (n < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

GroupParams::GroupParams(int p) : p_(p) {
  if (!is_prime(p) || p > kMaxPrime) {
    throw std::invalid_argument("p must be a prime <= " +
                                std::to_string(kMaxPrime) + ", got " +
                                std::to_string(p));
  }
}

std::int64_t GroupParams::power(int n) const {
  if (n < 0) throw std::invalid_argument("power: negative exponent");
  constexpr std::int64_t kLimit = std::int64_t{1} << 62;
  std::int64_t r = 1;
  for (int i = 0; i < n; ++i) {
    if (r > kLimit / p_) throw std::overflow_error("power: p^n overflows");
    r *= p_;
  }
  return r;
}

double GroupParams::scale(int n) const {
  constexpr std::int64_t kExact = std::int64_t{1} << 53;
  std::int64_t magnitude = power(n < 0 ? -n : n);
  if (magnitude > kExact) throw std::overflow_error("scale: p^n not exact");
  auto d = static_cast<double>(magnitude);
  return n < 0 ? 1.0 / d : d;
}

// --- GroupElement -----------------------------------------------------------

GroupElement::GroupElement(GroupParams params, const DigitMap& digits)
    : params_(params), digits_(canonical(digits, params.p())) {}

GroupElement GroupElement::basis(GroupParams params, int position, int digit) {
  return GroupElement(params, DigitMap{{position, digit}});
}

int GroupElement::digit(int position) const {
  auto it = digits_.find(position);
  return it == digits_.end() ? 0 : it->second;
}

std::optional<int> GroupElement::lowest_position() const {
  return lowest(digits_);
}

std::optional<int> GroupElement::highest_position() const {
  return highest(digits_);
}

bool GroupElement::in_subgroup(int n) const {
  auto lo = lowest_position();
  return !lo || *lo >= n;
}

bool GroupElement::in_h0(int s) const {
  if (is_zero()) return true;
  return *lowest_position() >= -s && *highest_position() <= -1;
}

// --- CharacterWord ----------------------------------------------------------

CharacterWord::CharacterWord(GroupParams params, const DigitMap& exponents)
    : params_(params), exponents_(canonical(exponents, params.p())) {}

CharacterWord CharacterWord::rademacher(GroupParams params, int position,
                                        int exponent) {
  return CharacterWord(params, DigitMap{{position, exponent}});
}

int CharacterWord::exponent(int position) const {
  auto it = exponents_.find(position);
  return it == exponents_.end() ? 0 : it->second;
}

std::optional<int> CharacterWord::lowest_position() const {
  return lowest(exponents_);
}

std::optional<int> CharacterWord::highest_position() const {
  return highest(exponents_);
}

bool CharacterWord::in_annihilator(int n) const {
  auto hi = highest_position();
  return !hi || *hi <= n - 1;
}

// --- operations -------------------------------------------------------------

GroupElement add(const GroupElement& x, const GroupElement& y) {
  require_same(x.params(), y.params(), "add");
  DigitMap sum = x.digits();
  for (auto [pos, d] : y.digits()) sum[pos] += d;
  return GroupElement(x.params(), sum);
}

GroupElement neg(const GroupElement& x) {
  DigitMap out;
  for (auto [pos, d] : x.digits()) out.emplace(pos, x.params().p() - d);
  return GroupElement(x.params(), out);
}

GroupElement subtract(const GroupElement& x, const GroupElement& y) {
  return add(x, neg(y));
}

GroupElement dilate(const GroupElement& x, int n) {
  return GroupElement(x.params(), shifted(x.digits(), -n));
}

CharacterWord dilate_character(const CharacterWord& zeta, int n) {
  return CharacterWord(zeta.params(), shifted(zeta.exponents(), n));
}

CharacterWord multiply(const CharacterWord& a, const CharacterWord& b) {
  require_same(a.params(), b.params(), "multiply");
  DigitMap sum = a.exponents();
  for (auto [pos, e] : b.exponents()) sum[pos] += e;
  return CharacterWord(a.params(), sum);
}

int pair(const CharacterWord& zeta, const GroupElement& x) {
  require_same(zeta.params(), x.params(), "pair");
  const int p = x.params().p();
  std::int64_t acc = 0;
  const auto& small = zeta.exponents().size() <= x.digits().size()
                          ? zeta.exponents()
                          : x.digits();
  const auto& large = &small == &zeta.exponents() ? x.digits()
                                                  : zeta.exponents();
  for (auto [pos, v] : small) {
    auto it = large.find(pos);
    if (it != large.end()) {
      acc = (acc + static_cast<std::int64_t>(v) * it->second) % p;
    }
  }
  return reduce(acc, p);
}

}  // namespace vilenkin
