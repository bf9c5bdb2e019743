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

#ifndef VILENKIN_GROUP_HPP
#define VILENKIN_GROUP_HPP

#include <cstdint>
#include <map>
#include <optional>

namespace vilenkin {

/// Global tolerance used for "is zero" / "equals one" decisions.
inline constexpr double kDefaultEps = 1e-9;

/// The prime p of the p-adic Vilenkin group together with its scale factors.
///
/// Subgroup G_n has Haar measure p^{-n}; its annihilator G_n^perp has
/// measure p^n. scale(n) returns p^n and refuses values that cannot be
/// represented exactly.
class GroupParams {
 public:
  /// Throws std::invalid_argument unless p is a prime in [2, kMaxPrime].
  explicit GroupParams(int p);

  static constexpr int kMaxPrime = 1 << 20;

  int p() const noexcept { return p_; }

  /// p^n for n >= 0. Throws std::overflow_error past 2^62.
  std::int64_t power(int n) const;

  /// p^n as a double (n may be negative). Throws std::overflow_error when
  /// p^|n| exceeds 2^53.
  double scale(int n) const;

  friend bool operator==(const GroupParams&, const GroupParams&) = default;

 private:
  int p_;
};

/// Finitely supported digit word, position -> digit in {1..p-1}.
/// Absent positions hold 0, so structural equality is group equality.
using DigitMap = std::map<int, int>;

/// x = sum_n a_n g_n with coordinate-wise addition mod p (no carries).
class GroupElement {
 public:
  explicit GroupElement(GroupParams params) : params_(params) {}

  /// Digits are reduced mod p; zeros are dropped.
  GroupElement(GroupParams params, const DigitMap& digits);

  /// digit * g_position.
  static GroupElement basis(GroupParams params, int position, int digit = 1);

  const GroupParams& params() const noexcept { return params_; }
  const DigitMap& digits() const noexcept { return digits_; }
  int digit(int position) const;
  bool is_zero() const noexcept { return digits_.empty(); }

  /// Lowest position carrying a nonzero digit, if any.
  std::optional<int> lowest_position() const;
  std::optional<int> highest_position() const;

  /// x in G_n, i.e. every nonzero digit sits at a position >= n.
  bool in_subgroup(int n) const;

  /// x in H_0^{(s)}: nonzero digits only at positions -s..-1.
  bool in_h0(int s) const;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;

 private:
  GroupParams params_;
  DigitMap digits_;
};

/// A character coset representative prod_k r_k^{alpha_k}, stored as its
/// finitely supported exponent word.
class CharacterWord {
 public:
  explicit CharacterWord(GroupParams params) : params_(params) {}
  CharacterWord(GroupParams params, const DigitMap& exponents);

  /// r_position^exponent.
  static CharacterWord rademacher(GroupParams params, int position,
                                  int exponent = 1);

  const GroupParams& params() const noexcept { return params_; }
  const DigitMap& exponents() const noexcept { return exponents_; }
  int exponent(int position) const;
  bool is_identity() const noexcept { return exponents_.empty(); }

  std::optional<int> lowest_position() const;
  std::optional<int> highest_position() const;

  /// zeta in G_n^perp, i.e. every nonzero exponent sits at a position <= n-1.
  bool in_annihilator(int n) const;

  friend bool operator==(const CharacterWord&, const CharacterWord&) = default;

 private:
  GroupParams params_;
  DigitMap exponents_;
};

/// Digit-wise sum mod p. Throws std::invalid_argument on mismatched p.
GroupElement add(const GroupElement& x, const GroupElement& y);

/// Digit-wise (p - a) mod p.
GroupElement neg(const GroupElement& x);

/// x - y, i.e. add(x, neg(y)).
GroupElement subtract(const GroupElement& x, const GroupElement& y);

/// A^n x: every digit moves from position k to position k - n.
GroupElement dilate(const GroupElement& x, int n);

/// The character zeta A^n, defined by (zeta A^n, x) = (zeta, A^n x).
/// Exponents move from position k to position k + n, so r_k A = r_{k+1}
/// and zeta A^{-1} lowers every exponent by one position.
CharacterWord dilate_character(const CharacterWord& zeta, int n);

/// Multiplication of characters: exponent-wise sum mod p.
CharacterWord multiply(const CharacterWord& a, const CharacterWord& b);

/// Exponent e in Z_p with (zeta, x) = exp(2 pi i e / p), e = sum_k alpha_k a_k.
/// Throws std::invalid_argument on mismatched p.
int pair(const CharacterWord& zeta, const GroupElement& x);

inline GroupElement operator+(const GroupElement& x, const GroupElement& y) {
  return add(x, y);
}
inline GroupElement operator-(const GroupElement& x, const GroupElement& y) {
  return subtract(x, y);
}
inline GroupElement operator-(const GroupElement& x) { return neg(x); }

bool is_prime(int n) noexcept;

}  // namespace vilenkin

#endif  // VILENKIN_GROUP_HPP
