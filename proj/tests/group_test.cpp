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

#include <random>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "vilenkin/group.hpp"

using namespace vilenkin;

namespace {

// Every element with digits at positions lo..hi.
std::vector<GroupElement> all_elements(GroupParams params, int lo, int hi) {
  std::vector<GroupElement> out;
  const int width = hi - lo + 1;
  std::vector<int> d(static_cast<std::size_t>(width), 0);
  while (true) {
    DigitMap m;
    for (int i = 0; i < width; ++i) m[lo + i] = d[static_cast<std::size_t>(i)];
    out.emplace_back(params, m);
    int i = 0;
    while (i < width && ++d[static_cast<std::size_t>(i)] == params.p()) d[static_cast<std::size_t>(i++)] = 0;
    if (i == width) break;
  }
  return out;
}

}  // namespace

TEST(GroupParams, RejectsNonPrimes) {
  EXPECT_THROW(GroupParams(1), std::invalid_argument);
  EXPECT_THROW(GroupParams(4), std::invalid_argument);
  EXPECT_THROW(GroupParams(-3), std::invalid_argument);
  EXPECT_NO_THROW(GroupParams(2));
  EXPECT_NO_THROW(GroupParams(7919));
}

TEST(GroupParams, Scale) {
  GroupParams p3(3);
  EXPECT_EQ(p3.power(4), 81);
  EXPECT_DOUBLE_EQ(p3.scale(-2), 1.0 / 9.0);
  EXPECT_THROW(p3.power(60), std::overflow_error);
}

TEST(GroupElement, DigitsAreReducedAndTrimmed) {
  GroupParams p(3);
  GroupElement x(p, {{-1, 5}, {0, 3}, {2, 0}});
  EXPECT_EQ(x.digit(-1), 2);
  EXPECT_EQ(x.digit(0), 0);
  EXPECT_EQ(x.digits().size(), 1u);
  EXPECT_EQ(x.lowest_position(), -1);
}

TEST(Group, AddWithoutCarry) {
  GroupParams p(3);
  auto x = GroupElement::basis(p, -1, 2);
  auto s = x + x;
  EXPECT_EQ(s.digit(-1), 1);
  EXPECT_EQ(s.digit(0), 0);
}

TEST(Group, AxiomsExhaustive) {
  for (int prime : {2, 3, 5}) {
    GroupParams params(prime);
    auto elems = all_elements(params, -2, 2);
    GroupElement zero(params);
    std::mt19937_64 rng(prime);
    std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
    for (const auto& x : elems) {
      EXPECT_EQ(x + zero, x);
      EXPECT_TRUE((x + neg(x)).is_zero());
      EXPECT_EQ(neg(neg(x)), x);
      const auto& y = elems[pick(rng)];
      const auto& z = elems[pick(rng)];
      EXPECT_EQ(x + y, y + x);
      EXPECT_EQ((x + y) + z, x + (y + z));
      EXPECT_EQ((x - y) + y, x);
    }
  }
}

TEST(Group, NegExamples) {
  GroupParams p3(3);
  EXPECT_TRUE(neg(GroupElement(p3)).is_zero());
  EXPECT_EQ(neg(GroupElement::basis(p3, 0, 1)), GroupElement::basis(p3, 0, 2));
  GroupParams p7(7);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    auto x = vk_test::random_element(rng, p7, -4, 4);
    EXPECT_TRUE(add(x, neg(x)).is_zero());
  }
}

TEST(Group, MismatchedPrimeThrows) {
  EXPECT_THROW(add(GroupElement::basis(GroupParams(3), 0), GroupElement::basis(GroupParams(5), 0)),
               std::invalid_argument);
}

TEST(Group, Subgroups) {
  GroupParams p(5);
  auto x = GroupElement(p, {{-2, 1}, {3, 4}});
  EXPECT_TRUE(x.in_subgroup(-2));
  EXPECT_FALSE(x.in_subgroup(-1));
  EXPECT_FALSE(x.in_h0(2));
  EXPECT_TRUE(GroupElement(p, {{-2, 1}, {-1, 3}}).in_h0(2));
  EXPECT_FALSE(GroupElement(p, {{-3, 1}}).in_h0(2));
}

TEST(Dilation, Examples) {
  GroupParams p(3);
  EXPECT_EQ(dilate(GroupElement::basis(p, 0), 1), GroupElement::basis(p, -1));
  std::mt19937_64 rng(1);
  for (int i = 0; i < 50; ++i) {
    auto x = vk_test::random_element(rng, p, -3, 3);
    EXPECT_EQ(dilate(x, 0), x);
    EXPECT_EQ(dilate(dilate(x, 3), -3), x);
    auto z = vk_test::random_word(rng, p, -3, 3);
    EXPECT_EQ(dilate_character(z, 0), z);
    EXPECT_EQ(dilate_character(dilate_character(z, 2), -2), z);
  }
}

TEST(Pairing, RademacherTable) {
  for (int prime : {2, 3, 5}) {
    GroupParams p(prime);
    for (int n = -3; n <= 3; ++n) {
      for (int k = -3; k <= 3; ++k) {
        EXPECT_EQ(pair(CharacterWord::rademacher(p, n), GroupElement::basis(p, k)), n == k ? 1 : 0);
      }
    }
  }
}

TEST(Pairing, WorkedExample) {
  GroupParams p(3);
  CharacterWord z(p, {{-1, 2}, {0, 1}});
  GroupElement x(p, {{-1, 2}, {0, 2}});
  EXPECT_EQ(pair(z, x), 0);
}

TEST(Pairing, Bilinear) {
  GroupParams p(5);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    auto x = vk_test::random_element(rng, p, -3, 3);
    auto y = vk_test::random_element(rng, p, -3, 3);
    auto a = vk_test::random_word(rng, p, -3, 3);
    auto b = vk_test::random_word(rng, p, -3, 3);
    EXPECT_EQ(pair(a, x + y), (pair(a, x) + pair(a, y)) % 5);
    EXPECT_EQ(pair(multiply(a, b), x), (pair(a, x) + pair(b, x)) % 5);
  }
}

TEST(Pairing, DilationAdjoint) {
  for (int prime : {2, 3, 5}) {
    GroupParams p(prime);
    std::mt19937_64 rng(prime + 10);
    for (int i = 0; i < 200; ++i) {
      auto x = vk_test::random_element(rng, p, -4, 4);
      auto z = vk_test::random_word(rng, p, -4, 4);
      for (int n : {-2, -1, 1, 2}) {
        EXPECT_EQ(pair(dilate_character(z, n), x), pair(z, dilate(x, n)));
      }
    }
  }
}

TEST(Pairing, RademacherUnderDilationAgainstBasis) {
  GroupParams p(3);
  for (int k = -3; k <= 3; ++k) {
    auto r = dilate_character(CharacterWord::rademacher(p, k), 1);
    for (int j = -4; j <= 4; ++j) {
      EXPECT_EQ(pair(r, GroupElement::basis(p, j)), pair(CharacterWord::rademacher(p, k), dilate(GroupElement::basis(p, j), 1)));
    }
    EXPECT_EQ(r, CharacterWord::rademacher(p, k + 1));
  }
}

TEST(Annihilator, TrivialOnSubgroup) {
  for (int prime : {2, 3}) {
    GroupParams p(prime);
    std::mt19937_64 rng(prime);
    for (int n = -2; n <= 2; ++n) {
      for (int i = 0; i < 100; ++i) {
        auto z = vk_test::random_word(rng, p, -4, n - 1);
        ASSERT_TRUE(z.in_annihilator(n));
        auto x = vk_test::random_element(rng, p, n, n + 4);
        ASSERT_TRUE(x.in_subgroup(n));
        EXPECT_EQ(pair(z, x), 0);
      }
      auto outside = CharacterWord::rademacher(p, n);
      EXPECT_FALSE(outside.in_annihilator(n));
      EXPECT_NE(pair(outside, GroupElement::basis(p, n)), 0);
    }
  }
}
