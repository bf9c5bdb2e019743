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

#include "oracles.hpp"
#include "vilenkin/io.hpp"

using namespace vilenkin;

TEST(Json, FunctionRoundTrip) {
  std::mt19937_64 rng(51);
  GroupParams p(5);
  StepFunction f(Grid(p, 1, 2), vk_test::random_values(rng, 125));
  auto text = io::to_json(f);
  auto back = io::function_from_json(text);
  ASSERT_TRUE(std::holds_alternative<StepFunction>(back));
  EXPECT_EQ(max_abs_difference(std::get<StepFunction>(back).values(), f.values()), 0.0);
  EXPECT_EQ(io::to_json(back), text);
}

TEST(Json, SpectralSideIsKept) {
  SpectralFunction F(Grid(GroupParams(2), 1, 0), {1.0, -0.0});
  auto text = io::to_json(F);
  EXPECT_NE(text.find("\"side\": \"spectral\""), std::string::npos);
  EXPECT_EQ(text.find("-0"), std::string::npos);
  EXPECT_TRUE(std::holds_alternative<SpectralFunction>(io::function_from_json(text)));
}

TEST(Json, Deterministic) {
  auto m = Mask::haar(GroupParams(3));
  auto r1 = io::to_json(mra_report(m, 2));
  auto r2 = io::to_json(mra_report(m, 2));
  EXPECT_EQ(r1, r2);
  EXPECT_LT(r1.find("\"p\""), r1.find("\"mask_conditions\""));
  EXPECT_LT(r1.find("\"verdict\""), r1.find("\"scaling_function\""));
  auto c1 = io::to_json(enumerate_elementary(GroupParams(3), {}, 10000, kDefaultEps, 1));
  auto c2 = io::to_json(enumerate_elementary(GroupParams(3), {}, 10000, kDefaultEps, 3));
  EXPECT_EQ(c1, c2);
}

TEST(Json, SeventeenDigits) {
  StepFunction f(Grid(GroupParams(2), 0, 0), {Complex(0.1, 1.0 / 3.0)});
  auto text = io::to_json(f);
  EXPECT_NE(text.find("0.10000000000000001"), std::string::npos);
  EXPECT_NE(text.find("0.33333333333333331"), std::string::npos);
}

TEST(Json, MaskRoundTrip) {
  auto m = Mask::haar(GroupParams(5), 2);
  auto back = io::mask_from_json(io::to_json(m));
  EXPECT_EQ(back.N(), 2);
  EXPECT_EQ(max_abs_difference(back.values(), m.values()), 0.0);
}

TEST(Json, Errors) {
  EXPECT_THROW(io::function_from_json("{"), io::FormatError);
  EXPECT_THROW(io::function_from_json(R"({"p":3,"N":0,"M":0,"side":"group","values":[]})"),
               io::FormatError);
  EXPECT_THROW(io::function_from_json(R"({"p":3,"N":1,"M":0,"side":"group","values":[[1,0]]})"),
               io::FormatError);
  EXPECT_THROW(io::function_from_json(R"({"p":4,"N":0,"M":0,"side":"group","values":[[1,0]]})"),
               io::FormatError);
  EXPECT_THROW(io::function_from_json(R"({"p":3,"N":0,"M":0,"side":"up","values":[[1,0]]})"),
               io::FormatError);
  EXPECT_THROW(io::function_from_json(R"({"p":3,"N":0,"M":0,"side":"group","values":[1]})"),
               io::FormatError);
  EXPECT_THROW(io::mask_from_json(R"({"p":3,"N":1,"lambda":[[0,0],[0,0],[0,0],[0,0],[0,0],[0,0],[0,0],[0,0],[0,0]]})"),
               io::FormatError);
  EXPECT_THROW(io::mask_from_json(R"({"p":3,"lambda":[]})"), io::FormatError);
}

TEST(Csv, FunctionColumns) {
  StepFunction f(Grid(GroupParams(3), 1, 1), std::vector<Complex>(9, 0.5));
  auto csv = io::to_csv(f);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "alpha_-1,alpha_0,re,im");
  EXPECT_NE(csv.find("\n1,0,0.5,0\n"), std::string::npos);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 10);
}

TEST(Csv, Catalog) {
  auto csv = io::to_csv(enumerate_elementary(GroupParams(3)));
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 10);
  EXPECT_NE(csv.find("\n0;0;1,1,1,1,1,1,1,1\n"), std::string::npos);
}
