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


// vkmra: generate masks, verify MRAs, transform tables, enumerate atlases.
//
// Exit codes: 0 success (verify: verdict true), 1 verify verdict false,
// 2 usage or invalid input, 3 I/O failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "vilenkin/vilenkin.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct IoError {
  std::string message;
};

struct Freer {
  void operator()(vk_mask* m) const { vk_mask_free(m); }
  void operator()(vk_report* r) const { vk_report_free(r); }
  void operator()(vk_function* f) const { vk_function_free(f); }
  void operator()(vk_catalog* c) const { vk_catalog_free(c); }
  void operator()(char* s) const { vk_string_free(s); }
};

template <class T>
using Owned = std::unique_ptr<T, Freer>;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError{"cannot open " + path};
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError{"cannot read " + path};
  return text;
}

void write_output(const std::string& path, const char* text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    if (!std::cout) throw IoError{"cannot write to stdout"};
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError{"cannot open " + path + " for writing"};
  out << text;
  out.close();
  if (!out) throw IoError{"cannot write " + path};
}

int report_error(vk_status status) {
  std::cerr << "vkmra: " << vk_status_name(status) << ": " << vk_last_error() << '\n';
  return status == VK_ERR_INTERNAL ? kExitIo : kExitUsage;
}

vk_format parse_format(const std::string& s) { return s == "csv" ? VK_FORMAT_CSV : VK_FORMAT_JSON; }

struct Options {
  double eps = VK_DEFAULT_EPS;
  std::string output;

  int p = 3;
  int l = 1;
  std::vector<int> zeros;
  std::vector<int> chain;

  std::string input;
  int m_max = -1;

  std::string direction = "forward";
  std::string format = "json";
  bool fast = false;

  int l_min = 0;
  std::optional<int> l_max;
  std::size_t budget = 10000;
};

int cmd_generate(const Options& o) {
  vk_mask* raw = nullptr;
  vk_status st = vk_mask_generate_elementary(o.p, o.l, o.zeros.data(), o.zeros.size(),
                                             o.chain.data(), o.chain.size(), &raw);
  if (st != VK_OK) return report_error(st);
  Owned<vk_mask> mask(raw);
  char* text = nullptr;
  if ((st = vk_mask_to_json(mask.get(), &text)) != VK_OK) return report_error(st);
  Owned<char> owned(text);
  write_output(o.output, text);
  return kExitOk;
}

int cmd_verify(const Options& o) {
  const std::string json = read_file(o.input);
  vk_mask* raw = nullptr;
  vk_status st = vk_mask_parse_json(json.c_str(), o.eps, &raw);
  if (st != VK_OK) return report_error(st);
  Owned<vk_mask> mask(raw);
  vk_report* rep = nullptr;
  if ((st = vk_mra_report(mask.get(), o.m_max, o.eps, &rep)) != VK_OK) return report_error(st);
  Owned<vk_report> report(rep);
  char* text = nullptr;
  if ((st = vk_report_to_json(report.get(), &text)) != VK_OK) return report_error(st);
  Owned<char> owned(text);
  write_output(o.output, text);
  const bool verdict = vk_report_verdict(report.get());
  if (vk_report_no_finite_support(report.get())) {
    std::cerr << "vkmra: no finite support found up to M_max\n";
  }
  std::cerr << "verdict: " << (verdict ? "true" : "false") << '\n';
  return verdict ? kExitOk : kExitFalse;
}

int cmd_transform(const Options& o) {
  const std::string json = read_file(o.input);
  vk_function* raw = nullptr;
  vk_status st = vk_function_parse_json(json.c_str(), &raw);
  if (st != VK_OK) return report_error(st);
  Owned<vk_function> in(raw);
  vk_function* res = nullptr;
  const vk_direction dir = o.direction == "inverse" ? VK_INVERSE : VK_FORWARD;
  if ((st = vk_function_transform(in.get(), dir, o.fast, &res)) != VK_OK) return report_error(st);
  Owned<vk_function> out(res);
  char* text = nullptr;
  if ((st = vk_function_serialize(out.get(), parse_format(o.format), &text)) != VK_OK) {
    return report_error(st);
  }
  Owned<char> owned(text);
  write_output(o.output, text);
  return kExitOk;
}

int cmd_atlas(const Options& o) {
  vk_catalog* raw = nullptr;
  const int l_max = o.l_max.value_or(o.p);
  vk_status st = vk_atlas(o.p, o.l_min, l_max, o.budget, o.eps, &raw);
  if (st != VK_OK) return report_error(st);
  Owned<vk_catalog> catalog(raw);
  char* text = nullptr;
  if ((st = vk_catalog_serialize(catalog.get(), parse_format(o.format), &text)) != VK_OK) {
    return report_error(st);
  }
  Owned<char> owned(text);
  write_output(o.output, text);
  std::cerr << "patterns: " << vk_catalog_size(catalog.get())
            << ", bound counterexamples: " << vk_catalog_counterexamples(catalog.get()) << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mask construction and MRA verification on the p-adic Vilenkin group", "vkmra"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--eps", o.eps, "Tolerance for zero and unit tests")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* gen = app.add_subcommand("generate", "Build a 1-elementary mask");
  gen->add_option("--p", o.p, "Prime p >= 3")->required();
  gen->add_option("--l", o.l, "Number of level-0 zeros, 1..p-2")->required();
  gen->add_option("--zeros", o.zeros, "Level-0 zero set")->delimiter(',')->required();
  gen->add_option("--chain", o.chain, "Chain top, then the chain down to its bottom")
      ->delimiter(',')
      ->required();
  gen->add_option("-o,--output", o.output, "Output file (default stdout)");

  auto* ver = app.add_subcommand("verify", "Run the full MRA report on a mask");
  ver->add_option("mask", o.input, "Mask JSON file")->required();
  ver->add_option("--m-max", o.m_max, "Largest support exponent to try (default p-1)");
  ver->add_option("-o,--output", o.output, "Report file (default stdout)");

  auto* tr = app.add_subcommand("transform", "Fourier transform of a function table");
  tr->add_option("input", o.input, "Function JSON file")->required();
  tr->add_option("--direction", o.direction)
      ->check(CLI::IsMember({"forward", "inverse"}))
      ->capture_default_str();
  tr->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  tr->add_flag("--fast", o.fast, "Use the radix-p kernel");
  tr->add_option("-o,--output", o.output, "Output file (default stdout)");

  auto* at = app.add_subcommand("atlas", "Enumerate all one-unit-per-row patterns");
  at->add_option("--p", o.p, "Prime p")->required();
  at->add_option("--l-min", o.l_min)->capture_default_str();
  at->add_option("--l-max", o.l_max);
  at->add_option("--budget", o.budget, "Maximum number of patterns")->capture_default_str();
  at->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  at->add_option("-o,--output", o.output, "Output file (default stdout)");

  for (auto* sub : {gen, ver, tr, at}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) return cmd_generate(o);
    if (*ver) return cmd_verify(o);
    if (*tr) return cmd_transform(o);
    if (*at) return cmd_atlas(o);
  } catch (const IoError& e) {
    std::cerr << "vkmra: " << e.message << '\n';
    return kExitIo;
  }
  return kExitUsage;
}
