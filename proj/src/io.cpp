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

#include "vilenkin/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace vilenkin::io {

namespace {

using Json = nlohmann::ordered_json;

std::string format_double(double v) {
  if (!std::isfinite(v)) throw FormatError("cannot encode non-finite number");
  if (v == 0.0) v = 0.0;  // drops the sign of -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

bool is_scalar(const Json& j) { return !j.is_array() && !j.is_object(); }

void write(const Json& j, std::string& out, int depth) {
  const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
  const std::string close_pad(static_cast<std::size_t>(2 * depth), ' ');
  switch (j.type()) {
    case Json::value_t::number_float:
      out += format_double(j.get<double>());
      return;
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      const bool inline_array = std::all_of(j.begin(), j.end(), is_scalar);
      out += inline_array ? "[" : "[\n";
      bool first = true;
      for (const auto& item : j) {
        if (!first) out += inline_array ? ", " : ",\n";
        first = false;
        if (!inline_array) out += pad;
        write(item, out, depth + 1);
      }
      out += inline_array ? "]" : "\n" + close_pad + "]";
      return;
    }
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ",\n";
        first = false;
        out += pad + Json(key).dump() + ": ";
        write(value, out, depth + 1);
      }
      out += "\n" + close_pad + "}";
      return;
    }
    default:
      out += j.dump();
  }
}

std::string render(const Json& j) {
  std::string out;
  write(j, out, 0);
  out += '\n';
  return out;
}

Json complex_array(std::span<const Complex> values) {
  Json arr = Json::array();
  for (const auto& v : values) arr.push_back(Json::array({v.real(), v.imag()}));
  return arr;
}

template <Side S>
Json function_json(const GridFunction<S>& f) {
  Json j;
  j["p"] = f.grid().p();
  j["N"] = f.grid().N();
  j["M"] = f.grid().M();
  j["side"] = S == Side::group ? "group" : "spectral";
  j["values"] = complex_array(f.values());
  return j;
}

Json tuples_json(const std::vector<CosetTuple>& tuples) {
  Json arr = Json::array();
  for (const auto& t : tuples) arr.push_back(t);
  return arr;
}

Json validity_json(const ValidityReport& r) {
  Json j;
  j["M"] = r.M;
  j["product_vanishes"] = r.product_vanishes;
  j["cover_complete"] = r.cover_complete;
  j["criteria_agree"] = r.criteria_agree();
  j["valid"] = r.valid();
  Json shells = Json::array();
  for (const auto& [k, cosets] : r.zero_sets) {
    Json s;
    s["k"] = k;
    s["cosets"] = tuples_json(cosets);
    shells.push_back(s);
  }
  j["zero_sets"] = shells;
  j["product_nonzero"] = tuples_json(r.product_nonzero);
  j["uncovered"] = tuples_json(r.uncovered);
  return j;
}

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json catalog_entry_json(const CatalogEntry& e) {
  Json j;
  j["pattern"] = e.columns;
  j["l"] = e.l;
  j["M"] = optional_json(e.M);
  j["support_min_shell"] = optional_json(e.support_min_shell);
  j["orthonormal_spectral"] = e.orthonormal_spectral;
  j["orthonormal_direct"] = e.orthonormal_direct;
  j["verdict"] = e.verdict;
  j["bound_ok"] = e.bound_ok;
  return j;
}

// --- parsing ----------------------------------------------------------------

Json parse(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw FormatError(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw FormatError(std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

std::vector<Complex> complex_values(const Json& arr, const char* key) {
  if (!arr.is_array()) throw FormatError(std::string("field \"") + key + "\" must be an array");
  std::vector<Complex> out;
  out.reserve(arr.size());
  for (const auto& item : arr) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number() || !item[1].is_number()) {
      throw FormatError(std::string("entries of \"") + key + "\" must be [re, im] pairs");
    }
    out.emplace_back(item[0].get<double>(), item[1].get<double>());
  }
  return out;
}

template <class Fn>
auto translating(Fn&& fn) {
  try {
    return fn();
  } catch (const FormatError&) {
    throw;
  } catch (const std::exception& e) {
    throw FormatError(e.what());
  }
}

void csv_number(std::ostringstream& os, double v) { os << format_double(v); }

template <Side S>
std::string function_csv(const GridFunction<S>& f) {
  const Grid& g = f.grid();
  std::ostringstream os;
  for (int q = g.lowest(); q <= g.highest(); ++q) os << "alpha_" << q << ',';
  os << "re,im\n";
  for (std::size_t idx = 0; idx < f.size(); ++idx) {
    for (int d : g.tuple(idx)) os << d << ',';
    csv_number(os, f[idx].real());
    os << ',';
    csv_number(os, f[idx].imag());
    os << '\n';
  }
  return os.str();
}

}  // namespace

std::string to_json(const StepFunction& f) { return render(function_json(f)); }
std::string to_json(const SpectralFunction& F) { return render(function_json(F)); }
std::string to_json(const AnyFunction& f) {
  return std::visit([](const auto& x) { return to_json(x); }, f);
}

std::string to_json(const Mask& m) {
  Json j;
  j["p"] = m.p();
  j["N"] = m.N();
  j["lambda"] = complex_array(m.values());
  return render(j);
}

std::string to_json(const ValidityReport& r) { return render(validity_json(r)); }

std::string to_json(const MRAReport& r) {
  Json j;
  j["p"] = r.p;
  j["N"] = r.N;
  Json cond;
  cond["T1"] = r.mask_conditions.constant_on_cosets;
  cond["T2"] = r.mask_conditions.periodic;
  cond["T3"] = r.mask_conditions.unit_at_identity;
  j["mask_conditions"] = cond;
  j["necessary_condition"] = r.necessary_condition;
  j["no_finite_support"] = r.no_finite_support;
  j["M"] = optional_json(r.M);
  j["mask_valid"] = r.mask_valid;
  j["refinement_holds"] = r.refinement_holds;
  j["orthonormal_spectral"] = r.orthonormal_spectral;
  j["orthonormal_direct"] = r.orthonormal_direct;
  j["support_min_shell"] = optional_json(r.support_min_shell);
  j["density_hypothesis"] = r.density_hypothesis;
  j["verdict"] = r.verdict;
  j["validity"] = r.validity ? validity_json(*r.validity) : Json(nullptr);
  j["scaling_function"] = r.scaling_function ? function_json(*r.scaling_function) : Json(nullptr);
  return render(j);
}

std::string to_json(const Catalog& c) {
  Json arr = Json::array();
  for (const auto& e : c.entries) arr.push_back(catalog_entry_json(e));
  return render(arr);
}

std::string to_csv(const StepFunction& f) { return function_csv(f); }
std::string to_csv(const SpectralFunction& F) { return function_csv(F); }
std::string to_csv(const AnyFunction& f) {
  return std::visit([](const auto& x) { return to_csv(x); }, f);
}

std::string to_csv(const Catalog& c) {
  std::ostringstream os;
  os << "pattern,l,M,support_min_shell,orthonormal_spectral,orthonormal_direct,verdict,bound_ok\n";
  for (const auto& e : c.entries) {
    for (std::size_t i = 0; i < e.columns.size(); ++i) os << (i ? ";" : "") << e.columns[i];
    os << ',' << e.l << ',';
    if (e.M) os << *e.M;
    os << ',';
    if (e.support_min_shell) os << *e.support_min_shell;
    os << ',' << e.orthonormal_spectral << ',' << e.orthonormal_direct << ','
       << e.verdict << ',' << e.bound_ok << '\n';
  }
  return os.str();
}

AnyFunction function_from_json(std::string_view text) {
  const Json j = parse(text);
  return translating([&]() -> AnyFunction {
    const GroupParams params(int_field(j, "p"));
    const Grid grid(params, int_field(j, "N"), int_field(j, "M"));
    const Json& side = field(j, "side");
    auto values = complex_values(field(j, "values"), "values");
    if (values.empty()) throw FormatError("function table is empty");
    if (side == "group") return StepFunction(grid, std::move(values));
    if (side == "spectral") return SpectralFunction(grid, std::move(values));
    throw FormatError("field \"side\" must be \"group\" or \"spectral\"");
  });
}

Mask mask_from_json(std::string_view text, double eps) {
  const Json j = parse(text);
  return translating([&] {
    const GroupParams params(int_field(j, "p"));
    return Mask(params, int_field(j, "N"), complex_values(field(j, "lambda"), "lambda"), eps);
  });
}

}  // namespace vilenkin::io
