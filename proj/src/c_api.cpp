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


#include "vilenkin/vilenkin.h"

#include <climits>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <stdexcept>
#include <string>
#include <utility>

#include "vilenkin/io.hpp"
#include "vilenkin/mask.hpp"
#include "vilenkin/mra.hpp"

struct vk_mask {
  vilenkin::Mask mask;
};

struct vk_function {
  vilenkin::io::AnyFunction fn;
};

struct vk_report {
  vilenkin::MRAReport report;
};

struct vk_catalog {
  vilenkin::Catalog catalog;
};

namespace {

thread_local std::string last_error;

vk_status fail(vk_status status, const char* what) {
  last_error = what;
  return status;
}

template <class Fn>
vk_status guarded(Fn&& fn) {
  try {
    fn();
    return VK_OK;
  } catch (const vilenkin::io::FormatError& e) {
    return fail(VK_ERR_FORMAT, e.what());
  } catch (const vilenkin::NoFiniteSupport& e) {
    return fail(VK_ERR_NO_FINITE_SUPPORT, e.what());
  } catch (const vilenkin::BudgetExceeded& e) {
    return fail(VK_ERR_BUDGET, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(VK_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::domain_error& e) {
    return fail(VK_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::length_error& e) {
    return fail(VK_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::overflow_error& e) {
    return fail(VK_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(VK_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(VK_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(VK_ERR_INTERNAL, "unknown error");
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

#define VK_REQUIRE(cond, msg) \
  do {                        \
    if (!(cond)) return fail(VK_ERR_INVALID_ARGUMENT, msg); \
  } while (0)

}  // namespace

extern "C" {

const char* vk_last_error(void) { return last_error.c_str(); }

const char* vk_status_name(vk_status status) {
  switch (status) {
    case VK_OK:
      return "ok";
    case VK_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case VK_ERR_FORMAT:
      return "format error";
    case VK_ERR_NO_FINITE_SUPPORT:
      return "no finite support";
    case VK_ERR_BUDGET:
      return "budget exceeded";
    case VK_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

void vk_string_free(char* s) { std::free(s); }

// ---- masks ------------------------------------------------------------------

vk_status vk_mask_generate_elementary(int p, int l, const int* zeros, size_t n_zeros,
                                      const int* chain, size_t n_chain, vk_mask** out) {
  VK_REQUIRE(out, "out is null");
  VK_REQUIRE(n_zeros == 0 || zeros, "zeros is null");
  VK_REQUIRE(n_chain == 0 || chain, "chain is null");
  VK_REQUIRE(n_chain >= 1, "chain needs the chain top followed by the zero set");
  return guarded([&] {
    vilenkin::ElementarySpec spec;
    spec.p = p;
    spec.l = l;
    spec.zero_set.assign(zeros, zeros + n_zeros);
    spec.chain_top = chain[0];
    spec.chain_order.assign(chain + 1, chain + n_chain);
    *out = new vk_mask{vilenkin::generate_elementary(spec)};
  });
}

vk_status vk_mask_haar(int p, int n, vk_mask** out) {
  VK_REQUIRE(out, "out is null");
  return guarded([&] {
    *out = new vk_mask{vilenkin::Mask::haar(vilenkin::GroupParams(p), n)};
  });
}

vk_status vk_mask_parse_json(const char* json, double eps, vk_mask** out) {
  VK_REQUIRE(json && out, "null argument");
  return guarded([&] { *out = new vk_mask{vilenkin::io::mask_from_json(json, eps)}; });
}

vk_status vk_mask_to_json(const vk_mask* mask, char** out) {
  VK_REQUIRE(mask && out, "null argument");
  return guarded([&] { *out = dup_string(vilenkin::io::to_json(mask->mask)); });
}

int vk_mask_p(const vk_mask* mask) { return mask ? mask->mask.p() : 0; }

int vk_mask_n(const vk_mask* mask) { return mask ? mask->mask.N() : 0; }

vk_status vk_mask_values(const vk_mask* mask, double* out, size_t capacity) {
  VK_REQUIRE(mask && out, "null argument");
  const auto values = mask->mask.values();
  VK_REQUIRE(capacity >= 2 * values.size(), "buffer too small for the mask table");
  for (size_t i = 0; i < values.size(); ++i) {
    out[2 * i] = values[i].real();
    out[2 * i + 1] = values[i].imag();
  }
  return VK_OK;
}

void vk_mask_free(vk_mask* mask) { delete mask; }

// ---- reports ----------------------------------------------------------------

vk_status vk_mra_report(const vk_mask* mask, int m_max, double eps, vk_report** out) {
  VK_REQUIRE(mask && out, "null argument");
  VK_REQUIRE(eps > 0, "eps must be positive");
  return guarded([&] {
    const int cap = m_max < 0 ? vilenkin::default_m_max(mask->mask.params()) : m_max;
    *out = new vk_report{vilenkin::mra_report(mask->mask, cap, eps)};
  });
}

int vk_report_verdict(const vk_report* report) { return report && report->report.verdict; }

int vk_report_m(const vk_report* report) {
  return report && report->report.M ? *report->report.M : -1;
}

int vk_report_support_min_shell(const vk_report* report) {
  return report && report->report.support_min_shell ? *report->report.support_min_shell
                                                    : INT_MIN;
}

int vk_report_no_finite_support(const vk_report* report) {
  return report && report->report.no_finite_support;
}

vk_status vk_report_to_json(const vk_report* report, char** out) {
  VK_REQUIRE(report && out, "null argument");
  return guarded([&] { *out = dup_string(vilenkin::io::to_json(report->report)); });
}

void vk_report_free(vk_report* report) { delete report; }

// ---- functions --------------------------------------------------------------

vk_status vk_function_parse_json(const char* json, vk_function** out) {
  VK_REQUIRE(json && out, "null argument");
  return guarded([&] { *out = new vk_function{vilenkin::io::function_from_json(json)}; });
}

vk_status vk_function_transform(const vk_function* in, vk_direction direction, int fast,
                                vk_function** out) {
  VK_REQUIRE(in && out, "null argument");
  if (direction == VK_FORWARD) {
    const auto* f = std::get_if<vilenkin::StepFunction>(&in->fn);
    VK_REQUIRE(f, "forward transform needs a group-side table");
    return guarded([&] {
      *out = new vk_function{fast ? vilenkin::fourier_fast(*f) : vilenkin::fourier(*f)};
    });
  }
  VK_REQUIRE(direction == VK_INVERSE, "unknown direction");
  const auto* F = std::get_if<vilenkin::SpectralFunction>(&in->fn);
  VK_REQUIRE(F, "inverse transform needs a spectral-side table");
  return guarded([&] {
    *out = new vk_function{fast ? vilenkin::inverse_fourier_fast(*F)
                                : vilenkin::inverse_fourier(*F)};
  });
}

int vk_function_is_spectral(const vk_function* f) {
  return f && std::holds_alternative<vilenkin::SpectralFunction>(f->fn);
}

size_t vk_function_size(const vk_function* f) {
  if (!f) return 0;
  return std::visit([](const auto& x) { return x.size(); }, f->fn);
}

vk_status vk_function_serialize(const vk_function* f, vk_format format, char** out) {
  VK_REQUIRE(f && out, "null argument");
  VK_REQUIRE(format == VK_FORMAT_JSON || format == VK_FORMAT_CSV, "unknown format");
  return guarded([&] {
    *out = dup_string(format == VK_FORMAT_JSON ? vilenkin::io::to_json(f->fn)
                                               : vilenkin::io::to_csv(f->fn));
  });
}

void vk_function_free(vk_function* f) { delete f; }

// ---- enumeration ------------------------------------------------------------

vk_status vk_atlas(int p, int l_min, int l_max, size_t budget, double eps, vk_catalog** out) {
  VK_REQUIRE(out, "out is null");
  VK_REQUIRE(l_min <= l_max, "l_min exceeds l_max");
  VK_REQUIRE(eps > 0, "eps must be positive");
  return guarded([&] {
    *out = new vk_catalog{vilenkin::enumerate_elementary(
        vilenkin::GroupParams(p), vilenkin::LevelRange{l_min, l_max}, budget, eps)};
  });
}

size_t vk_catalog_size(const vk_catalog* catalog) {
  return catalog ? catalog->catalog.entries.size() : 0;
}

size_t vk_catalog_counterexamples(const vk_catalog* catalog) {
  return catalog ? catalog->catalog.counterexamples : 0;
}

vk_status vk_catalog_serialize(const vk_catalog* catalog, vk_format format, char** out) {
  VK_REQUIRE(catalog && out, "null argument");
  VK_REQUIRE(format == VK_FORMAT_JSON || format == VK_FORMAT_CSV, "unknown format");
  return guarded([&] {
    *out = dup_string(format == VK_FORMAT_JSON ? vilenkin::io::to_json(catalog->catalog)
                                               : vilenkin::io::to_csv(catalog->catalog));
  });
}

void vk_catalog_free(vk_catalog* catalog) { delete catalog; }

}  // extern "C"
