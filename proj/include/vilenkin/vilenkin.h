/* Copyright 2026 The vilenkin-mra Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface of libvilenkin.
 *
 * Objects are opaque handles created by vk_*_create/parse/... calls and
 * released with the matching vk_*_free. Every fallible call returns a
 * vk_status; on failure vk_last_error() describes the problem (the message
 * is thread-local and valid until the next failing call on that thread).
 * Strings returned through `char **out` are heap-allocated and must be
 * released with vk_string_free.
 */

#ifndef VILENKIN_VILENKIN_H
#define VILENKIN_VILENKIN_H

#include <stddef.h>

#if defined(VK_BUILDING_LIBRARY)
#define VK_API __attribute__((visibility("default")))
#else
#define VK_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum vk_status {
  VK_OK = 0,
  VK_ERR_INVALID_ARGUMENT = 1, /* precondition violated */
  VK_ERR_FORMAT = 2,           /* malformed JSON or table */
  VK_ERR_NO_FINITE_SUPPORT = 3,
  VK_ERR_BUDGET = 4,
  VK_ERR_INTERNAL = 5
} vk_status;

typedef enum vk_direction { VK_FORWARD = 0, VK_INVERSE = 1 } vk_direction;

typedef enum vk_format { VK_FORMAT_JSON = 0, VK_FORMAT_CSV = 1 } vk_format;

typedef struct vk_mask vk_mask;
typedef struct vk_function vk_function;
typedef struct vk_report vk_report;
typedef struct vk_catalog vk_catalog;

#define VK_DEFAULT_EPS 1e-9

VK_API const char *vk_last_error(void);
VK_API const char *vk_status_name(vk_status status);
VK_API void vk_string_free(char *s);

/* ---- masks ------------------------------------------------------------- */

/* 1-elementary mask for p >= 3, 1 <= l <= p-2. `zeros` holds the l level-0
 * zeros; `chain` holds l+1 values: the chain top followed by the remaining
 * chain (a permutation of `zeros`). All phases are 1. */
VK_API vk_status vk_mask_generate_elementary(int p, int l, const int *zeros, size_t n_zeros,
                                             const int *chain, size_t n_chain, vk_mask **out);
VK_API vk_status vk_mask_haar(int p, int n, vk_mask **out);
VK_API vk_status vk_mask_parse_json(const char *json, double eps, vk_mask **out);
VK_API vk_status vk_mask_to_json(const vk_mask *mask, char **out);
VK_API int vk_mask_p(const vk_mask *mask);
VK_API int vk_mask_n(const vk_mask *mask);
/* Writes the p^{N+1} mask values as interleaved (re, im) pairs. `capacity`
 * counts doubles. */
VK_API vk_status vk_mask_values(const vk_mask *mask, double *out, size_t capacity);
VK_API void vk_mask_free(vk_mask *mask);

/* ---- MRA reports -------------------------------------------------------- */

/* m_max < 0 selects the default cap p-1. A mask without finite support
 * produces a report with verdict 0, not an error. */
VK_API vk_status vk_mra_report(const vk_mask *mask, int m_max, double eps, vk_report **out);
VK_API int vk_report_verdict(const vk_report *report);
/* -1 when no finite support was found. */
VK_API int vk_report_m(const vk_report *report);
/* INT_MIN when no finite support was found. */
VK_API int vk_report_support_min_shell(const vk_report *report);
VK_API int vk_report_no_finite_support(const vk_report *report);
VK_API vk_status vk_report_to_json(const vk_report *report, char **out);
VK_API void vk_report_free(vk_report *report);

/* ---- step and spectral functions ---------------------------------------- */

VK_API vk_status vk_function_parse_json(const char *json, vk_function **out);
/* Forward maps a group-side table to its spectral table, inverse the other
 * way; a side mismatch is VK_ERR_INVALID_ARGUMENT. `fast` selects the
 * radix-p kernel. */
VK_API vk_status vk_function_transform(const vk_function *in, vk_direction direction, int fast,
                                       vk_function **out);
VK_API int vk_function_is_spectral(const vk_function *f);
VK_API size_t vk_function_size(const vk_function *f);
VK_API vk_status vk_function_serialize(const vk_function *f, vk_format format, char **out);
VK_API void vk_function_free(vk_function *f);

/* ---- enumeration --------------------------------------------------------- */

VK_API vk_status vk_atlas(int p, int l_min, int l_max, size_t budget, double eps,
                          vk_catalog **out);
VK_API size_t vk_catalog_size(const vk_catalog *catalog);
VK_API size_t vk_catalog_counterexamples(const vk_catalog *catalog);
VK_API vk_status vk_catalog_serialize(const vk_catalog *catalog, vk_format format, char **out);
VK_API void vk_catalog_free(vk_catalog *catalog);

#ifdef __cplusplus
}
#endif

#endif /* VILENKIN_VILENKIN_H */
