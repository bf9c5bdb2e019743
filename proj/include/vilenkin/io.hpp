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

#ifndef VILENKIN_IO_HPP
#define VILENKIN_IO_HPP

// JSON and CSV encodings of functions, masks, reports and catalogs.
//
// Output is byte-deterministic: keys appear in a fixed order and every
// floating-point number is printed with 17 significant digits.
//
//   function: {"p", "N", "M", "side": "group"|"spectral",
//              "values": [[re, im], ...]}          flat-index order
//   mask:     {"p", "N", "lambda": [[re, im], ...]} k = alpha_0 + alpha_{-1} p + ...

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "vilenkin/mask.hpp"
#include "vilenkin/mra.hpp"
#include "vilenkin/stepfun.hpp"

namespace vilenkin::io {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using AnyFunction = std::variant<StepFunction, SpectralFunction>;

std::string to_json(const StepFunction& f);
std::string to_json(const SpectralFunction& F);
std::string to_json(const AnyFunction& f);
std::string to_json(const Mask& m);
std::string to_json(const ValidityReport& r);
std::string to_json(const MRAReport& r);
std::string to_json(const Catalog& c);

/// Rows "alpha_-N,...,alpha_{M-1},re,im" in flat-index order.
std::string to_csv(const StepFunction& f);
std::string to_csv(const SpectralFunction& F);
std::string to_csv(const AnyFunction& f);
std::string to_csv(const Catalog& c);

/// Throws FormatError on malformed input (including tables whose length
/// does not match p^{N+M}).
AnyFunction function_from_json(std::string_view text);

/// Throws FormatError on malformed input or when the table is not a mask.
Mask mask_from_json(std::string_view text, double eps = kDefaultEps);

}  // namespace vilenkin::io

#endif  // VILENKIN_IO_HPP
