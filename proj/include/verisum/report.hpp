// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "verisum/outcome.hpp"

namespace verisum {

/// One compact JSON object per line with fields exactly
/// check, instance, modulus, lhs, rhs, pass — in that order, numbers carried
/// as decimal strings. Deterministic byte-for-byte for a given record list.
std::string to_json_lines(const std::vector<CheckOutcome>& outcomes);

/// Inverse of to_json_lines. Throws std::invalid_argument on malformed
/// input or missing fields.
std::vector<CheckOutcome> from_json_lines(const std::string& text);

/// RFC 4180 CSV with the header
/// check,instance,modulus,lhs,rhs,pass and minimal quoting.
std::string to_csv(const std::vector<CheckOutcome>& outcomes);

/// Inverse of to_csv for reports produced by it (fields never contain line
/// breaks). Throws std::invalid_argument on malformed input.
std::vector<CheckOutcome> from_csv(const std::string& text);

}  // namespace verisum
