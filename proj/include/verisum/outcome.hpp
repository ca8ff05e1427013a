// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

namespace verisum {

/// One verified instance of a registered check. Values are rendered as
/// canonical decimal strings so records survive any report format unchanged.
/// For a healthy check, pass is equivalent to lhs == rhs.
struct CheckOutcome {
    std::string check;     ///< registered check id
    std::string instance;  ///< parameter binding, e.g. "p=13" or "l=5,k=3"
    std::string modulus;   ///< "p^e" for congruences, "exact" for identities
    std::string lhs;
    std::string rhs;
    bool pass = false;

    friend bool operator==(const CheckOutcome&, const CheckOutcome&) = default;
};

}  // namespace verisum
