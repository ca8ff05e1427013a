// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace verisum {

/// Requested a modular inverse of a value sharing a factor with the modulus.
struct NotInvertible : std::domain_error {
    explicit NotInvertible(const std::string& what) : std::domain_error(what) {}
};

/// Two-squares decomposition requested for a prime p != 1 (mod 4).
struct NotOneModFour : std::domain_error {
    explicit NotOneModFour(const std::string& what) : std::domain_error(what) {}
};

/// A stated precondition of the operation does not hold for these arguments.
struct PreconditionViolated : std::domain_error {
    explicit PreconditionViolated(const std::string& what) : std::domain_error(what) {}
};

/// A lower series parameter makes a Pochhammer factor vanish inside the
/// truncation range.
struct ZeroLowerPochhammer : PreconditionViolated {
    explicit ZeroLowerPochhammer(const std::string& what) : PreconditionViolated(what) {}
};

}  // namespace verisum
