// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

#include "verisum/arith.hpp"

namespace verisum {

/// Euler numbers E_0..E_max_index, solved from the defining recurrence
/// E_0 = 1, sum over even k of C(n, k) * E_{n-k} = 0 for n >= 1. Every value
/// is an exact integer and odd indices are zero.
class EulerTable {
  public:
    explicit EulerTable(std::size_t max_index);

    /// Throws std::out_of_range past the table end.
    const Integer& at(std::size_t n) const;
    std::size_t max_index() const { return values_.size() - 1; }

  private:
    std::vector<Integer> values_;
};

/// Euler polynomial value E_n(x), expanded around x = 1/2 with the number
/// table supplying the coefficients. The table must extend through index n.
Rational euler_polynomial(std::size_t n, const Rational& x, const EulerTable& numbers);

/// Second-order harmonic number H_k = sum_{j=1..k} 1/j^2; H_0 = 0.
Rational harmonic2(std::size_t k);

}  // namespace verisum
