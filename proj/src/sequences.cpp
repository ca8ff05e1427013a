// SPDX-License-Identifier: Apache-2.0
#include "verisum/sequences.hpp"

#include <stdexcept>
#include <string>

namespace verisum {

EulerTable::EulerTable(std::size_t max_index) {
    values_.assign(max_index + 1, Integer(0));
    values_[0] = 1;
    for (std::size_t n = 1; n <= max_index; ++n) {
        // Solve sum over even k of C(n, k) * E_{n-k} = 0 for E_n. The row
        // entry steps by two: C(n, k) = C(n, k-2) * (n-k+2)(n-k+1) / ((k-1)k).
        Integer acc(0);
        Integer c(1);
        for (std::size_t k = 2; k <= n; k += 2) {
            c *= static_cast<long>(n - k + 2);
            c *= static_cast<long>(n - k + 1);
            mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(),
                            static_cast<unsigned long>(k * (k - 1)));
            acc += c * values_[n - k];
        }
        values_[n] = -acc;
    }
}

const Integer& EulerTable::at(std::size_t n) const {
    if (n >= values_.size()) {
        throw std::out_of_range("EulerTable: index " + std::to_string(n) +
                                " exceeds table size " + std::to_string(values_.size()));
    }
    return values_[n];
}

Rational euler_polynomial(std::size_t n, const Rational& x, const EulerTable& numbers) {
    if (numbers.max_index() < n) {
        throw std::invalid_argument("euler_polynomial: number table too short for degree " +
                                    std::to_string(n));
    }
    const Rational shift = x - make_rational(1, 2);
    std::vector<Rational> shift_pow(n + 1);
    shift_pow[0] = 1;
    for (std::size_t i = 1; i <= n; ++i) {
        shift_pow[i] = shift_pow[i - 1] * shift;
    }
    Rational acc(0);
    Integer two_k(1);
    for (std::size_t k = 0; k <= n; ++k) {
        acc += Rational(binomial(Integer(static_cast<long>(n)), Integer(static_cast<long>(k)))) *
               make_rational(numbers.at(k), two_k) * shift_pow[n - k];
        two_k *= 2;
    }
    return acc;
}

Rational harmonic2(std::size_t k) {
    Rational acc(0);
    for (std::size_t j = 1; j <= k; ++j) {
        const Integer jj(static_cast<long>(j));
        acc += make_rational(1, jj * jj);
    }
    return acc;
}

}  // namespace verisum
