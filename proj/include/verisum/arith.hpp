// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "verisum/errors.hpp"

namespace verisum {

// Exact arithmetic substrate. Integers and rationals are arbitrary-precision
// GMP values; every Rational handed out below is canonical (positive
// denominator, gcd(num, den) = 1).
using Integer = mpz_class;
using Rational = mpq_class;

/// num/den in canonical form. Throws std::invalid_argument when den == 0.
Rational make_rational(Integer num, Integer den);

/// base^exp, exact.
Integer ipow(const Integer& base, unsigned long exp);

/// n!, exact.
Integer factorial(unsigned long n);

/// Generalized binomial coefficient with integer upper argument: the product
/// x(x-1)...(x-n+1)/n! for n >= 0, and 0 for n < 0. The upper argument may be
/// negative; the result is always an integer.
Integer binomial(const Integer& x, const Integer& n);

/// Rising factorial (x)_k = x(x+1)...(x+k-1); (x)_0 = 1.
Rational pochhammer(const Rational& x, unsigned long k);

/// Deterministic primality test. Valid for all inputs below 2^64; larger
/// inputs throw std::domain_error rather than risk a wrong answer.
bool is_prime(const Integer& n);

/// All primes in [lo, hi], ascending. Empty when the interval holds none.
std::vector<Integer> primes_between(const Integer& lo, const Integer& hi);

/// A modulus p^e with p prime (checked) and e >= 1.
class PrimePower {
  public:
    PrimePower(Integer p, unsigned e);

    const Integer& prime() const { return p_; }
    unsigned exponent() const { return e_; }
    const Integer& modulus() const { return m_; }
    /// Renders as "p^e", e.g. "5^4".
    std::string str() const;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;

  private:
    Integer p_;
    unsigned e_;
    Integer m_;
};

/// Canonical representative of an integer modulo p^e, kept in [0, p^e).
/// Arithmetic between residues requires equal moduli and throws
/// std::invalid_argument otherwise.
class Residue {
  public:
    Residue(Integer value, PrimePower modulus);

    const Integer& value() const { return value_; }
    const PrimePower& modulus() const { return mod_; }
    /// Representative in (-m/2, m/2]; diagnostic aid only.
    Integer signed_alias() const;
    std::string str() const { return value_.get_str(); }

    Residue pow(unsigned long e) const;

    friend Residue operator+(Residue a, const Residue& b);
    friend Residue operator-(Residue a, const Residue& b);
    friend Residue operator*(Residue a, const Residue& b);
    friend Residue operator-(Residue a);
    friend bool operator==(const Residue&, const Residue&) = default;

  private:
    void require_same_modulus(const Residue& other) const;

    Integer value_;
    PrimePower mod_;
};

/// Inverse of a modulo m. Throws NotInvertible when gcd(a, m) != 1.
Residue mod_inverse(const Integer& a, const PrimePower& m);

/// Image of a rational in Z/p^e: numerator times inverse of denominator.
/// Throws NotInvertible when p divides the (canonical) denominator.
Residue reduce_rational(const Rational& r, const PrimePower& m);

/// Central binomial coefficients C(2k, k) for k = 0..max_index, built once by
/// the exact quotient recurrence and immutable afterwards.
class CentralBinomialTable {
  public:
    explicit CentralBinomialTable(std::size_t max_index);

    /// Throws std::out_of_range past the table end.
    const Integer& at(std::size_t k) const;
    std::size_t max_index() const { return values_.size() - 1; }

  private:
    std::vector<Integer> values_;
};

/// True when n is 2^k for some k >= 0.
bool is_power_of_two(const Integer& n);

}  // namespace verisum
