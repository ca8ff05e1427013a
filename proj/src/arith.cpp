// SPDX-License-Identifier: Apache-2.0
#include "verisum/arith.hpp"

#include <stdexcept>
#include <utility>

namespace verisum {

namespace {

// Witness set deterministic for every n < 3.3e24, comfortably past 2^64.
constexpr unsigned long kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

}  // namespace

Rational make_rational(Integer num, Integer den) {
    if (den == 0) {
        throw std::invalid_argument("make_rational: zero denominator");
    }
    Rational r(std::move(num), std::move(den));
    r.canonicalize();
    return r;
}

Integer ipow(const Integer& base, unsigned long exp) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer binomial(const Integer& x, const Integer& n) {
    if (n < 0) {
        return Integer(0);
    }
    if (!n.fits_ulong_p()) {
        throw std::domain_error("binomial: lower index out of supported range");
    }
    const unsigned long k = n.get_ui();
    Integer num(1);
    for (unsigned long i = 0; i < k; ++i) {
        num *= x - static_cast<long>(i);
    }
    // The falling product of k consecutive values is divisible by k!.
    Integer den = factorial(k);
    Integer q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

Rational pochhammer(const Rational& x, unsigned long k) {
    Rational r(1);
    for (unsigned long i = 0; i < k; ++i) {
        r *= x + i;
    }
    return r;
}

bool is_prime(const Integer& n) {
    if (n < 2) {
        return false;
    }
    for (unsigned long w : kWitnesses) {
        if (n == w) {
            return true;
        }
        if (mpz_divisible_ui_p(n.get_mpz_t(), w)) {
            return false;
        }
    }
    if (mpz_sizeinbase(n.get_mpz_t(), 2) > 64) {
        throw std::domain_error("is_prime: input exceeds the deterministic witness range");
    }
    // n odd and coprime to every witness here; write n - 1 = d * 2^s.
    Integer d = n - 1;
    const unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
    const Integer n_minus_1 = n - 1;
    for (unsigned long w : kWitnesses) {
        Integer x;
        const Integer base(static_cast<long>(w));
        mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
        if (x == 1 || x == n_minus_1) {
            continue;
        }
        bool witness_says_composite = true;
        for (unsigned long r = 1; r < s; ++r) {
            x = (x * x) % n;
            if (x == n_minus_1) {
                witness_says_composite = false;
                break;
            }
        }
        if (witness_says_composite) {
            return false;
        }
    }
    return true;
}

std::vector<Integer> primes_between(const Integer& lo, const Integer& hi) {
    std::vector<Integer> out;
    for (Integer n = lo < 2 ? Integer(2) : lo; n <= hi; ++n) {
        if (is_prime(n)) {
            out.push_back(n);
        }
    }
    return out;
}

PrimePower::PrimePower(Integer p, unsigned e) : p_(std::move(p)), e_(e) {
    if (e_ < 1) {
        throw std::invalid_argument("PrimePower: exponent must be >= 1");
    }
    if (!is_prime(p_)) {
        throw std::invalid_argument("PrimePower: base " + p_.get_str() + " is not prime");
    }
    mpz_pow_ui(m_.get_mpz_t(), p_.get_mpz_t(), e_);
}

std::string PrimePower::str() const {
    return p_.get_str() + "^" + std::to_string(e_);
}

Residue::Residue(Integer value, PrimePower modulus)
    : value_(std::move(value)), mod_(std::move(modulus)) {
    // Floor remainder lands in [0, m) for any sign of the input.
    mpz_fdiv_r(value_.get_mpz_t(), value_.get_mpz_t(), mod_.modulus().get_mpz_t());
}

Integer Residue::signed_alias() const {
    if (value_ * 2 > mod_.modulus()) {
        return value_ - mod_.modulus();
    }
    return value_;
}

Residue Residue::pow(unsigned long e) const {
    Residue r(*this);
    mpz_powm_ui(r.value_.get_mpz_t(), value_.get_mpz_t(), e, mod_.modulus().get_mpz_t());
    return r;
}

void Residue::require_same_modulus(const Residue& other) const {
    if (!(mod_ == other.mod_)) {
        throw std::invalid_argument("Residue: mixed moduli " + mod_.str() + " and " +
                                    other.mod_.str());
    }
}

Residue operator+(Residue a, const Residue& b) {
    a.require_same_modulus(b);
    a.value_ += b.value_;
    if (a.value_ >= a.mod_.modulus()) {
        a.value_ -= a.mod_.modulus();
    }
    return a;
}

Residue operator-(Residue a, const Residue& b) {
    a.require_same_modulus(b);
    a.value_ -= b.value_;
    if (a.value_ < 0) {
        a.value_ += a.mod_.modulus();
    }
    return a;
}

Residue operator*(Residue a, const Residue& b) {
    a.require_same_modulus(b);
    a.value_ *= b.value_;
    a.value_ %= a.mod_.modulus();
    return a;
}

Residue operator-(Residue a) {
    if (a.value_ != 0) {
        a.value_ = a.mod_.modulus() - a.value_;
    }
    return a;
}

Residue mod_inverse(const Integer& a, const PrimePower& m) {
    Integer r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.modulus().get_mpz_t()) == 0) {
        throw NotInvertible("mod_inverse: " + a.get_str() + " has no inverse modulo " + m.str());
    }
    return Residue(std::move(r), m);
}

Residue reduce_rational(const Rational& r, const PrimePower& m) {
    const Residue inv_den = mod_inverse(Integer(r.get_den()), m);
    return Residue(Integer(r.get_num()), m) * inv_den;
}

CentralBinomialTable::CentralBinomialTable(std::size_t max_index) {
    values_.reserve(max_index + 1);
    values_.emplace_back(1);
    for (std::size_t k = 0; k < max_index; ++k) {
        // C(2k+2, k+1) = C(2k, k) * (4k + 2) / (k + 1), an exact quotient.
        Integer next = values_.back() * static_cast<long>(4 * k + 2);
        mpz_divexact_ui(next.get_mpz_t(), next.get_mpz_t(), static_cast<unsigned long>(k + 1));
        values_.push_back(std::move(next));
    }
}

const Integer& CentralBinomialTable::at(std::size_t k) const {
    if (k >= values_.size()) {
        throw std::out_of_range("CentralBinomialTable: index " + std::to_string(k) +
                                " exceeds table size " + std::to_string(values_.size()));
    }
    return values_[k];
}

bool is_power_of_two(const Integer& n) {
    return n > 0 && mpz_popcount(n.get_mpz_t()) == 1;
}

}  // namespace verisum
