// SPDX-License-Identifier: Apache-2.0
#include "verisum/hypergeo.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace verisum {

namespace {

// (y)_k vanishes for some k <= n exactly when y is an integer in [-(n-1), 0].
bool pochhammer_vanishes_by(const Rational& y, std::size_t n) {
    if (n == 0 || y.get_den() != 1) {
        return false;
    }
    const Integer& v = y.get_num();
    return v <= 0 && v >= 1 - static_cast<long>(n);
}

Rational rational_pow(const Rational& base, std::size_t exp) {
    Rational r(1);
    for (std::size_t i = 0; i < exp; ++i) {
        r *= base;
    }
    return r;
}

Rational chaundy_bullard_sample_point(std::size_t i) {
    switch (i) {
        case 0: return Rational(2);
        case 1: return Rational(-1);
        case 2: return make_rational(1, 3);
        case 3: return make_rational(3, 7);
        case 4: return Rational(5);
        case 5: return make_rational(-2, 9);
        default: return Rational(static_cast<long>(i + 1));
    }
}

CheckOutcome make_exact_outcome(std::string check, std::string instance, const Rational& lhs,
                                const Rational& rhs) {
    CheckOutcome o;
    o.check = std::move(check);
    o.instance = std::move(instance);
    o.modulus = "exact";
    o.lhs = lhs.get_str();
    o.rhs = rhs.get_str();
    o.pass = (lhs == rhs);
    return o;
}

}  // namespace

HypergeometricSpec::HypergeometricSpec(std::vector<Rational> upper, std::vector<Rational> lower,
                                       Rational argument, std::size_t truncation)
    : upper_(std::move(upper)),
      lower_(std::move(lower)),
      argument_(std::move(argument)),
      truncation_(truncation) {
    if (upper_.size() != lower_.size() + 1) {
        throw PreconditionViolated("HypergeometricSpec: need one more upper than lower parameter");
    }
    for (const Rational& y : lower_) {
        if (pochhammer_vanishes_by(y, truncation_)) {
            throw ZeroLowerPochhammer("HypergeometricSpec: lower parameter " + y.get_str() +
                                      " vanishes within truncation " + std::to_string(truncation_));
        }
    }
}

Rational evaluate_truncated(const HypergeometricSpec& spec) {
    Rational acc(1);
    Rational term(1);
    for (std::size_t k = 0; k < spec.truncation(); ++k) {
        Rational ratio = spec.argument() / Rational(static_cast<long>(k + 1));
        for (const Rational& x : spec.upper()) {
            ratio *= x + static_cast<long>(k);
        }
        for (const Rational& y : spec.lower()) {
            const Rational factor = y + static_cast<long>(k);
            if (factor == 0) {
                throw ZeroLowerPochhammer("evaluate_truncated: lower parameter " + y.get_str() +
                                          " vanishes at term " + std::to_string(k + 1));
            }
            ratio /= factor;
        }
        term *= ratio;
        if (term == 0) {
            break;  // an upper factor hit zero; all later terms vanish too
        }
        acc += term;
    }
    return acc;
}

ConvolutionTable::ConvolutionTable(std::size_t max_index) {
    const CentralBinomialTable cb(max_index);
    std::vector<Integer> sq(max_index + 1);
    for (std::size_t k = 0; k <= max_index; ++k) {
        sq[k] = cb.at(k) * cb.at(k);
    }
    values_.reserve(max_index + 1);
    for (std::size_t n = 0; n <= max_index; ++n) {
        Integer s(0);
        for (std::size_t k = 0; k <= n; ++k) {
            s += sq[k] * sq[n - k];
        }
        values_.push_back(std::move(s));
    }
}

const Integer& ConvolutionTable::at(std::size_t n) const {
    if (n >= values_.size()) {
        throw std::out_of_range("ConvolutionTable: index " + std::to_string(n) +
                                " exceeds table size " + std::to_string(values_.size()));
    }
    return values_[n];
}

Integer convolution_direct(std::size_t n) {
    const ConvolutionTable table(n);
    return table.at(n);
}

Rational convolution_via_id1(std::size_t n) {
    const CentralBinomialTable cb(n);
    const Integer in(static_cast<long>(n));
    Rational acc(0);
    for (std::size_t k = 0; k <= n; ++k) {
        const Integer ik(static_cast<long>(k));
        const Integer numerator =
            binomial(in + ik, ik) * binomial(in, ik) * cb.at(k) * cb.at(k);
        acc += make_rational(numerator, ipow(Integer(-16), k));
    }
    return Rational(ipow(Integer(16), n)) * acc;
}

Integer convolution_via_sun(std::size_t n) {
    const CentralBinomialTable cb(n);
    Integer acc(0);
    for (std::size_t k = 0; k <= n; ++k) {
        const Integer pick = binomial(Integer(static_cast<long>(k)),
                                      Integer(static_cast<long>(n - k)));
        if (pick == 0) {
            continue;
        }
        acc += cb.at(k) * cb.at(k) * cb.at(k) * pick * ipow(Integer(-16), n - k);
    }
    return acc;
}

CheckOutcome check_transform(std::size_t n, const Rational& a, const Rational& b,
                             const Rational& c, const Rational& d, const Rational& e,
                             const Rational& f) {
    const long ln = static_cast<long>(n);
    const Rational upper_sum = a + b + c - ln + 1;
    const Rational lower_sum = d + e + f;
    if (upper_sum != lower_sum) {
        throw PreconditionViolated("check_transform: balanced-series condition fails at n=" +
                                   std::to_string(n));
    }
    const Rational t0 = a + 1 - ln - e;
    const Rational t1 = a + 1 - ln - f;
    for (const Rational& y : {d, e, f, t0, t1}) {
        if (pochhammer_vanishes_by(y, n)) {
            throw PreconditionViolated("check_transform: lower parameter " + y.get_str() +
                                       " vanishes within truncation " + std::to_string(n));
        }
    }
    const Rational lhs = evaluate_truncated(
        HypergeometricSpec({Rational(-ln), a, b, c}, {d, e, f}, Rational(1), n));
    const Rational prefactor = pochhammer(e - a, n) * pochhammer(f - a, n) /
                               (pochhammer(e, n) * pochhammer(f, n));
    const Rational rhs =
        prefactor * evaluate_truncated(HypergeometricSpec({Rational(-ln), a, d - b, d - c},
                                                          {d, t0, t1}, Rational(1), n));
    return make_exact_outcome(kTransformCheckId, "n=" + std::to_string(n), lhs, rhs);
}

CheckOutcome check_chaundy_bullard(std::size_t n, std::size_t m) {
    const std::string instance = "n=" + std::to_string(n) + ",m=" + std::to_string(m);
    const Rational one(1);
    for (std::size_t i = 0; i < n + m + 2; ++i) {
        const Rational x = chaundy_bullard_sample_point(i);
        const Rational y = 1 - x;
        Rational left(0);
        for (std::size_t k = 0; k <= m; ++k) {
            left += Rational(binomial(Integer(static_cast<long>(n + k)),
                                      Integer(static_cast<long>(k)))) *
                    rational_pow(x, k);
        }
        Rational right(0);
        for (std::size_t k = 0; k <= n; ++k) {
            right += Rational(binomial(Integer(static_cast<long>(m + k)),
                                       Integer(static_cast<long>(k)))) *
                     rational_pow(y, k);
        }
        const Rational value =
            rational_pow(y, n + 1) * left + rational_pow(x, m + 1) * right;
        if (value != one) {
            return make_exact_outcome(kChaundyBullardCheckId, instance + ",x=" + x.get_str(),
                                      one, value);
        }
    }
    return make_exact_outcome(kChaundyBullardCheckId, instance, one, one);
}

}  // namespace verisum
