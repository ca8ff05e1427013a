// SPDX-License-Identifier: Apache-2.0
#include "verisum/suite.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace verisum {

namespace {

CheckOutcome exact_outcome(const std::string& check, std::string instance, const Rational& lhs,
                           const Rational& rhs) {
    CheckOutcome o;
    o.check = check;
    o.instance = std::move(instance);
    o.modulus = "exact";
    o.lhs = lhs.get_str();
    o.rhs = rhs.get_str();
    o.pass = (lhs == rhs);
    return o;
}

// ---- residue-sum kernels shared by several congruence checks ----

// sum_{k=lo..hi} C(2k,k)^2 * 16^{-k}
Residue central_sq_sum16(const PrimeContext& c, long lo, long hi) {
    Residue acc = c.residue(0);
    Residue w = c.residue(1);
    const Residue step = c.inverse(16);
    for (long k = 0; k <= hi; ++k) {
        if (k >= lo) {
            const Residue cb = c.central(k);
            acc = acc + cb * cb * w;
        }
        w = w * step;
    }
    return acc;
}

// sum_{k=0..hi} (3k+1) C(2k,k)^3 * (-8)^{-k}
Residue central_cube_sum_neg8(const PrimeContext& c, long hi) {
    Residue acc = c.residue(0);
    Residue w = c.residue(1);
    const Residue step = c.inverse(-8);
    for (long k = 0; k <= hi; ++k) {
        const Residue cb = c.central(k);
        acc = acc + c.residue(3 * k + 1) * cb * cb * cb * w;
        w = w * step;
    }
    return acc;
}

// sum_{k=0..(p-1)/2} (k+1) C(2k,k)^2 * 8^{-k}
Residue half_sum_weight8(const PrimeContext& c) {
    Residue acc = c.residue(0);
    Residue w = c.residue(1);
    const Residue step = c.inverse(8);
    for (long k = 0; k <= c.half(); ++k) {
        const Residue cb = c.central(k);
        acc = acc + c.residue(k + 1) * cb * cb * w;
        w = w * step;
    }
    return acc;
}

// sum_{k=0..(p-1)/2} (2k+1) C(2k,k)^2 * (-16)^{-k}
Residue half_sum_weight_neg16(const PrimeContext& c) {
    Residue acc = c.residue(0);
    Residue w = c.residue(1);
    const Residue step = c.inverse(-16);
    for (long k = 0; k <= c.half(); ++k) {
        const Residue cb = c.central(k);
        acc = acc + c.residue(2 * k + 1) * cb * cb * w;
        w = w * step;
    }
    return acc;
}

// sum_{n=0..p-1} weight(n) * S(n) * base^{-n}
template <typename Weight>
Residue conv_sum(const PrimeContext& c, long base, Weight weight) {
    Residue acc = c.residue(0);
    Residue w = c.residue(1);
    const Residue step = c.inverse(base);
    for (long n = 0; n <= c.prime_long() - 1; ++n) {
        acc = acc + c.residue(weight(n)) * c.convolution(n) * w;
        w = w * step;
    }
    return acc;
}

Residue conv_sum8(const PrimeContext& c) {
    return conv_sum(c, 8, [](long n) { return n + 1; });
}

Residue conv_sum_neg16(const PrimeContext& c) {
    return conv_sum(c, -16, [](long n) { return 2 * n + 1; });
}

Residue conv_sum32(const PrimeContext& c) {
    return conv_sum(c, 32, [](long n) { return n; });
}

// sum_{k=0..hi} C(2k,k)^2 * H_k^(2) * 16^{-k}
Residue central_sq_h2_sum16(const PrimeContext& c, long hi) {
    Residue acc = c.residue(0);
    Residue w = c.residue(1);
    Residue h2 = c.residue(0);
    const Residue step = c.inverse(16);
    for (long k = 0; k <= hi; ++k) {
        if (k > 0) {
            const Residue ik = c.inverse(k);
            h2 = h2 + ik * ik;
        }
        const Residue cb = c.central(k);
        acc = acc + cb * cb * h2 * w;
        w = w * step;
    }
    return acc;
}

// p * sum_{k=0..p-1} C(2k,k)^2 * 16^{-k} * (1 - p^2 H_k^(2))
Residue key1_rhs_sum(const PrimeContext& c) {
    Residue acc = c.residue(0);
    Residue w = c.residue(1);
    Residue h2 = c.residue(0);
    const Residue one = c.residue(1);
    const Residue p2 = c.residue(Integer(c.prime() * c.prime()));
    const Residue step = c.inverse(16);
    for (long k = 0; k <= c.prime_long() - 1; ++k) {
        if (k > 0) {
            const Residue ik = c.inverse(k);
            h2 = h2 + ik * ik;
        }
        const Residue cb = c.central(k);
        acc = acc + cb * cb * w * (one - p2 * h2);
        w = w * step;
    }
    return c.residue(c.prime()) * acc;
}

Residue sign_residue(const PrimeContext& c) {
    return c.residue(c.half_sign());
}

Residue sign_p_residue(const PrimeContext& c) {
    return c.residue(Integer(c.half_sign() * c.prime()));
}

Residue p3_euler(const PrimeContext& c, long multiple) {
    return c.residue(Integer(multiple * ipow(c.prime(), 3))) * c.euler_number();
}

CongruenceSides mao_half_eval(const PrimeContext& c) {
    const Residue lhs = central_cube_sum_neg8(c, c.half());
    const std::size_t degree = static_cast<std::size_t>(c.prime_long() - 3);
    const Rational poly = euler_polynomial(degree, make_rational(1, 4), c.tables().euler());
    if (!is_power_of_two(Integer(poly.get_den()))) {
        throw PreconditionViolated("mao_half: polynomial denominator " +
                                   Integer(poly.get_den()).get_str() +
                                   " is not a power of two at p=" + c.prime().get_str());
    }
    const Rational rhs_exact = Rational(Integer(c.half_sign() * c.prime())) +
                               Rational(c.eighth_sign()) * make_rational(ipow(c.prime(), 3), 4) *
                                   poly;
    return {lhs, c.reduce(rhs_exact), ""};
}

CongruenceSides sun_x_eval(const PrimeContext& c, bool base8) {
    const Residue lhs = base8 ? half_sum_weight8(c) : half_sum_weight_neg16(c);
    const TwoSquares ts = two_squares(c.prime());
    const bool negate = ((c.prime_long() - 1) / 4) % 2 == 1;
    const Residue rhs = c.residue(negate ? Integer(-ts.x) : ts.x);
    return {lhs, rhs, ""};
}

CongruenceSides prod_binom_eval(const PrimeContext& c) {
    const Residue one = c.residue(1);
    const Residue p2 = c.residue(Integer(c.prime() * c.prime()));
    Integer c_above(1);  // C(p-1, k), exact
    Integer c_below(1);  // C(p+k, k), exact
    Residue h2 = c.residue(0);
    CongruenceSides last{one, one, ""};
    for (long k = 0; k <= c.prime_long() - 1; ++k) {
        if (k > 0) {
            // C(p-1,k) = C(p-1,k-1)(p-k)/k and C(p+k,k) = C(p+k-1,k-1)(p+k)/k,
            // both exact quotients.
            c_above *= c.prime() - k;
            mpz_divexact_ui(c_above.get_mpz_t(), c_above.get_mpz_t(),
                            static_cast<unsigned long>(k));
            c_below *= c.prime() + k;
            mpz_divexact_ui(c_below.get_mpz_t(), c_below.get_mpz_t(),
                            static_cast<unsigned long>(k));
            const Residue ik = c.inverse(k);
            h2 = h2 + ik * ik;
        }
        const Residue lhs = c.residue(Integer(c_above * c_below));
        Residue rhs = one - p2 * h2;
        if (k % 2 == 1) {
            rhs = -rhs;
        }
        if (!(lhs == rhs)) {
            return {lhs, rhs, ",k=" + std::to_string(k)};
        }
        last = {lhs, rhs, ""};
    }
    return last;
}

// ---- exact-identity evaluators ----

IdentitySides id1_sides(long n) {
    return {Rational(convolution_direct(static_cast<std::size_t>(n))),
            convolution_via_id1(static_cast<std::size_t>(n))};
}

IdentitySides conv_threeway_sides(long n) {
    const std::size_t un = static_cast<std::size_t>(n);
    const Rational direct(convolution_direct(un));
    const Rational via_id1 = convolution_via_id1(un);
    const Rational via_sun(convolution_via_sun(un));
    // Put the first disagreeing route on the right so a failure names it.
    return {direct, via_id1 != direct ? via_id1 : via_sun};
}

IdentitySides conv_hyper_sides(long n) {
    const std::size_t un = static_cast<std::size_t>(n);
    const Rational half = make_rational(1, 2);
    const Rational neg_n(-n);
    const Rational half_minus_n = half - n;
    const Rational series = evaluate_truncated(HypergeometricSpec(
        {half, half, neg_n, neg_n}, {Rational(1), half_minus_n, half_minus_n}, Rational(1), un));
    const Integer cb = binomial(Integer(2 * n), Integer(n));
    return {Rational(convolution_direct(un)), Rational(Integer(cb * cb)) * series};
}

IdentitySides id2_sides(long l, long k) {
    Integer lhs(0);
    for (long n = k; n <= l; ++n) {
        Integer coeff(2 * n + 1);
        if (n % 2 == 1) {
            coeff = -coeff;
        }
        lhs += coeff * binomial(Integer(n + k), Integer(2 * k));
    }
    Integer rhs = Integer(l - k + 1) * binomial(Integer(l + k + 1), Integer(2 * k));
    if (l % 2 == 1) {
        rhs = -rhs;
    }
    return {Rational(lhs), Rational(rhs)};
}

IdentitySides id3_sides(long k) {
    Integer lhs(0);
    Integer rhs_sum(0);
    for (long n = 0; n <= k; ++n) {
        const Integer c = binomial(Integer(n + k), Integer(n));
        lhs += c * ipow(Integer(2), static_cast<unsigned long>(n));
        if (n % 2 == 0) {
            rhs_sum += c;
        } else {
            rhs_sum -= c;
        }
    }
    const Integer sign = (k % 2 == 0) ? Integer(-1) : Integer(1);  // (-1)^(k+1)
    const Integer rhs = sign - ipow(Integer(-2), static_cast<unsigned long>(k + 1)) * rhs_sum;
    return {Rational(lhs), Rational(rhs)};
}

IdentitySides id4_sides(long k) {
    Integer lhs(0);
    for (long n = 0; n <= k - 1; ++n) {
        lhs += Integer(2 * n + k) * binomial(Integer(-k), Integer(n));
    }
    const Integer sign = (k % 2 == 1) ? Integer(1) : Integer(-1);  // (-1)^(k-1)
    const Rational rhs =
        make_rational(Integer(sign * k * binomial(Integer(2 * k), Integer(k))), Integer(2));
    return {Rational(lhs), rhs};
}

IdentitySides id5_sides(long k) {
    Integer lhs(0);
    Integer tail(0);
    for (long n = 0; n <= k - 1; ++n) {
        const Integer c = binomial(Integer(-k), Integer(n));
        lhs += ipow(Integer(-2), static_cast<unsigned long>(n)) * Integer(n - k + 1) * c;
        tail += Integer(2 * n - 2 * k + 1) * c;
    }
    const Integer sign = (k % 2 == 0) ? Integer(-1) : Integer(1);  // (-1)^(k+1)
    const Integer rhs =
        sign * Integer(3 * k - 1) - ipow(Integer(-2), static_cast<unsigned long>(k)) * tail;
    return {Rational(lhs), Rational(rhs)};
}

IdentitySides id6_sides(long k) {
    Integer lhs(0);
    for (long n = 0; n <= k; ++n) {
        lhs += ipow(Integer(-2), static_cast<unsigned long>(n)) * Integer(n + k + 1) *
               binomial(Integer(k), Integer(n));
    }
    const Integer rhs = (k % 2 == 0) ? Integer(3 * k + 1) : Integer(-(3 * k + 1));
    return {Rational(lhs), Rational(rhs)};
}

IdentitySides id7_sides(long k) {
    Integer lhs(0);
    for (long n = 0; n <= k; ++n) {
        lhs += Integer(2 * n + 2 * k + 1) * binomial(Integer(k), Integer(n));
    }
    const Integer rhs = ipow(Integer(2), static_cast<unsigned long>(k)) * Integer(3 * k + 1);
    return {Rational(lhs), Rational(rhs)};
}

IdentitySides key1_exact_sides(long m) {
    const std::size_t top = static_cast<std::size_t>(m - 1);
    const ConvolutionTable conv(top);
    const CentralBinomialTable cb(top);
    Rational lhs(0);
    for (long n = 0; n <= m - 1; ++n) {
        lhs += make_rational(Integer(2 * n + 1) * conv.at(static_cast<std::size_t>(n)),
                             ipow(Integer(-16), static_cast<unsigned long>(n)));
    }
    Rational rhs(0);
    for (long k = 0; k <= m - 1; ++k) {
        const Integer& ck = cb.at(static_cast<std::size_t>(k));
        const Integer num = ck * ck * binomial(Integer(m - 1), Integer(k)) *
                            binomial(Integer(m + k), Integer(k));
        rhs += make_rational(num, ipow(Integer(-16), static_cast<unsigned long>(k)));
    }
    return {lhs, Rational(m) * rhs};
}

IdentitySides key8_exact_sides(long m) {
    const std::size_t top = static_cast<std::size_t>(m - 1);
    const ConvolutionTable conv(top);
    const CentralBinomialTable cb(top);
    Rational lhs(0);
    for (long n = 0; n <= m - 1; ++n) {
        lhs += make_rational(Integer(n + 1) * conv.at(static_cast<std::size_t>(n)),
                             ipow(Integer(2), static_cast<unsigned long>(3 * n)));
    }
    Rational rhs(0);
    for (long k = 0; k <= m - 1; ++k) {
        Integer inner(0);
        for (long n = 0; n <= m - 1 - k; ++n) {
            inner += ipow(Integer(-2), static_cast<unsigned long>(n)) * Integer(n + k + 1) *
                     binomial(Integer(k), Integer(n));
        }
        const Integer& ck = cb.at(static_cast<std::size_t>(k));
        rhs += make_rational(Integer(ck * ck * ck * inner),
                             ipow(Integer(2), static_cast<unsigned long>(3 * k)));
    }
    return {lhs, rhs};
}

// ---- registry construction ----

IdentitySpec single_spec(std::string id, std::size_t cap, std::string name, long start, long step,
                         std::function<IdentitySides(long)> sides) {
    IdentitySpec s;
    s.id = id;
    s.cap = cap;
    s.outer_name = name;
    s.outer_start = start;
    s.outer_step = step;
    s.eval_one = [id = std::move(id), name = std::move(name),
                  sides = std::move(sides)](long v) {
        const IdentitySides r = sides(v);
        return exact_outcome(id, name + "=" + std::to_string(v), r.lhs, r.rhs);
    };
    return s;
}

std::vector<IdentitySpec> build_identity_registry() {
    std::vector<IdentitySpec> v;
    v.push_back(single_spec("id1", 0, "n", 0, 1, id1_sides));

    IdentitySpec id2;
    id2.id = "id2";
    id2.outer_name = "l";
    id2.inner_name = "k";
    id2.inner_hi = [](long outer, long) { return outer; };
    id2.eval_pair = [](long l, long k) {
        const IdentitySides r = id2_sides(l, k);
        return exact_outcome("id2", "l=" + std::to_string(l) + ",k=" + std::to_string(k), r.lhs,
                             r.rhs);
    };
    v.push_back(std::move(id2));

    v.push_back(single_spec("id3", 0, "k", 0, 1, id3_sides));
    v.push_back(single_spec("id4", 0, "k", 1, 1, id4_sides));
    v.push_back(single_spec("id5", 0, "k", 1, 1, id5_sides));
    v.push_back(single_spec("id6", 0, "k", 0, 1, id6_sides));
    v.push_back(single_spec("id7", 0, "k", 0, 1, id7_sides));
    v.push_back(single_spec("conv_threeway", 0, "n", 0, 1, conv_threeway_sides));
    v.push_back(single_spec("conv_hyper", 40, "n", 0, 1, conv_hyper_sides));

    IdentitySpec transform;
    transform.id = kTransformCheckId;
    transform.cap = 25;
    transform.outer_name = "n";
    transform.eval_one = [](long n) {
        const Rational half = make_rational(1, 2);
        const Rational half_minus_n = half - n;
        return check_transform(static_cast<std::size_t>(n), half, Rational(-n), half, Rational(1),
                               half_minus_n, half_minus_n);
    };
    v.push_back(std::move(transform));

    IdentitySpec cb;
    cb.id = kChaundyBullardCheckId;
    cb.cap = 12;
    cb.outer_name = "n";
    cb.inner_name = "m";
    cb.inner_hi = [](long, long bound) { return bound; };
    cb.eval_pair = [](long n, long m) {
        return check_chaundy_bullard(static_cast<std::size_t>(n), static_cast<std::size_t>(m));
    };
    v.push_back(std::move(cb));

    // The sum-interchange chain is an exact identity on odd arguments only;
    // even arguments flip the sign of the right side, so the registered
    // domain steps by two.
    v.push_back(single_spec("key1_exact", 40, "m", 1, 2, key1_exact_sides));
    v.push_back(single_spec("key8_exact", 40, "m", 1, 1, key8_exact_sides));
    return v;
}

CongruenceSpec congruence(std::string id, unsigned exponent, PrimeFilter filter,
                          std::function<CongruenceSides(const PrimeContext&)> eval,
                          bool selftest = false) {
    CongruenceSpec s;
    s.id = std::move(id);
    s.exponent = exponent;
    s.filter = filter;
    s.selftest = selftest;
    s.eval = std::move(eval);
    return s;
}

std::vector<CongruenceSpec> build_congruence_registry() {
    using PF = PrimeFilter;
    std::vector<CongruenceSpec> v;

    v.push_back(congruence("rv", 2, PF::OddPrime, [](const PrimeContext& c) {
        return CongruenceSides{central_sq_sum16(c, 0, c.prime_long() - 1), sign_residue(c), ""};
    }));
    v.push_back(congruence("rv_half_equiv", 2, PF::OddPrime, [](const PrimeContext& c) {
        return CongruenceSides{central_sq_sum16(c, 0, c.prime_long() - 1),
                               central_sq_sum16(c, 0, c.half()), ""};
    }));
    v.push_back(congruence("sun_half", 3, PF::GreaterThanThree, [](const PrimeContext& c) {
        const Residue rhs =
            sign_residue(c) + c.residue(Integer(c.prime() * c.prime())) * c.euler_number();
        return CongruenceSides{central_sq_sum16(c, 0, c.half()), rhs, ""};
    }));
    v.push_back(congruence("sun_tail", 3, PF::GreaterThanThree, [](const PrimeContext& c) {
        const Residue rhs =
            -(c.residue(Integer(2 * c.prime() * c.prime())) * c.euler_number());
        return CongruenceSides{central_sq_sum16(c, c.half() + 1, c.prime_long() - 1), rhs, ""};
    }));
    v.push_back(congruence("cxh", 4, PF::GreaterThanThree, [](const PrimeContext& c) {
        return CongruenceSides{central_cube_sum_neg8(c, c.prime_long() - 1),
                               sign_p_residue(c) + p3_euler(c, 1), ""};
    }));
    v.push_back(congruence("mao_half", 4, PF::GreaterThanThree, mao_half_eval));
    v.push_back(congruence("sun_x_8", 2, PF::OneModFour,
                           [](const PrimeContext& c) { return sun_x_eval(c, true); }));
    v.push_back(congruence("sun_x_16", 2, PF::OneModFour,
                           [](const PrimeContext& c) { return sun_x_eval(c, false); }));
    v.push_back(congruence("sun8_p3", 3, PF::GreaterThanThree, [](const PrimeContext& c) {
        return CongruenceSides{conv_sum8(c), sign_p_residue(c), ""};
    }));
    v.push_back(congruence("sun16_p3", 3, PF::GreaterThanThree, [](const PrimeContext& c) {
        return CongruenceSides{conv_sum_neg16(c), sign_p_residue(c), ""};
    }));
    v.push_back(congruence("den8", 4, PF::GreaterThanThree, [](const PrimeContext& c) {
        return CongruenceSides{conv_sum8(c), sign_p_residue(c) + p3_euler(c, 5), ""};
    }));
    v.push_back(congruence("den16", 4, PF::GreaterThanThree, [](const PrimeContext& c) {
        return CongruenceSides{conv_sum_neg16(c), sign_p_residue(c) + p3_euler(c, 3), ""};
    }));
    v.push_back(congruence("mao_cao_32", 4, PF::GreaterThanThree, [](const PrimeContext& c) {
        return CongruenceSides{conv_sum32(c), p3_euler(c, -2), ""};
    }));
    v.push_back(congruence("suncon3_half", 1, PF::GreaterThanThree, [](const PrimeContext& c) {
        const Residue rhs = -(c.residue(4) * c.euler_number());
        return CongruenceSides{central_sq_h2_sum16(c, c.half()), rhs, ""};
    }));
    v.push_back(congruence("suncon3_full", 1, PF::GreaterThanThree, [](const PrimeContext& c) {
        const Residue rhs = -(c.residue(4) * c.euler_number());
        return CongruenceSides{central_sq_h2_sum16(c, c.prime_long() - 1), rhs, ""};
    }));
    v.push_back(congruence("prod_binom", 4, PF::GreaterThanThree, prod_binom_eval));
    v.push_back(congruence("key1_mod_p5", 5, PF::GreaterThanThree, [](const PrimeContext& c) {
        return CongruenceSides{conv_sum_neg16(c), key1_rhs_sum(c), ""};
    }));
    v.push_back(congruence("key_star", 4, PF::GreaterThanThree, [](const PrimeContext& c) {
        const Residue two_b = c.residue(2) * conv_sum_neg16(c);
        const Residue rhs = two_b - central_cube_sum_neg8(c, c.prime_long() - 1);
        return CongruenceSides{conv_sum8(c), rhs, ""};
    }));
    // Fixture with a deliberately wrong right side; never part of "all",
    // selected only by explicit name to exercise the failure path end to end.
    v.push_back(congruence(
        "selftest_fail", 2, PF::OddPrime,
        [](const PrimeContext& c) {
            const Residue rhs = sign_residue(c) + c.residue(1);
            return CongruenceSides{central_sq_sum16(c, 0, c.prime_long() - 1), rhs, ""};
        },
        /*selftest=*/true));
    return v;
}

// ---- parallel engine ----

using Task = std::function<std::vector<CheckOutcome>()>;

std::vector<CheckOutcome> run_tasks(const std::vector<Task>& tasks, int jobs) {
    std::vector<std::vector<CheckOutcome>> slots(tasks.size());
    if (jobs <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) {
            slots[i] = tasks[i]();
        }
    } else {
        // Tasks are pure and never throw (each one is guarded); results land
        // in per-task slots so the merged order is independent of scheduling.
        const long long count = static_cast<long long>(tasks.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
#endif
        for (long long i = 0; i < count; ++i) {
            slots[static_cast<std::size_t>(i)] = tasks[static_cast<std::size_t>(i)]();
        }
    }
    std::vector<CheckOutcome> out;
    for (auto& slot : slots) {
        for (auto& o : slot) {
            out.push_back(std::move(o));
        }
    }
    return out;
}

CheckOutcome guarded_congruence(const CongruenceSpec& spec, const Integer& p,
                                const SharedTables& tables) {
    try {
        return run_congruence(spec, p, tables);
    } catch (const std::exception& e) {
        CheckOutcome o;
        o.check = spec.id;
        o.instance = "p=" + p.get_str();
        o.modulus = p.get_str() + "^" + std::to_string(spec.exponent);
        o.lhs = std::string("error: ") + e.what();
        o.rhs = "";
        o.pass = false;
        return o;
    }
}

CheckOutcome guarded_identity(const IdentitySpec& spec, long v) {
    try {
        return run_identity(spec, v);
    } catch (const std::exception& e) {
        CheckOutcome o;
        o.check = spec.id;
        o.instance = spec.outer_name + "=" + std::to_string(v);
        o.modulus = "exact";
        o.lhs = std::string("error: ") + e.what();
        o.rhs = "";
        o.pass = false;
        return o;
    }
}

CheckOutcome guarded_identity_pair(const IdentitySpec& spec, long outer, long inner) {
    try {
        return run_identity(spec, outer, inner);
    } catch (const std::exception& e) {
        CheckOutcome o;
        o.check = spec.id;
        o.instance = spec.outer_name + "=" + std::to_string(outer) + "," + spec.inner_name + "=" +
                     std::to_string(inner);
        o.modulus = "exact";
        o.lhs = std::string("error: ") + e.what();
        o.rhs = "";
        o.pass = false;
        return o;
    }
}

// One summary record per outer value; full records only for failing inners.
std::vector<CheckOutcome> pair_family_outer(const IdentitySpec& spec, long outer, long bound) {
    const long hi = spec.inner_hi(outer, bound);
    if (hi < 0) {
        return {};
    }
    std::vector<CheckOutcome> fails;
    CheckOutcome last;
    for (long inner = 0; inner <= hi; ++inner) {
        CheckOutcome o = guarded_identity_pair(spec, outer, inner);
        if (!o.pass) {
            fails.push_back(o);
        }
        last = std::move(o);
    }
    CheckOutcome summary;
    summary.check = spec.id;
    summary.instance = spec.outer_name + "=" + std::to_string(outer) + "," + spec.inner_name +
                       "=0.." + std::to_string(hi);
    summary.modulus = "exact";
    const CheckOutcome& basis = fails.empty() ? last : fails.front();
    summary.lhs = basis.lhs;
    summary.rhs = basis.rhs;
    summary.pass = fails.empty();
    std::vector<CheckOutcome> out;
    out.push_back(std::move(summary));
    for (auto& f : fails) {
        out.push_back(std::move(f));
    }
    return out;
}

void append_identity_tasks(const IdentitySpec& spec, std::size_t bound, std::vector<Task>& tasks) {
    const long b = static_cast<long>(bound);
    if (spec.eval_pair) {
        for (long outer = spec.outer_start; outer <= b; outer += spec.outer_step) {
            tasks.push_back([&spec, outer, b] { return pair_family_outer(spec, outer, b); });
        }
    } else {
        for (long v = spec.outer_start; v <= b; v += spec.outer_step) {
            tasks.push_back(
                [&spec, v] { return std::vector<CheckOutcome>{guarded_identity(spec, v)}; });
        }
    }
}

}  // namespace

TwoSquares two_squares(const Integer& p) {
    if (!is_prime(p)) {
        throw std::invalid_argument("two_squares: " + p.get_str() + " is not prime");
    }
    if (p % 4 != 1) {
        throw NotOneModFour("two_squares: " + p.get_str() + " is not 1 modulo 4");
    }
    for (Integer x0(1); x0 * x0 <= p; x0 += 2) {
        const Integer y2 = p - x0 * x0;
        Integer y;
        mpz_sqrt(y.get_mpz_t(), y2.get_mpz_t());
        if (y * y == y2 && mpz_even_p(y.get_mpz_t())) {
            return {x0 % 4 == 1 ? x0 : Integer(-x0), y};
        }
    }
    throw std::logic_error("two_squares: no decomposition found for " + p.get_str());
}

SharedTables::SharedTables(std::size_t binomial_max, std::size_t euler_max)
    : central_(binomial_max), convolution_(binomial_max), euler_(euler_max) {}

SharedTables SharedTables::build(const Integer& max_prime) {
    if (!max_prime.fits_slong_p()) {
        throw std::domain_error("SharedTables: prime bound out of supported range");
    }
    const long mp = std::max(5L, max_prime.get_si());
    return SharedTables(static_cast<std::size_t>(mp - 1), static_cast<std::size_t>(mp - 3));
}

bool admits(PrimeFilter filter, const Integer& p) {
    switch (filter) {
        case PrimeFilter::OddPrime:
            return p >= 3;
        case PrimeFilter::GreaterThanThree:
            return p > 3;
        case PrimeFilter::OneModFour:
            return p % 4 == 1;
    }
    return false;
}

PrimeContext::PrimeContext(Integer p, unsigned exponent, const SharedTables& tables)
    : p_(std::move(p)), p_long_(0), ring_(p_, exponent), tables_(&tables) {
    if (!p_.fits_slong_p()) {
        throw std::domain_error("PrimeContext: prime out of supported range");
    }
    p_long_ = p_.get_si();
}

Residue PrimeContext::central(long k) const {
    return residue(tables_->central().at(static_cast<std::size_t>(k)));
}

Residue PrimeContext::convolution(long n) const {
    return residue(tables_->convolution().at(static_cast<std::size_t>(n)));
}

int PrimeContext::eighth_sign() const {
    Integer e = p_ * p_ - 1;
    mpz_fdiv_q_2exp(e.get_mpz_t(), e.get_mpz_t(), 3);
    return mpz_odd_p(e.get_mpz_t()) ? -1 : 1;
}

Residue PrimeContext::euler_number() const {
    return residue(tables_->euler().at(static_cast<std::size_t>(p_long_ - 3)));
}

const std::vector<CongruenceSpec>& congruence_registry() {
    static const std::vector<CongruenceSpec> registry = build_congruence_registry();
    return registry;
}

const std::vector<IdentitySpec>& identity_registry() {
    static const std::vector<IdentitySpec> registry = build_identity_registry();
    return registry;
}

const CongruenceSpec* find_congruence(const std::string& id) {
    for (const CongruenceSpec& s : congruence_registry()) {
        if (s.id == id) {
            return &s;
        }
    }
    return nullptr;
}

const IdentitySpec* find_identity(const std::string& id) {
    for (const IdentitySpec& s : identity_registry()) {
        if (s.id == id) {
            return &s;
        }
    }
    return nullptr;
}

std::vector<std::string> registered_check_ids() {
    std::vector<std::string> ids;
    for (const IdentitySpec& s : identity_registry()) {
        ids.push_back(s.id);
    }
    for (const CongruenceSpec& s : congruence_registry()) {
        ids.push_back(s.id);
    }
    return ids;
}

CheckOutcome run_congruence(const CongruenceSpec& spec, const Integer& p,
                            const SharedTables& tables) {
    if (!admits(spec.filter, p)) {
        throw PreconditionViolated("run_congruence: prime " + p.get_str() +
                                   " rejected by the filter of " + spec.id);
    }
    const PrimeContext ctx(p, spec.exponent, tables);
    const CongruenceSides sides = spec.eval(ctx);
    CheckOutcome o;
    o.check = spec.id;
    o.instance = "p=" + p.get_str() + sides.instance_suffix;
    o.modulus = ctx.ring().str();
    o.lhs = sides.lhs.str();
    o.rhs = sides.rhs.str();
    o.pass = (sides.lhs == sides.rhs);
    return o;
}

CheckOutcome run_identity(const IdentitySpec& spec, long value) {
    if (!spec.eval_one) {
        throw std::invalid_argument("run_identity: " + spec.id + " expects two parameters");
    }
    return spec.eval_one(value);
}

CheckOutcome run_identity(const IdentitySpec& spec, long outer, long inner) {
    if (!spec.eval_pair) {
        throw std::invalid_argument("run_identity: " + spec.id + " expects one parameter");
    }
    return spec.eval_pair(outer, inner);
}

std::vector<CheckOutcome> run_identity_family(const IdentitySpec& spec, std::size_t bound,
                                              int jobs) {
    std::vector<Task> tasks;
    append_identity_tasks(spec, bound, tasks);
    return run_tasks(tasks, jobs);
}

std::vector<CheckOutcome> run_identity_suite(std::vector<std::string> ids, std::size_t max_n,
                                             int jobs) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    std::vector<Task> tasks;
    for (const std::string& id : ids) {
        const IdentitySpec* spec = find_identity(id);
        if (spec == nullptr) {
            throw std::invalid_argument("run_identity_suite: unknown check " + id);
        }
        append_identity_tasks(*spec, spec->bound_for(max_n), tasks);
    }
    return run_tasks(tasks, jobs);
}

std::vector<CheckOutcome> run_suite(const std::vector<Integer>& primes,
                                    std::vector<std::string> ids, const SharedTables& tables,
                                    int jobs) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    std::vector<const CongruenceSpec*> specs;
    for (const std::string& id : ids) {
        const CongruenceSpec* spec = find_congruence(id);
        if (spec == nullptr) {
            throw std::invalid_argument("run_suite: unknown check " + id);
        }
        specs.push_back(spec);
    }
    return run_suite(primes, specs, tables, jobs);
}

std::vector<CheckOutcome> run_suite(const std::vector<Integer>& primes,
                                    const std::vector<const CongruenceSpec*>& specs,
                                    const SharedTables& tables, int jobs) {
    std::vector<Integer> ps = primes;
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
    std::vector<Task> tasks;
    for (const CongruenceSpec* spec : specs) {
        for (const Integer& p : ps) {
            if (!admits(spec->filter, p)) {
                continue;
            }
            tasks.push_back([spec, p, &tables] {
                return std::vector<CheckOutcome>{guarded_congruence(*spec, p, tables)};
            });
        }
    }
    return run_tasks(tasks, jobs);
}

}  // namespace verisum
