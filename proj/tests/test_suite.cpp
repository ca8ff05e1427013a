// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "verisum/errors.hpp"
#include "verisum/suite.hpp"

using namespace verisum;

namespace {

const SharedTables& tables() {
    static const SharedTables t = SharedTables::build(Integer(199));
    return t;
}

CheckOutcome congruence_at(const std::string& id, long p) {
    const CongruenceSpec* spec = find_congruence(id);
    REQUIRE(spec != nullptr);
    return run_congruence(*spec, Integer(p), tables());
}

void expect_pass(const std::string& id, long p, const std::string& value) {
    const CheckOutcome out = congruence_at(id, p);
    CAPTURE(id);
    CAPTURE(p);
    CHECK(out.pass);
    CHECK(out.lhs == value);
    CHECK(out.rhs == value);
    CHECK(out.instance == "p=" + std::to_string(p));
}

}  // namespace

TEST_CASE("two-squares decomposition on known primes") {
    const TwoSquares t5 = two_squares(5);
    CHECK(t5.x == 1);
    CHECK(t5.y == 2);
    const TwoSquares t13 = two_squares(13);
    CHECK(t13.x == -3);
    CHECK(t13.y == 2);
    const TwoSquares t17 = two_squares(17);
    CHECK(t17.x == 1);
    CHECK(t17.y == 4);
    const TwoSquares t29 = two_squares(29);
    CHECK(t29.x == 5);
    CHECK(t29.y == 2);
    const TwoSquares t53 = two_squares(53);
    CHECK(t53.x == -7);
    CHECK(t53.y == 2);
}

TEST_CASE("two-squares output is normalized for every admissible prime") {
    for (const Integer& p : primes_between(5, 200)) {
        if (p % 4 != 1) {
            continue;
        }
        const TwoSquares t = two_squares(p);
        CHECK(t.x * t.x + t.y * t.y == p);
        CHECK(mpz_odd_p(t.x.get_mpz_t()));
        Integer xm = t.x;
        mpz_fdiv_r_ui(xm.get_mpz_t(), xm.get_mpz_t(), 4);
        CHECK(xm == 1);
        CHECK(t.y > 0);
        CHECK(mpz_even_p(t.y.get_mpz_t()));
    }
}

TEST_CASE("two-squares rejects bad input") {
    CHECK_THROWS_AS(two_squares(Integer(7)), NotOneModFour);
    CHECK_THROWS_AS(two_squares(Integer(15)), std::invalid_argument);
}

TEST_CASE("shared tables cover the requested prime bound") {
    CHECK(tables().central().max_index() == 198);
    CHECK(tables().convolution().max_index() == 198);
    CHECK(tables().euler().max_index() == 196);
    CHECK(tables().convolution().at(8) == Integer("561787864"));
}

TEST_CASE("prime filters") {
    CHECK(admits(PrimeFilter::OddPrime, 3));
    CHECK_FALSE(admits(PrimeFilter::OddPrime, 2));
    CHECK(admits(PrimeFilter::GreaterThanThree, 5));
    CHECK_FALSE(admits(PrimeFilter::GreaterThanThree, 3));
    CHECK(admits(PrimeFilter::OneModFour, 13));
    CHECK_FALSE(admits(PrimeFilter::OneModFour, 7));
}

TEST_CASE("prime context derived quantities") {
    const PrimeContext c7(Integer(7), 4, tables());
    CHECK(c7.half() == 3);
    CHECK(c7.half_sign() == -1);
    CHECK(c7.eighth_sign() == 1);
    CHECK(c7.euler_number().value() == 5);  // index 4
    CHECK(c7.central(3).value() == 20);
    CHECK(c7.convolution(2).value() == 88);
    CHECK(c7.ring().str() == "7^4");

    const PrimeContext c5(Integer(5), 2, tables());
    CHECK(c5.half_sign() == 1);
    CHECK(c5.eighth_sign() == -1);
    CHECK(c5.euler_number().signed_alias() == -1);  // index 2
    for (const Integer& p : primes_between(3, 100)) {
        const PrimeContext c(p, 1, tables());
        const long h = (p.get_si() - 1) / 2;
        CHECK(c.half() == h);
        CHECK(c.half_sign() == (h % 2 == 0 ? 1 : -1));
        const Integer e = (p * p - 1) / 8;
        CHECK(c.eighth_sign() == (mpz_odd_p(e.get_mpz_t()) ? -1 : 1));
    }
}

TEST_CASE("registry exposes every check exactly once") {
    const std::vector<std::string> ids = registered_check_ids();
    CHECK(ids.size() == congruence_registry().size() + identity_registry().size());
    std::vector<std::string> sorted = ids;
    std::sort(sorted.begin(), sorted.end());
    CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
    CHECK(find_congruence("rv") != nullptr);
    CHECK(find_congruence("id1") == nullptr);
    CHECK(find_identity("id1") != nullptr);
    CHECK(find_identity("rv") == nullptr);
    CHECK(find_congruence("selftest_fail")->selftest);
}

TEST_CASE("congruence spot values, modulus p^2") {
    expect_pass("rv", 3, "8");
    expect_pass("rv", 5, "1");
    expect_pass("rv_half_equiv", 7, "48");
    expect_pass("sun_x_8", 5, "24");
    expect_pass("sun_x_16", 5, "24");
    expect_pass("sun_x_8", 13, "3");
    expect_pass("sun_x_16", 13, "3");
    expect_pass("sun_x_8", 17, "1");
    expect_pass("sun_x_16", 29, "836");
}

TEST_CASE("congruence spot values, modulus p^3") {
    expect_pass("sun_half", 5, "101");
    expect_pass("sun_tail", 5, "50");
    expect_pass("sun_half", 7, "244");
    expect_pass("sun_tail", 7, "196");
    expect_pass("sun8_p3", 5, "5");
    expect_pass("sun16_p3", 5, "5");
    expect_pass("sun8_p3", 7, "336");
    expect_pass("sun16_p3", 7, "336");
}

TEST_CASE("congruence spot values, modulus p^4") {
    expect_pass("cxh", 5, "505");
    expect_pass("cxh", 7, "1708");
    expect_pass("cxh", 13, "21983");
    expect_pass("mao_half", 5, "255");
    expect_pass("mao_half", 7, "1365");
    expect_pass("den8", 5, "5");
    expect_pass("den16", 5, "255");
    expect_pass("den8", 7, "1365");
    expect_pass("den16", 7, "336");
    expect_pass("den8", 13, "24180");
    expect_pass("den16", 13, "8801");
    expect_pass("mao_cao_32", 5, "250");
    expect_pass("mao_cao_32", 7, "1372");
    expect_pass("key_star", 5, "5");
    expect_pass("key_star", 7, "1365");
}

TEST_CASE("congruence spot values, modulus p and p^5") {
    expect_pass("suncon3_half", 5, "4");
    expect_pass("suncon3_full", 5, "4");
    expect_pass("suncon3_half", 7, "1");
    expect_pass("suncon3_full", 7, "1");
    expect_pass("key1_mod_p5", 5, "255");
    expect_pass("key1_mod_p5", 7, "336");
}

TEST_CASE("quantified congruence reports the whole scan") {
    const CheckOutcome out = congruence_at("prod_binom", 5);
    CHECK(out.pass);
    CHECK(out.instance == "p=5");
    CHECK(out.lhs == "126");  // k = p-1 record of a clean scan
    CHECK(out.modulus == "5^4");
}

TEST_CASE("congruence outcome records the ring") {
    CHECK(congruence_at("rv", 3).modulus == "3^2");
    CHECK(congruence_at("key1_mod_p5", 5).modulus == "5^5");
    CHECK(congruence_at("suncon3_full", 7).modulus == "7^1");
}

TEST_CASE("filters reject inadmissible primes") {
    const CongruenceSpec* sun_half = find_congruence("sun_half");
    REQUIRE(sun_half != nullptr);
    CHECK_THROWS_AS(run_congruence(*sun_half, Integer(3), tables()), PreconditionViolated);
    const CongruenceSpec* sun_x = find_congruence("sun_x_8");
    REQUIRE(sun_x != nullptr);
    CHECK_THROWS_AS(run_congruence(*sun_x, Integer(7), tables()), PreconditionViolated);
}

TEST_CASE("selftest fixture fails by construction") {
    const CheckOutcome out = congruence_at("selftest_fail", 5);
    CHECK_FALSE(out.pass);
}

TEST_CASE("every registered congruence holds on a shared prime range") {
    for (const CongruenceSpec& spec : congruence_registry()) {
        if (spec.selftest) {
            continue;
        }
        for (const Integer& p : primes_between(5, 60)) {
            if (!admits(spec.filter, p)) {
                continue;
            }
            const CheckOutcome out = run_congruence(spec, p, tables());
            const std::string where = spec.id + " at p=" + p.get_str();
            CAPTURE(where);
            CHECK(out.pass);
        }
    }
}

TEST_CASE("identity single instances") {
    const IdentitySpec* id1 = find_identity("id1");
    REQUIRE(id1 != nullptr);
    const CheckOutcome out = run_identity(*id1, 5);
    CHECK(out.pass);
    CHECK(out.instance == "n=5");
    CHECK(out.modulus == "exact");
    CHECK(out.lhs == "195008");

    const IdentitySpec* transform = find_identity("transform_4f3");
    REQUIRE(transform != nullptr);
    const CheckOutcome t2 = run_identity(*transform, 2);
    CHECK(t2.pass);
    CHECK(t2.lhs == "22/9");

    const IdentitySpec* key8 = find_identity("key8_exact");
    REQUIRE(key8 != nullptr);
    const CheckOutcome k8 = run_identity(*key8, 3);
    CHECK(k8.pass);
    CHECK(k8.lhs == "57/8");
}

TEST_CASE("interchange identity holds on odd arguments and flips sign on even") {
    const IdentitySpec* key1 = find_identity("key1_exact");
    REQUIRE(key1 != nullptr);
    CHECK(key1->outer_start == 1);
    CHECK(key1->outer_step == 2);
    const CheckOutcome m3 = run_identity(*key1, 3);
    CHECK(m3.pass);
    CHECK(m3.lhs == "39/32");
    const CheckOutcome m2 = run_identity(*key1, 2);
    CHECK_FALSE(m2.pass);
    CHECK(m2.lhs == "-1/2");
    CHECK(m2.rhs == "1/2");
    for (long m = 2; m <= 20; m += 2) {
        const CheckOutcome out = run_identity(*key1, m);
        CHECK_FALSE(out.pass);
        CHECK(out.lhs == ("-" + out.rhs));
    }
}

TEST_CASE("identity arity mismatches throw") {
    const IdentitySpec* id1 = find_identity("id1");
    const IdentitySpec* id2 = find_identity("id2");
    REQUIRE(id1 != nullptr);
    REQUIRE(id2 != nullptr);
    CHECK_THROWS_AS(run_identity(*id1, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(run_identity(*id2, 3), std::invalid_argument);
}

TEST_CASE("pair family emits one passing summary per outer value") {
    const IdentitySpec* id2 = find_identity("id2");
    REQUIRE(id2 != nullptr);
    const std::vector<CheckOutcome> out = run_identity_family(*id2, 10);
    CHECK(out.size() == 11);
    for (long l = 0; l <= 10; ++l) {
        const CheckOutcome& o = out[static_cast<std::size_t>(l)];
        CHECK(o.pass);
        CHECK(o.instance == "l=" + std::to_string(l) + ",k=0.." + std::to_string(l));
    }
}

TEST_CASE("pair family expands failing inner values") {
    IdentitySpec spec;
    spec.id = "synthetic_pair";
    spec.outer_name = "a";
    spec.inner_name = "b";
    spec.inner_hi = [](long outer, long) { return outer; };
    spec.eval_pair = [](long outer, long inner) {
        CheckOutcome o;
        o.check = "synthetic_pair";
        o.instance = "a=" + std::to_string(outer) + ",b=" + std::to_string(inner);
        o.modulus = "exact";
        o.lhs = std::to_string(inner);
        o.rhs = inner % 2 == 0 ? std::to_string(inner) : "-1";
        o.pass = inner % 2 == 0;
        return o;
    };
    const std::vector<CheckOutcome> out = run_identity_family(spec, 3);
    // outer 0: summary; 1: summary+1 fail; 2: summary+1; 3: summary+2
    REQUIRE(out.size() == 8);
    CHECK(out[0].pass);
    CHECK(out[0].instance == "a=0,b=0..0");
    CHECK_FALSE(out[1].pass);
    CHECK(out[1].instance == "a=1,b=0..1");
    CHECK(out[1].lhs == "1");  // first failing inner value
    CHECK(out[2].instance == "a=1,b=1");
    const CheckOutcome& last_summary = out[5];
    CHECK(last_summary.instance == "a=3,b=0..3");
    CHECK_FALSE(last_summary.pass);
    CHECK(out[6].instance == "a=3,b=1");
    CHECK(out[7].instance == "a=3,b=3");
}

TEST_CASE("identity suite orders by id then instance and respects caps") {
    const std::vector<CheckOutcome> out = run_identity_suite({"id6", "id3", "id4"}, 10);
    REQUIRE(out.size() == 32);  // id3: 11, id4: 10 (starts at 1), id6: 11
    CHECK(out.front().check == "id3");
    CHECK(out.front().instance == "k=0");
    CHECK(out[11].check == "id4");
    CHECK(out[11].instance == "k=1");
    CHECK(out.back().check == "id6");
    CHECK(out.back().instance == "k=10");
    for (const CheckOutcome& o : out) {
        CHECK(o.pass);
    }
    // caps clamp the bound: chaundy_bullard stops at 12 outers even for max_n 60
    const std::vector<CheckOutcome> cb = run_identity_suite({"chaundy_bullard"}, 60);
    CHECK(cb.size() == 13);
    CHECK(cb.back().instance == "n=12,m=0..12");
    const IdentitySpec* key1 = find_identity("key1_exact");
    REQUIRE(key1 != nullptr);
    CHECK(key1->bound_for(60) == 40);
    CHECK(key1->bound_for(9) == 9);
}

TEST_CASE("identity suite rejects unknown ids") {
    CHECK_THROWS_AS(run_identity_suite({"id1", "no_such_check"}, 5), std::invalid_argument);
}

TEST_CASE("every identity family passes at a reduced bound") {
    std::vector<std::string> ids;
    for (const IdentitySpec& spec : identity_registry()) {
        ids.push_back(spec.id);
    }
    for (const CheckOutcome& o : run_identity_suite(ids, 16)) {
        CAPTURE(o.check);
        CAPTURE(o.instance);
        CHECK(o.pass);
    }
}

TEST_CASE("congruence suite ordering and admissibility") {
    const std::vector<Integer> primes = {Integer(7), Integer(5), Integer(7)};
    const std::vector<CheckOutcome> out =
        run_suite(primes, std::vector<std::string>{"rv", "den8"}, tables());
    REQUIRE(out.size() == 4);
    CHECK(out[0].check == "den8");
    CHECK(out[0].instance == "p=5");
    CHECK(out[1].check == "den8");
    CHECK(out[1].instance == "p=7");
    CHECK(out[2].check == "rv");
    CHECK(out[2].instance == "p=5");
    CHECK(out[3].check == "rv");
    CHECK(out[3].instance == "p=7");

    CHECK(run_suite({}, {"rv"}, tables()).empty());
    CHECK(run_suite({Integer(7)}, {"sun_x_8"}, tables()).empty());
    CHECK_THROWS_AS(run_suite({Integer(5)}, {"nope"}, tables()), std::invalid_argument);
}

TEST_CASE("parallel lanes agree with the serial lane") {
    std::vector<std::string> cids;
    for (const CongruenceSpec& spec : congruence_registry()) {
        if (!spec.selftest) {
            cids.push_back(spec.id);
        }
    }
    const std::vector<Integer> primes = primes_between(5, 60);
    const auto serial = run_suite(primes, cids, tables(), 1);
    const auto parallel = run_suite(primes, cids, tables(), 4);
    CHECK(serial == parallel);
    CHECK(!serial.empty());

    std::vector<std::string> iids;
    for (const IdentitySpec& spec : identity_registry()) {
        iids.push_back(spec.id);
    }
    const auto iserial = run_identity_suite(iids, 14, 1);
    const auto iparallel = run_identity_suite(iids, 14, 4);
    CHECK(iserial == iparallel);
}

TEST_CASE("evaluation errors become failing records instead of aborting") {
    CongruenceSpec bad;
    bad.id = "synthetic_throw";
    bad.exponent = 2;
    bad.filter = PrimeFilter::OddPrime;
    bad.eval = [](const PrimeContext&) -> CongruenceSides {
        throw std::runtime_error("kernel exploded");
    };
    const std::vector<CheckOutcome> out =
        run_suite({Integer(5)}, std::vector<const CongruenceSpec*>{&bad}, tables());
    REQUIRE(out.size() == 1);
    CHECK_FALSE(out[0].pass);
    CHECK(out[0].modulus == "5^2");
    CHECK(out[0].lhs == "error: kernel exploded");
}
