// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "verisum/arith.hpp"
#include "verisum/hypergeo.hpp"
#include "verisum/outcome.hpp"
#include "verisum/sequences.hpp"

namespace verisum {

/// x^2 + y^2 = p with x odd, x = 1 (mod 4), and y even positive. Unique for
/// any prime p = 1 (mod 4).
struct TwoSquares {
    Integer x;
    Integer y;
};

/// Throws NotOneModFour unless p is a prime congruent to 1 modulo 4.
TwoSquares two_squares(const Integer& p);

/// Exact integer tables shared read-only by every check of a run: central
/// binomials and their convolution through max_prime - 1, Euler numbers
/// through max_prime - 3. Built once, then safe to read concurrently.
class SharedTables {
  public:
    static SharedTables build(const Integer& max_prime);

    const CentralBinomialTable& central() const { return central_; }
    const ConvolutionTable& convolution() const { return convolution_; }
    const EulerTable& euler() const { return euler_; }

  private:
    SharedTables(std::size_t binomial_max, std::size_t euler_max);

    CentralBinomialTable central_;
    ConvolutionTable convolution_;
    EulerTable euler_;
};

/// Admissible-prime predicate attached to each congruence check.
enum class PrimeFilter {
    OddPrime,          ///< p >= 3
    GreaterThanThree,  ///< p >= 5
    OneModFour,        ///< p = 1 (mod 4)
};

bool admits(PrimeFilter filter, const Integer& p);

/// Everything one congruence evaluation needs for a single prime: the ring
/// Z/p^e plus cached reductions of the shared tables.
class PrimeContext {
  public:
    PrimeContext(Integer p, unsigned exponent, const SharedTables& tables);

    const Integer& prime() const { return p_; }
    long prime_long() const { return p_long_; }
    const PrimePower& ring() const { return ring_; }
    const SharedTables& tables() const { return *tables_; }

    Residue residue(const Integer& v) const { return Residue(v, ring_); }
    Residue residue(long v) const { return Residue(Integer(v), ring_); }
    Residue reduce(const Rational& r) const { return reduce_rational(r, ring_); }
    Residue inverse(const Integer& v) const { return mod_inverse(v, ring_); }
    Residue inverse(long v) const { return mod_inverse(Integer(v), ring_); }

    /// C(2k, k) mod p^e from the shared table.
    Residue central(long k) const;
    /// Convolution value S(n) mod p^e from the shared table.
    Residue convolution(long n) const;

    long half() const { return (p_long_ - 1) / 2; }
    /// (-1)^((p-1)/2)
    int half_sign() const { return half() % 2 == 0 ? 1 : -1; }
    /// (-1)^((p^2-1)/8)
    int eighth_sign() const;
    /// Euler number with index p - 3, reduced into the ring.
    Residue euler_number() const;

  private:
    Integer p_;
    long p_long_;
    PrimePower ring_;
    const SharedTables* tables_;
};

/// Two residues that a passing congruence makes equal, plus an optional
/// instance suffix used by quantified checks to localize a failing inner
/// index (e.g. ",k=17").
struct CongruenceSides {
    Residue lhs;
    Residue rhs;
    std::string instance_suffix;
};

struct CongruenceSpec {
    std::string id;
    unsigned exponent;  ///< checks run in Z/p^exponent
    PrimeFilter filter;
    bool selftest = false;  ///< excluded from "all" selections; opt-in by name
    std::function<CongruenceSides(const PrimeContext&)> eval;
};

/// Two exact rationals that a passing identity instance makes equal.
struct IdentitySides {
    Rational lhs;
    Rational rhs;
};

struct IdentitySpec {
    std::string id;
    /// Largest verified outer value; 0 means the family follows the run's
    /// max-n bound directly, otherwise the bound is min(cap, max-n).
    std::size_t cap = 0;
    std::string outer_name = "n";
    long outer_start = 0;
    long outer_step = 1;
    /// Single-parameter families: outcome for one outer value.
    std::function<CheckOutcome(long)> eval_one;
    /// Pair families: inner runs 0..inner_hi(outer, bound).
    std::string inner_name;
    std::function<long(long outer, long bound)> inner_hi;
    std::function<CheckOutcome(long outer, long inner)> eval_pair;

    std::size_t bound_for(std::size_t max_n) const {
        return cap == 0 ? max_n : (cap < max_n ? cap : max_n);
    }
};

const std::vector<CongruenceSpec>& congruence_registry();
const std::vector<IdentitySpec>& identity_registry();
const CongruenceSpec* find_congruence(const std::string& id);
const IdentitySpec* find_identity(const std::string& id);
/// Every registered id, selftest fixtures included.
std::vector<std::string> registered_check_ids();

/// One check at one prime. Throws PreconditionViolated when the filter
/// rejects the prime; arithmetic errors propagate.
CheckOutcome run_congruence(const CongruenceSpec& spec, const Integer& p,
                            const SharedTables& tables);

/// One identity instance of a single-parameter family.
CheckOutcome run_identity(const IdentitySpec& spec, long value);
/// One identity instance of a pair family.
CheckOutcome run_identity(const IdentitySpec& spec, long outer, long inner);

/// All instances of one identity family up to an explicit bound. Pair
/// families emit one summary record per outer value plus full records for
/// failing inner values only.
std::vector<CheckOutcome> run_identity_family(const IdentitySpec& spec, std::size_t bound,
                                              int jobs = 1);

/// Identity families selected by id, bounds derived from max_n and each
/// family's cap. Ordering: ids lexicographic, instances ascending.
std::vector<CheckOutcome> run_identity_suite(std::vector<std::string> ids, std::size_t max_n,
                                             int jobs = 1);

/// Congruence checks over every admissible prime from the list. Evaluation
/// errors inside an instance become failing records tagged "error:" rather
/// than aborting the run. Ordering: ids lexicographic, primes ascending.
std::vector<CheckOutcome> run_suite(const std::vector<Integer>& primes,
                                    std::vector<std::string> ids, const SharedTables& tables,
                                    int jobs = 1);

/// Same engine, caller-supplied specs (also the hook for fault-injection
/// tests of the error aggregation path).
std::vector<CheckOutcome> run_suite(const std::vector<Integer>& primes,
                                    const std::vector<const CongruenceSpec*>& specs,
                                    const SharedTables& tables, int jobs = 1);

}  // namespace verisum
