// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

#include "verisum/arith.hpp"
#include "verisum/outcome.hpp"

namespace verisum {

/// A truncated hypergeometric sum: terms k = 0..truncation of
/// prod (upper_i)_k / prod (lower_j)_k * argument^k / k!. The parameter lists
/// satisfy |upper| = |lower| + 1 and no lower Pochhammer factor may vanish
/// within the truncation range; violations throw PreconditionViolated (the
/// vanishing case as the ZeroLowerPochhammer refinement).
class HypergeometricSpec {
  public:
    HypergeometricSpec(std::vector<Rational> upper, std::vector<Rational> lower,
                       Rational argument, std::size_t truncation);

    const std::vector<Rational>& upper() const { return upper_; }
    const std::vector<Rational>& lower() const { return lower_; }
    const Rational& argument() const { return argument_; }
    std::size_t truncation() const { return truncation_; }

  private:
    std::vector<Rational> upper_;
    std::vector<Rational> lower_;
    Rational argument_;
    std::size_t truncation_;
};

/// Exact value of the truncated sum. Terms are built incrementally from the
/// term ratio, so a single pass costs one multiply/divide pair per parameter
/// and term. Once a term vanishes (an upper parameter hit a nonpositive
/// integer) every later term is zero and the sum stops early.
Rational evaluate_truncated(const HypergeometricSpec& spec);

/// Binomial convolution S(n) = sum_{k=0..n} C(2k,k)^2 C(2n-2k,n-k)^2 for
/// n = 0..max_index, computed once from a shared central-binomial table.
class ConvolutionTable {
  public:
    explicit ConvolutionTable(std::size_t max_index);

    /// Throws std::out_of_range past the table end.
    const Integer& at(std::size_t n) const;
    std::size_t max_index() const { return values_.size() - 1; }

  private:
    std::vector<Integer> values_;
};

/// S(n) by the defining convolution sum.
Integer convolution_direct(std::size_t n);

/// S(n) as 16^n * sum_{k=0..n} C(n+k,k) C(n,k) C(2k,k)^2 / (-16)^k. The
/// result is exact and always an integer equal to convolution_direct(n).
Rational convolution_via_id1(std::size_t n);

/// S(n) as sum_{k=0..n} C(2k,k)^3 C(k, n-k) (-16)^{n-k}.
Integer convolution_via_sun(std::size_t n);

inline constexpr const char* kTransformCheckId = "transform_4f3";
inline constexpr const char* kChaundyBullardCheckId = "chaundy_bullard";

/// Verifies the balanced-series transformation at unit argument: the
/// truncated series with upper (-n, a, b, c) and lower (d, e, f) against the
/// Pochhammer prefactor (e-a)_n (f-a)_n / ((e)_n (f)_n) times the transformed
/// series with upper (-n, a, d-b, d-c) and lower (d, a+1-n-e, a+1-n-f).
/// Preconditions: a + b + c - n + 1 = d + e + f, and no lower Pochhammer on
/// either side (nor (e)_n, (f)_n) vanishes; violations throw
/// PreconditionViolated.
CheckOutcome check_transform(std::size_t n, const Rational& a, const Rational& b,
                             const Rational& c, const Rational& d, const Rational& e,
                             const Rational& f);

/// Verifies the two-sided binomial partition-of-unity identity
/// (1-x)^{n+1} sum_{k<=m} C(n+k,k) x^k + x^{m+1} sum_{k<=n} C(m+k,k) (1-x)^k = 1
/// by exact evaluation at n + m + 2 distinct rational points, which pins the
/// polynomial by its degree bound. A failing point is reported in the
/// instance as ",x=<point>".
CheckOutcome check_chaundy_bullard(std::size_t n, std::size_t m);

}  // namespace verisum
