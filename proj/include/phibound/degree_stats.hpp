#pragma once

#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "phibound/graph.hpp"

namespace phibound {

using BigInt = boost::multiprecision::cpp_int;
/// Exact rational, always held in lowest terms with a positive denominator.
using ExactRatio = boost::multiprecision::cpp_rational;

/// Degree sequence with exact first and second power sums.
class DegreeStats {
public:
    /// Degrees of `g`; the handshake and 0 <= d <= n-1 invariants hold by construction.
    explicit DegreeStats(const Graph& g);

    /// Arbitrary nonnegative degree multiset (no graphical check).
    static DegreeStats from_degrees(std::vector<int> degrees);

    [[nodiscard]] int count() const noexcept { return static_cast<int>(degrees_.size()); }
    [[nodiscard]] const std::vector<int>& degrees() const noexcept { return degrees_; }
    [[nodiscard]] const BigInt& sum() const noexcept { return sum_d_; }
    [[nodiscard]] const BigInt& sum_squares() const noexcept { return sum_d2_; }
    [[nodiscard]] int max_degree() const noexcept;

private:
    explicit DegreeStats(std::vector<int> degrees);

    std::vector<int> degrees_;
    BigInt sum_d_;
    BigInt sum_d2_;
};

/// Arithmetic mean degree, sum(d)/n.
ExactRatio mean_degree(const DegreeStats& s);

/// Square of the quadratic mean degree, sum(d^2)/n. Kept squared so it stays rational.
ExactRatio quadratic_mean_squared(const DegreeStats& s);

/// sigma_s(xs) by the one-pass recurrence e_k <- e_k + x * e_{k-1}.
/// Requires 1 <= s <= |xs|.
BigInt elementary_symmetric(std::span<const BigInt> xs, int s);
ExactRatio elementary_symmetric_rational(std::span<const ExactRatio> xs, int s);

/// Same recurrence, but degrees beyond |xs| yield 0 instead of throwing.
BigInt elementary_symmetric_or_zero(std::span<const BigInt> xs, int s);

std::vector<BigInt> to_big(std::span<const int> xs);

/// sum x^2 == s1^2 - 2 s2 and sum x^3 == s1^3 - 3 s1 s2 + 3 s3, with s2, s3 = 0 for short inputs.
bool power_sum_identity_check(std::span<const BigInt> xs);

struct MaclaurinResult {
    bool holds = false;
    bool equality = false;
};

/// Compares sigma_s / C(n,s) against (sigma_1 / n)^s exactly, i.e. without taking roots.
MaclaurinResult maclaurin_check(std::span<const ExactRatio> xs, int s);
MaclaurinResult maclaurin_check(std::span<const BigInt> xs, int s);

BigInt binomial(int n, int k);

}  // namespace phibound
