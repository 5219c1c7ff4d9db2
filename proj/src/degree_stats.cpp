#include "phibound/degree_stats.hpp"

#include <algorithm>
#include <stdexcept>

namespace phibound {

DegreeStats::DegreeStats(const Graph& g) : DegreeStats(g.degrees()) {}

DegreeStats::DegreeStats(std::vector<int> degrees) : degrees_(std::move(degrees))
{
    for (int d : degrees_) {
        if (d < 0) {
            throw std::invalid_argument("degrees must be nonnegative");
        }
        sum_d_ += d;
        sum_d2_ += BigInt(d) * d;
    }
}

DegreeStats DegreeStats::from_degrees(std::vector<int> degrees)
{
    return DegreeStats(std::move(degrees));
}

int DegreeStats::max_degree() const noexcept
{
    return degrees_.empty() ? 0 : *std::max_element(degrees_.begin(), degrees_.end());
}

ExactRatio mean_degree(const DegreeStats& s)
{
    if (s.count() == 0) {
        throw std::invalid_argument("mean degree of an empty vertex set");
    }
    return ExactRatio(s.sum(), BigInt(s.count()));
}

ExactRatio quadratic_mean_squared(const DegreeStats& s)
{
    if (s.count() == 0) {
        throw std::invalid_argument("quadratic mean degree of an empty vertex set");
    }
    return ExactRatio(s.sum_squares(), BigInt(s.count()));
}

namespace {

template <typename T>
T esf(std::span<const T> xs, int s)
{
    std::vector<T> e(static_cast<std::size_t>(s) + 1, T(0));
    e[0] = 1;
    int seen = 0;
    for (const T& x : xs) {
        ++seen;
        for (int k = std::min(seen, s); k >= 1; --k) {
            e[k] += x * e[k - 1];
        }
    }
    return e[s];
}

template <typename T>
T power(T base, int exp)
{
    T out(1);
    for (int i = 0; i < exp; ++i) {
        out *= base;
    }
    return out;
}

void check_degree(std::size_t len, int s)
{
    if (s < 1 || static_cast<std::size_t>(s) > len) {
        throw std::out_of_range("symmetric polynomial degree " + std::to_string(s) + " outside 1.." +
                                std::to_string(len));
    }
}

}  // namespace

BigInt elementary_symmetric(std::span<const BigInt> xs, int s)
{
    check_degree(xs.size(), s);
    return esf(xs, s);
}

ExactRatio elementary_symmetric_rational(std::span<const ExactRatio> xs, int s)
{
    check_degree(xs.size(), s);
    return esf(xs, s);
}

BigInt elementary_symmetric_or_zero(std::span<const BigInt> xs, int s)
{
    if (s < 0) {
        throw std::out_of_range("negative symmetric polynomial degree");
    }
    if (static_cast<std::size_t>(s) > xs.size()) {
        return 0;
    }
    return s == 0 ? BigInt(1) : esf(xs, s);
}

std::vector<BigInt> to_big(std::span<const int> xs)
{
    return {xs.begin(), xs.end()};
}

bool power_sum_identity_check(std::span<const BigInt> xs)
{
    if (xs.empty()) {
        throw std::invalid_argument("power-sum identities need a nonempty tuple");
    }
    BigInt p2 = 0;
    BigInt p3 = 0;
    for (const BigInt& x : xs) {
        p2 += x * x;
        p3 += x * x * x;
    }
    const BigInt s1 = elementary_symmetric_or_zero(xs, 1);
    const BigInt s2 = elementary_symmetric_or_zero(xs, 2);
    const BigInt s3 = elementary_symmetric_or_zero(xs, 3);
    return p2 == s1 * s1 - 2 * s2 && p3 == s1 * s1 * s1 - 3 * s1 * s2 + 3 * s3;
}

BigInt binomial(int n, int k)
{
    if (k < 0 || k > n) {
        return 0;
    }
    BigInt out = 1;
    for (int i = 1; i <= k; ++i) {
        out = out * (n - k + i) / i;
    }
    return out;
}

MaclaurinResult maclaurin_check(std::span<const ExactRatio> xs, int s)
{
    check_degree(xs.size(), s);
    for (const ExactRatio& x : xs) {
        if (x < 0) {
            throw std::invalid_argument("Maclaurin check requires nonnegative entries");
        }
    }
    const int n = static_cast<int>(xs.size());
    // sigma_s / C(n,s) <= (sigma_1/n)^s  <=>  sigma_s * n^s <= C(n,s) * sigma_1^s
    const ExactRatio lhs = elementary_symmetric_rational(xs, s) * ExactRatio(power(BigInt(n), s));
    const ExactRatio rhs = ExactRatio(binomial(n, s)) * power(elementary_symmetric_rational(xs, 1), s);
    return {lhs <= rhs, lhs == rhs};
}

MaclaurinResult maclaurin_check(std::span<const BigInt> xs, int s)
{
    std::vector<ExactRatio> rs(xs.begin(), xs.end());
    return maclaurin_check(std::span<const ExactRatio>(rs), s);
}

}  // namespace phibound
