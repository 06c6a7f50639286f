#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "occupancy/rational.hpp"

namespace occ {

/// Thrown when a support enumeration would exceed the configured cap.
struct enumeration_cap_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Enumeration cap: OCCUPANCY_ENUM_CAP overrides the default of 10^7.
std::int64_t enumeration_cap();

/// A weak composition of `total` into fixed-length nonnegative parts.
using Composition = std::vector<int>;

/// Nonnegative weight table a(0..x_max); a(x) = 0 beyond x_max.
class WeightFunction {
public:
    WeightFunction() = default;
    explicit WeightFunction(std::vector<Rational> values);

    int x_max() const { return static_cast<int>(values_.size()) - 1; }

    /// a(x); zero outside 0..x_max.
    const Rational& at(int x) const {
        static const Rational zero = 0;
        if (x < 0 || x > x_max()) return zero;
        return values_[static_cast<std::size_t>(x)];
    }

    const std::vector<Rational>& values() const { return values_; }

    bool operator==(const WeightFunction& other) const = default;

private:
    std::vector<Rational> values_;
};

// Classical and merged-class weight presets.
WeightFunction mb_weights(int x_max);                 // a(x) = 1/x!
WeightFunction be_weights(int x_max);                 // a(x) = 1
WeightFunction fd_weights(int x_max);                 // a(0)=a(1)=1, 0 beyond
WeightFunction pc_weights(int s, int x_max);          // a(x) = binom(s+x-1, x)
WeightFunction mh_weights(int s, int x_max);          // a(x) = binom(s, x)

/// All of A_{n,r} in lexicographic order; |A_{n,r}| = binom(n+r-1, n-1).
std::vector<Composition> enumerate_support(int n, int r);

/// H^(s)_{n,r,x}: refinements of x into blocks of s cells, block j summing to x_j.
std::vector<Composition> enumerate_block_refinements(const Composition& x, int s);

/// C^(a)_{n,r} by the one-dimensional convolution recursion (never by enumeration).
Rational norm_const(const WeightFunction& a, int n, int r);

/// The table x -> C^(a)_{s,x} on 0..out_max (s-fold convolution of a).
WeightFunction convolution_power(const WeightFunction& a, int s, int out_max);

/// Gauge representative with a(0)=1 and, when a(1)>0, a(1)=1.
WeightFunction gauge_canonicalize(const WeightFunction& a);

/// True iff b(x) = kappa * c^x * a(x) for some rationals kappa, c > 0.
bool gauge_equal(const WeightFunction& a, const WeightFunction& b);

}  // namespace occ
