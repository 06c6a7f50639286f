#include "occupancy/kernel.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace occ {

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(Int(text));
        }
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (den <= 0) throw std::invalid_argument("denominator must be positive");
        return Rational(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a rational: '" + text + "'");
    }
}

std::string format_rational(const Rational& value) {
    std::ostringstream out;
    out << numerator(value);
    if (denominator(value) != 1) out << '/' << denominator(value);
    return out.str();
}

std::int64_t enumeration_cap() {
    if (const char* env = std::getenv("OCCUPANCY_ENUM_CAP")) {
        char* end = nullptr;
        long long cap = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && cap > 0) return cap;
    }
    return 10'000'000;
}

WeightFunction::WeightFunction(std::vector<Rational> values) : values_(std::move(values)) {
    if (values_.empty()) throw std::domain_error("weight function needs at least a(0)");
    if (values_[0] <= 0) throw std::domain_error("weight function requires a(0) > 0");
    bool positive_tail = false;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (values_[i] < 0) throw std::domain_error("weight function values must be nonnegative");
        if (i >= 1 && values_[i] > 0) positive_tail = true;
    }
    // A single-entry table arises legitimately when truncating at r = 0; only
    // longer tables must carry some mass beyond x = 0.
    if (!positive_tail && values_.size() > 1)
        throw std::domain_error("weight function needs a positive value at some x >= 1");
}

WeightFunction mb_weights(int x_max) {
    std::vector<Rational> v(static_cast<std::size_t>(x_max) + 1);
    for (int x = 0; x <= x_max; ++x) v[x] = Rational(1, factorial(x));
    return WeightFunction(std::move(v));
}

WeightFunction be_weights(int x_max) {
    return WeightFunction(std::vector<Rational>(static_cast<std::size_t>(x_max) + 1, 1));
}

WeightFunction fd_weights(int x_max) {
    if (x_max < 1) x_max = 1;
    std::vector<Rational> v(static_cast<std::size_t>(x_max) + 1, 0);
    v[0] = 1;
    v[1] = 1;
    return WeightFunction(std::move(v));
}

WeightFunction pc_weights(int s, int x_max) {
    std::vector<Rational> v(static_cast<std::size_t>(x_max) + 1);
    for (int x = 0; x <= x_max; ++x) v[x] = Rational(binomial(s + x - 1, x));
    return WeightFunction(std::move(v));
}

WeightFunction mh_weights(int s, int x_max) {
    std::vector<Rational> v(static_cast<std::size_t>(x_max) + 1);
    for (int x = 0; x <= x_max; ++x) v[x] = Rational(binomial(s, x));
    return WeightFunction(std::move(v));
}

std::vector<Composition> enumerate_support(int n, int r) {
    if (n < 1) throw std::domain_error("enumerate_support: n must be >= 1");
    if (r < 0) throw std::domain_error("enumerate_support: r must be >= 0");
    Int count = binomial(n + r - 1, n - 1);
    if (count > enumeration_cap())
        throw enumeration_cap_error("support of A_{" + std::to_string(n) + "," +
                                    std::to_string(r) + "} exceeds enumeration cap");

    std::vector<Composition> out;
    out.reserve(count.convert_to<std::size_t>());
    Composition x(static_cast<std::size_t>(n), 0);
    // Lexicographic: recurse left to right, smallest leading entries first.
    auto rec = [&](auto&& self, int j, int remaining) -> void {
        if (j == n - 1) {
            x[j] = remaining;
            out.push_back(x);
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            x[j] = v;
            self(self, j + 1, remaining - v);
        }
    };
    rec(rec, 0, r);
    return out;
}

std::vector<Composition> enumerate_block_refinements(const Composition& x, int s) {
    if (s < 1) throw std::domain_error("enumerate_block_refinements: s must be >= 1");
    Int count = 1;
    for (int xj : x) count *= binomial(s + xj - 1, s - 1);
    if (count > enumeration_cap())
        throw enumeration_cap_error("refinement set exceeds enumeration cap");

    std::vector<Composition> out;
    out.reserve(count.convert_to<std::size_t>());
    Composition z;
    z.reserve(x.size() * static_cast<std::size_t>(s));
    auto rec = [&](auto&& self, std::size_t j) -> void {
        if (j == x.size()) {
            out.push_back(z);
            return;
        }
        for (const auto& block : enumerate_support(s, x[j])) {
            z.insert(z.end(), block.begin(), block.end());
            self(self, j + 1);
            z.resize(z.size() - static_cast<std::size_t>(s));
        }
    };
    rec(rec, 0);
    return out;
}

Rational norm_const(const WeightFunction& a, int n, int r) {
    if (n < 1) throw std::domain_error("norm_const: n must be >= 1");
    if (r < 0) return 0;
    // C^(a)_{n,r} = sum_x a(x) C^(a)_{n-1,r-x}, one DP row per cell.
    std::vector<Rational> row(static_cast<std::size_t>(r) + 1, 0);
    for (int x = 0; x <= std::min(r, a.x_max()); ++x) row[x] = a.at(x);
    for (int cell = 2; cell <= n; ++cell) {
        std::vector<Rational> next(static_cast<std::size_t>(r) + 1, 0);
        for (int total = 0; total <= r; ++total) {
            Rational acc = 0;
            for (int x = 0; x <= std::min(total, a.x_max()); ++x)
                acc += a.at(x) * row[total - x];
            next[total] = acc;
        }
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(r)];
}

WeightFunction convolution_power(const WeightFunction& a, int s, int out_max) {
    if (s < 1) throw std::domain_error("convolution_power: s must be >= 1");
    if (out_max < 0) throw std::domain_error("convolution_power: out_max must be >= 0");
    std::vector<Rational> out(static_cast<std::size_t>(out_max) + 1);
    for (int x = 0; x <= out_max; ++x) out[x] = norm_const(a, s, x);
    return WeightFunction(std::move(out));
}

WeightFunction gauge_canonicalize(const WeightFunction& a) {
    Rational kappa = 1 / a.at(0);
    Rational c = a.at(1) > 0 ? a.at(0) / a.at(1) : Rational(1);
    std::vector<Rational> v(a.values().size());
    Rational tilt = 1;
    for (std::size_t x = 0; x < v.size(); ++x) {
        v[x] = kappa * tilt * a.values()[x];
        tilt *= c;
    }
    return WeightFunction(std::move(v));
}

bool gauge_equal(const WeightFunction& a, const WeightFunction& b) {
    int m = std::max(a.x_max(), b.x_max());
    for (int x = 0; x <= m; ++x)
        if ((a.at(x) > 0) != (b.at(x) > 0)) return false;
    // kappa from x=0; c fixed by the first positive index k >= 1 via the
    // root-free check q(x)^k == q(k)^x with q(x) = b(x)/(kappa a(x)).
    Rational kappa = b.at(0) / a.at(0);
    int k = -1;
    for (int x = 1; x <= m; ++x)
        if (a.at(x) > 0) { k = x; break; }
    if (k < 0) return true;
    Rational qk = b.at(k) / (kappa * a.at(k));
    for (int x = k + 1; x <= m; ++x) {
        if (a.at(x) == 0) continue;
        Rational qx = b.at(x) / (kappa * a.at(x));
        if (pow_rational(qx, k) != pow_rational(qk, x)) return false;
    }
    return true;
}

}  // namespace occ
