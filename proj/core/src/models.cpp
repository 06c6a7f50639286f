#include "occupancy/models.hpp"

#include <algorithm>

namespace occ {

Rational OccupancyModel::total_mass() const {
    Rational total = 0;
    for (const auto& [x, p] : pmf) total += p;
    return total;
}

void ThetaMixture::validate() const {
    if (components.empty()) throw std::domain_error("mixture needs at least one component");
    Rational total = 0;
    for (const auto& c : components) {
        if (c.t <= 0 || c.t >= 1) throw std::domain_error("mixture t must lie in (0,1)");
        if (c.weight <= 0) throw std::domain_error("mixture weights must be positive");
        total += c.weight;
    }
    if (total != 1) throw std::domain_error("mixture weights must sum to 1");
}

OccupancyModel realize(const MaSpec& spec) {
    Rational c = norm_const(spec.a, spec.n, spec.r);
    if (c == 0)
        throw std::domain_error("infeasible weights: C^(a)_{n,r} = 0 at n=" +
                                std::to_string(spec.n) + ", r=" + std::to_string(spec.r));
    OccupancyModel m{spec.n, spec.r, {}};
    for (const auto& x : enumerate_support(spec.n, spec.r)) {
        Rational w = 1;
        for (int xj : x) w *= spec.a.at(xj);
        if (w != 0) m.pmf.emplace(x, w / c);
    }
    return m;
}

MaSpec classical(Classical kind, int n, int r) {
    switch (kind) {
        case Classical::MB:
            return MaSpec{mb_weights(r > 0 ? r : 1), n, r};
        case Classical::BE:
            return MaSpec{be_weights(r > 0 ? r : 1), n, r};
        case Classical::FD:
            if (r > n) throw std::domain_error("FD requires r <= n");
            return MaSpec{fd_weights(r > 0 ? r : 1), n, r};
    }
    throw std::domain_error("unknown classical kind");
}

MaSpec pseudo_contagious(int n, int r, int s) {
    if (s < 1) throw std::domain_error("pseudo_contagious: s must be >= 1");
    return MaSpec{pc_weights(s, r > 0 ? r : 1), n, r};
}

MaSpec multi_hypergeometric(int n, int r, int s) {
    if (s < 1) throw std::domain_error("multi_hypergeometric: s must be >= 1");
    if (r > n * s) throw std::domain_error("multi_hypergeometric requires r <= n*s");
    return MaSpec{mh_weights(s, r > 0 ? r : 1), n, r};
}

OccupancyModel exponential_family_conditional(const WeightFunction& a, const ThetaMixture& mix,
                                              int n, int r) {
    mix.validate();
    // V truncated at min(x_max, r): larger values are infeasible given S_n = r.
    int v_max = std::min(a.x_max(), r);
    OccupancyModel m{n, r, {}};
    Rational total = 0;
    std::vector<Rational> inv_norm_pow;  // B(t_i)^{-n}
    for (const auto& comp : mix.components) {
        Rational b = 0;
        for (int v = 0; v <= v_max; ++v) b += a.at(v) * pow_rational(comp.t, v);
        if (b == 0) throw std::domain_error("degenerate tilt normalizer");
        inv_norm_pow.push_back(comp.weight / pow_rational(b, n));
    }
    for (const auto& x : enumerate_support(n, r)) {
        Rational w = 0;
        for (std::size_t i = 0; i < mix.components.size(); ++i) {
            Rational prod = inv_norm_pow[i];
            for (int xj : x) prod *= a.at(xj) * pow_rational(mix.components[i].t, xj);
            w += prod;
        }
        if (w != 0) {
            m.pmf.emplace(x, w);
            total += w;
        }
    }
    if (total == 0) throw std::domain_error("conditioning event {S_n = r} has probability 0");
    for (auto& [x, p] : m.pmf) p /= total;
    return m;
}

bool is_exchangeable(const OccupancyModel& m) {
    std::map<Composition, Rational> by_multiset;
    for (const auto& x : enumerate_support(m.n, m.r)) {
        Composition key = x;
        std::sort(key.begin(), key.end());
        Rational p = m.prob(x);
        auto [it, inserted] = by_multiset.emplace(key, p);
        if (!inserted && it->second != p) return false;
    }
    return true;
}

bool kappa_identity_check(const WeightFunction& a, int n, int r, const Rational& t) {
    if (t <= 0 || t >= 1) throw std::domain_error("tilt t must lie in (0,1)");
    // f(v|t) = a(v) t^v / B over 0..x_max; compare C * t^r / B^n with the
    // n-fold convolution of f evaluated at r.
    Rational b = 0;
    for (int v = 0; v <= a.x_max(); ++v) b += a.at(v) * pow_rational(t, v);
    Rational lhs = norm_const(a, n, r) * pow_rational(t, r) / pow_rational(b, n);

    std::vector<Rational> f(static_cast<std::size_t>(a.x_max()) + 1);
    for (int v = 0; v <= a.x_max(); ++v) f[v] = a.at(v) * pow_rational(t, v) / b;
    std::vector<Rational> sum_pmf = f;
    for (int cell = 2; cell <= n; ++cell) {
        std::vector<Rational> next(sum_pmf.size() + f.size() - 1, 0);
        for (std::size_t i = 0; i < sum_pmf.size(); ++i)
            for (std::size_t j = 0; j < f.size(); ++j) next[i + j] += sum_pmf[i] * f[j];
        sum_pmf = std::move(next);
    }
    Rational rhs = static_cast<std::size_t>(r) < sum_pmf.size() ? sum_pmf[r] : Rational(0);
    return lhs == rhs;
}

}  // namespace occ
