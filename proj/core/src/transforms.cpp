#include "occupancy/transforms.hpp"

#include <algorithm>
#include <numeric>

namespace occ {

OccupancyModel merge(const OccupancyModel& m, int s) {
    if (s < 1 || m.n % s != 0) throw std::domain_error("merge: s must divide n");
    int n_out = m.n / s;
    OccupancyModel out{n_out, m.r, {}};
    for (const auto& [z, p] : m.pmf) {
        Composition x(static_cast<std::size_t>(n_out), 0);
        for (int j = 0; j < n_out; ++j)
            for (int h = 0; h < s; ++h) x[j] += z[static_cast<std::size_t>(j * s + h)];
        out.pmf[x] += p;
    }
    return out;
}

MaSpec merge_spec(const MaSpec& spec, int s) {
    if (s < 1 || spec.n % s != 0) throw std::domain_error("merge_spec: s must divide n");
    return MaSpec{convolution_power(spec.a, s, spec.r), spec.n / s, spec.r};
}

OccupancyModel merge_grouping(const OccupancyModel& m,
                              const std::vector<std::vector<int>>& groups) {
    std::vector<bool> seen(static_cast<std::size_t>(m.n), false);
    std::size_t block_size = groups.empty() ? 0 : groups.front().size();
    for (const auto& g : groups) {
        if (g.size() != block_size) throw std::domain_error("merge_grouping: unequal block sizes");
        for (int cell : g) {
            if (cell < 0 || cell >= m.n || seen[static_cast<std::size_t>(cell)])
                throw std::domain_error("merge_grouping: not a partition of the cells");
            seen[static_cast<std::size_t>(cell)] = true;
        }
    }
    if (groups.size() * block_size != static_cast<std::size_t>(m.n))
        throw std::domain_error("merge_grouping: partition does not cover all cells");

    OccupancyModel out{static_cast<int>(groups.size()), m.r, {}};
    for (const auto& [z, p] : m.pmf) {
        Composition x(groups.size(), 0);
        for (std::size_t j = 0; j < groups.size(); ++j)
            for (int cell : groups[j]) x[j] += z[static_cast<std::size_t>(cell)];
        out.pmf[x] += p;
    }
    return out;
}

OccupancyModel drop_particle(const OccupancyModel& m) {
    if (m.r < 1) throw std::domain_error("drop_particle: no particle to drop (r = 0)");
    OccupancyModel out{m.n, m.r - 1, {}};
    for (const auto& [x, p] : m.pmf) {
        for (int j = 0; j < m.n; ++j) {
            if (x[static_cast<std::size_t>(j)] == 0) continue;
            Composition xp = x;
            --xp[static_cast<std::size_t>(j)];
            out.pmf[xp] += p * Rational(x[static_cast<std::size_t>(j)], m.r);
        }
    }
    return out;
}

bool star_condition(const WeightFunction& a, int n, int r) {
    if (r < 1) throw std::domain_error("star_condition: r must be >= 1");
    Rational c_ratio = norm_const(a, n, r - 1) / norm_const(a, n, r);
    for (const auto& xp : enumerate_support(n, r - 1)) {
        Rational mass = 1;
        for (int v : xp) mass *= a.at(v);
        if (mass == 0) continue;  // zero-probability configuration
        Rational sum = 0;
        for (int v : xp) sum += Rational(v + 1, r) * a.at(v + 1) / a.at(v);
        if (c_ratio * sum != 1) return false;
    }
    return true;
}

OccupancyModel condition_on_prefix(const OccupancyModel& m, int n, int r) {
    if (n < 1 || n > m.n || r < 0 || r > m.r)
        throw std::domain_error("condition_on_prefix: need 1 <= n <= N and 0 <= r <= R");
    OccupancyModel out{n, r, {}};
    Rational total = 0;
    for (const auto& [z, p] : m.pmf) {
        int prefix_sum = std::accumulate(z.begin(), z.begin() + n, 0);
        if (prefix_sum != r) continue;
        Composition x(z.begin(), z.begin() + n);
        out.pmf[x] += p;
        total += p;
    }
    if (total == 0) throw std::domain_error("condition_on_prefix: event {S_n = r} has probability 0");
    for (auto& [x, p] : out.pmf) p /= total;
    return out;
}

namespace {

bool same_pmf(const OccupancyModel& lhs, const OccupancyModel& rhs) {
    if (lhs.n != rhs.n || lhs.r != rhs.r) return false;
    for (const auto& [x, p] : lhs.pmf)
        if (rhs.prob(x) != p) return false;
    for (const auto& [x, p] : rhs.pmf)
        if (lhs.prob(x) != p) return false;
    return true;
}

}  // namespace

bool verify_merge_composition(const OccupancyModel& m, int s1, int s2) {
    return same_pmf(merge(merge(m, s2), s1), merge(m, s1 * s2));
}

bool verify_drop_merge_commute(const MaSpec& spec, int s) {
    if (spec.n % s != 0) throw std::domain_error("verify_drop_merge_commute: s must divide n");
    const WeightFunction merged = convolution_power(spec.a, s, spec.r);
    if (!star_condition(spec.a, spec.n, spec.r) ||
        !star_condition(merged, spec.n / s, spec.r))
        throw std::domain_error("verify_drop_merge_commute: star condition fails for a or a'");
    OccupancyModel m = realize(spec);
    return same_pmf(drop_particle(merge(m, s)), merge(drop_particle(m), s));
}

bool verify_condition_merge_commute(const MaSpec& spec, int n, int r, int s) {
    if (spec.n % s != 0) throw std::domain_error("verify_condition_merge_commute: s must divide Ns");
    int big_n = spec.n / s;  // N, the merged cell count at the fine model's scale
    if (n > big_n || r > spec.r)
        throw std::domain_error("verify_condition_merge_commute: need n <= N and r <= R");
    OccupancyModel m = realize(spec);
    OccupancyModel via_merge_first = condition_on_prefix(merge(m, s), n, r);
    OccupancyModel via_condition_first = merge(condition_on_prefix(m, n * s, r), s);
    OccupancyModel closed_form = realize(MaSpec{convolution_power(spec.a, s, r), n, r});
    return same_pmf(via_merge_first, via_condition_first) &&
           same_pmf(via_merge_first, closed_form);
}

}  // namespace occ
