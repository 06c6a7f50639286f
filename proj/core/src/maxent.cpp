#include "occupancy/maxent.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace occ {

namespace {

struct SupportData {
    std::vector<Composition> points;
    std::vector<std::vector<double>> features;  // features[k][i]
};

SupportData build_support(const MaxEntProblem& p) {
    SupportData data;
    for (auto& x : enumerate_support(p.n, p.r)) {
        if (p.support_filter && !p.support_filter(x)) continue;
        data.points.push_back(std::move(x));
    }
    if (data.points.empty()) throw std::domain_error("maxent: empty support");
    data.features.resize(p.constraint_functions.size());
    for (std::size_t k = 0; k < p.constraint_functions.size(); ++k) {
        data.features[k].reserve(data.points.size());
        for (const auto& x : data.points) data.features[k].push_back(p.constraint_functions[k](x));
    }
    return data;
}

/// Gibbs weights exp(-lambda.f) with max-shift; returns normalized pmf and log Z.
std::pair<std::vector<double>, double> gibbs_pmf(const SupportData& d,
                                                 const std::vector<double>& lambda) {
    std::size_t m = lambda.size();
    std::vector<double> energy(d.points.size(), 0.0);
    for (std::size_t i = 0; i < d.points.size(); ++i)
        for (std::size_t k = 0; k < m; ++k) energy[i] -= lambda[k] * d.features[k][i];
    double shift = *std::max_element(energy.begin(), energy.end());
    double z = 0.0;
    std::vector<double> p(d.points.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        p[i] = std::exp(energy[i] - shift);
        z += p[i];
    }
    for (double& v : p) v /= z;
    return {std::move(p), std::log(z) + shift};
}

std::vector<double> expectations(const SupportData& d, const std::vector<double>& p) {
    std::vector<double> e(d.features.size(), 0.0);
    for (std::size_t k = 0; k < d.features.size(); ++k)
        for (std::size_t i = 0; i < p.size(); ++i) e[k] += p[i] * d.features[k][i];
    return e;
}

/// Solve (H + ridge I) d = g by Gaussian elimination with partial pivoting.
std::vector<double> solve_linear(std::vector<std::vector<double>> h, std::vector<double> g) {
    std::size_t m = g.size();
    for (std::size_t i = 0; i < m; ++i) h[i][i] += 1e-12;
    for (std::size_t col = 0; col < m; ++col) {
        std::size_t pivot = col;
        for (std::size_t row = col + 1; row < m; ++row)
            if (std::abs(h[row][col]) > std::abs(h[pivot][col])) pivot = row;
        std::swap(h[col], h[pivot]);
        std::swap(g[col], g[pivot]);
        if (h[col][col] == 0.0) throw solver_error("singular dual Hessian");
        for (std::size_t row = col + 1; row < m; ++row) {
            double factor = h[row][col] / h[col][col];
            for (std::size_t j = col; j < m; ++j) h[row][j] -= factor * h[col][j];
            g[row] -= factor * g[col];
        }
    }
    std::vector<double> d(m, 0.0);
    for (std::size_t i = m; i-- > 0;) {
        double acc = g[i];
        for (std::size_t j = i + 1; j < m; ++j) acc -= h[i][j] * d[j];
        d[i] = acc / h[i][i];
    }
    return d;
}

double dual_objective(const SupportData& d, const std::vector<double>& lambda,
                      const std::vector<double>& targets) {
    auto [p, log_z] = gibbs_pmf(d, lambda);
    double value = log_z;
    for (std::size_t k = 0; k < lambda.size(); ++k) value += lambda[k] * targets[k];
    return value;
}

MaxEntSolution finish(const MaxEntProblem& problem, const SupportData& d,
                      std::vector<double> lambda) {
    auto [p, log_z] = gibbs_pmf(d, lambda);
    MaxEntSolution sol;
    sol.dual_value = log_z;
    for (std::size_t k = 0; k < lambda.size(); ++k) sol.dual_value += lambda[k] * problem.targets[k];
    auto e = expectations(d, p);
    for (std::size_t k = 0; k < lambda.size(); ++k) sol.residuals.push_back(e[k] - problem.targets[k]);
    sol.multipliers = std::move(lambda);
    for (std::size_t i = 0; i < d.points.size(); ++i) sol.pmf.emplace(d.points[i], p[i]);
    return sol;
}

/// Monotone single-constraint solve: E_lambda[f] strictly decreases in lambda.
double solve_single(const SupportData& d, double c, double tol) {
    const auto& f = d.features[0];
    double f_min = *std::min_element(f.begin(), f.end());
    double f_max = *std::max_element(f.begin(), f.end());
    if (f_max - f_min < 1e-14) {
        if (std::abs(c - f_min) > 1e-9)
            throw infeasible_target_error("constant constraint function cannot meet target");
        return 0.0;
    }
    if (c <= f_min || c >= f_max)
        throw infeasible_target_error("target outside the achievable moment range");

    auto mean_at = [&](double lambda) {
        auto [p, log_z] = gibbs_pmf(d, {lambda});
        (void)log_z;
        double e = 0.0;
        for (std::size_t i = 0; i < p.size(); ++i) e += p[i] * f[i];
        return e;
    };
    double lo = -1.0, hi = 1.0;
    while (mean_at(lo) < c) {
        lo *= 2.0;
        if (lo < -1e6) throw solver_error("failed to bracket the multiplier from below");
    }
    while (mean_at(hi) > c) {
        hi *= 2.0;
        if (hi > 1e6) throw solver_error("failed to bracket the multiplier from above");
    }
    double lambda = 0.5 * (lo + hi);
    for (int iter = 0; iter < 200; ++iter) {
        auto [p, log_z] = gibbs_pmf(d, {lambda});
        (void)log_z;
        double mean = 0.0, second = 0.0;
        for (std::size_t i = 0; i < p.size(); ++i) {
            mean += p[i] * f[i];
            second += p[i] * f[i] * f[i];
        }
        double g = mean - c;
        if (std::abs(g) <= tol) return lambda;
        if (g > 0)
            lo = lambda;
        else
            hi = lambda;
        double var = second - mean * mean;
        double next = var > 0 ? lambda + g / var : lambda;  // Newton: dE/dlambda = -Var
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        lambda = next;
    }
    throw solver_error("single-constraint dual did not converge");
}

std::vector<double> solve_multi(const SupportData& d, const std::vector<double>& targets,
                                double tol) {
    std::size_t m = targets.size();
    for (std::size_t k = 0; k < m; ++k) {
        const auto& f = d.features[k];
        double f_min = *std::min_element(f.begin(), f.end());
        double f_max = *std::max_element(f.begin(), f.end());
        if (targets[k] < f_min - 1e-12 || targets[k] > f_max + 1e-12)
            throw infeasible_target_error("target outside the achievable moment range");
    }
    std::vector<double> lambda(m, 0.0);
    for (int iter = 0; iter < 200; ++iter) {
        auto [p, log_z] = gibbs_pmf(d, lambda);
        (void)log_z;
        auto e = expectations(d, p);
        std::vector<double> grad(m);
        double grad_norm = 0.0;
        for (std::size_t k = 0; k < m; ++k) {
            grad[k] = targets[k] - e[k];
            grad_norm = std::max(grad_norm, std::abs(grad[k]));
        }
        if (grad_norm <= tol) return lambda;
        // Hessian of the dual is the feature covariance under p.
        std::vector<std::vector<double>> cov(m, std::vector<double>(m, 0.0));
        for (std::size_t k = 0; k < m; ++k)
            for (std::size_t l = k; l < m; ++l) {
                double acc = 0.0;
                for (std::size_t i = 0; i < p.size(); ++i)
                    acc += p[i] * (d.features[k][i] - e[k]) * (d.features[l][i] - e[l]);
                cov[k][l] = cov[l][k] = acc;
            }
        std::vector<double> step = solve_linear(cov, grad);
        double base = dual_objective(d, lambda, targets);
        double t = 1.0;
        std::vector<double> trial(m);
        for (int back = 0; back < 60; ++back) {
            for (std::size_t k = 0; k < m; ++k) trial[k] = lambda[k] - t * step[k];
            if (dual_objective(d, trial, targets) <= base) break;
            t *= 0.5;
        }
        lambda = trial;
    }
    throw solver_error("multi-constraint dual did not converge");
}

}  // namespace

MaxEntSolution solve_gibbs(const MaxEntProblem& p, double tol) {
    if (p.constraint_functions.size() != p.targets.size())
        throw std::domain_error("maxent: constraint/target count mismatch");
    SupportData d = build_support(p);
    if (p.constraint_functions.empty()) return finish(p, d, {});
    std::vector<double> lambda;
    if (p.constraint_functions.size() == 1)
        lambda = {solve_single(d, p.targets[0], tol)};
    else
        lambda = solve_multi(d, p.targets, tol);
    return finish(p, d, std::move(lambda));
}

MaxEntSolution solve_ma(const WeightFunction& a, int n, int r, double c, double tol) {
    MaxEntProblem p;
    p.n = n;
    p.r = r;
    // Zero weights (FD style) are handled by support restriction, not by log a.
    p.support_filter = [a](const Composition& x) {
        for (int xj : x)
            if (a.at(xj) == 0) return false;
        return true;
    };
    p.constraint_functions.push_back([a](const Composition& x) {
        double f = 0.0;
        for (int xj : x) f += std::log(to_double(a.at(xj)));
        return f;
    });
    p.targets.push_back(c);
    MaxEntSolution sol = solve_gibbs(p, tol);
    // Degenerate gauge (constant log-weight, e.g. BE): every multiplier yields
    // the same pmf; report the M^(a) convention lambda = -1.
    SupportData d = build_support(p);
    double f_min = *std::min_element(d.features[0].begin(), d.features[0].end());
    double f_max = *std::max_element(d.features[0].begin(), d.features[0].end());
    if (f_max - f_min < 1e-14) sol.multipliers[0] = -1.0;
    return sol;
}

double exact_log_weight_expectation(const WeightFunction& a, int n, int r) {
    OccupancyModel m = realize(MaSpec{a, n, r});
    double e = 0.0;
    for (const auto& [x, prob] : m.pmf) {
        double f = 0.0;
        for (int xj : x) f += std::log(to_double(a.at(xj)));
        e += to_double(prob) * f;
    }
    return e;
}

ScaleConsistencyReport check_scale_consistency(const WeightFamily& family, int n1, int n2, int r,
                                               std::optional<double> c1) {
    if (n2 < 1 || n1 % n2 != 0) throw std::domain_error("scale consistency: n2 must divide n1");
    int s = n1 / n2;
    WeightFunction fine = family(1);
    double target = c1 ? *c1 : exact_log_weight_expectation(fine, n1, r);
    MaxEntSolution fine_sol = solve_ma(fine, n1, r, target);
    double lambda = fine_sol.multipliers[0];

    ScaleConsistencyReport report;
    report.fine_multiplier = lambda;
    for (const auto& [z, p] : fine_sol.pmf) {
        Composition x(static_cast<std::size_t>(n2), 0);
        for (int j = 0; j < n2; ++j)
            for (int h = 0; h < s; ++h) x[j] += z[static_cast<std::size_t>(j * s + h)];
        report.pushforward[x] += p;
    }

    // Coarse family member with the same multiplier: q(x) prop. prod a_s(x_j)^{-lambda}.
    WeightFunction coarse = family(s);
    double z_total = 0.0;
    for (const auto& x : enumerate_support(n2, r)) {
        bool feasible = true;
        double log_w = 0.0;
        for (int xj : x) {
            if (coarse.at(xj) == 0) {
                feasible = false;
                break;
            }
            log_w += std::log(to_double(coarse.at(xj)));
        }
        if (!feasible) continue;
        double q = std::exp(-lambda * log_w);
        report.coarse_solution.emplace(x, q);
        z_total += q;
    }
    if (z_total == 0.0) throw std::domain_error("scale consistency: empty coarse support");
    for (auto& [x, q] : report.coarse_solution) q /= z_total;

    double gap = 0.0;
    for (const auto& x : enumerate_support(n2, r)) {
        auto pit = report.pushforward.find(x);
        auto qit = report.coarse_solution.find(x);
        double p = pit == report.pushforward.end() ? 0.0 : pit->second;
        double q = qit == report.coarse_solution.end() ? 0.0 : qit->second;
        gap = std::max(gap, std::abs(p - q));
    }
    report.gap = gap;
    report.consistent = gap <= 1e-8;
    return report;
}

}  // namespace occ
