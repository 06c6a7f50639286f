#pragma once

#include <functional>
#include <map>
#include <optional>

#include "occupancy/models.hpp"

namespace occ {

/// Target outside the achievable moment range: no MaxEnt solution exists.
struct infeasible_target_error : std::domain_error {
    using std::domain_error::domain_error;
};

struct solver_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Linear-expectation constraints E[f_k] = c_k over A_{n,r}.
struct MaxEntProblem {
    int n = 1;
    int r = 0;
    std::vector<std::function<double(const Composition&)>> constraint_functions;
    std::vector<double> targets;
    /// Points excluded from the support (used for zero-weight handling).
    std::function<bool(const Composition&)> support_filter;
};

struct MaxEntSolution {
    std::vector<double> multipliers;
    std::map<Composition, double> pmf;
    double dual_value = 0.0;
    std::vector<double> residuals;
};

/// Gibbs solution p*(x) proportional to exp(-sum_k lambda_k f_k(x)); multipliers
/// from the convex dual. Single constraint: safeguarded bisection on the
/// monotone map lambda -> E_lambda[f]. Several constraints: damped Newton with
/// the covariance matrix as Hessian.
MaxEntSolution solve_gibbs(const MaxEntProblem& p, double tol = 1e-12);

/// M^(a) specialization: single constraint f(x) = sum_j log a(x_j), support
/// restricted to prod_j a(x_j) > 0. With c = E_exact[f] the solution is
/// realize(a, n, r) and the multiplier is -1.
MaxEntSolution solve_ma(const WeightFunction& a, int n, int r, double c, double tol = 1e-12);

/// E[sum_j log a(x_j)] under realize(a, n, r); the default MaxEnt target.
double exact_log_weight_expectation(const WeightFunction& a, int n, int r);

/// A weight family indexed by the merge scale factor s (s = 1 is the base).
using WeightFamily = std::function<WeightFunction(int s)>;

struct ScaleConsistencyReport {
    bool consistent = false;
    double gap = 0.0;  // sup-norm distance pushforward vs coarse solution
    double fine_multiplier = 0.0;
    std::map<Composition, double> pushforward;
    std::map<Composition, double> coarse_solution;
};

/// Solve MaxEnt at scale n1 with family(1), push the solution forward through
/// merging by s = n1/n2, and compare with the family's coarse-scale Gibbs
/// member (family(s) raised to the same multiplier) at scale n2.
ScaleConsistencyReport check_scale_consistency(const WeightFamily& family, int n1, int n2, int r,
                                               std::optional<double> c1 = std::nullopt);

}  // namespace occ
