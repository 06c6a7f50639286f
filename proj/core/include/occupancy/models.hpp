#pragma once

#include <map>
#include <vector>

#include "occupancy/kernel.hpp"

namespace occ {

/// The parametric triple (a, n, r) naming an M^(a)_{n,r} model.
struct MaSpec {
    WeightFunction a;
    int n = 1;
    int r = 0;
};

/// An explicit exact pmf on A_{n,r}; only positive-probability points are stored.
struct OccupancyModel {
    int n = 1;
    int r = 0;
    std::map<Composition, Rational> pmf;

    Rational prob(const Composition& x) const {
        auto it = pmf.find(x);
        return it == pmf.end() ? Rational(0) : it->second;
    }
    Rational total_mass() const;
};

enum class Classical { MB, BE, FD };

/// Finite mixture over the tilt parameter t = e^{-theta}, t in (0,1).
struct ThetaMixture {
    struct Component {
        Rational t;
        Rational weight;
    };
    std::vector<Component> components;

    static ThetaMixture single(const Rational& t) { return ThetaMixture{{{t, 1}}}; }
    void validate() const;
};

/// pmf(x) = prod_j a(x_j) / C^(a)_{n,r} on A_{n,r}.
OccupancyModel realize(const MaSpec& spec);

/// MB/BE/FD weight tables truncated at x_max = r.
MaSpec classical(Classical kind, int n, int r);

MaSpec pseudo_contagious(int n, int r, int s);   // a(x) = binom(s+x-1, x)
MaSpec multi_hypergeometric(int n, int r, int s);  // a(x) = binom(s, x)

/// Conditional law of n i.i.d.-given-t exponential-family variables given their
/// sum equals r; equal to realize(MaSpec(a,n,r)) for every mixture.
OccupancyModel exponential_family_conditional(const WeightFunction& a, const ThetaMixture& mix,
                                              int n, int r);

/// Permutation invariance, checked by grouping on sorted representatives.
bool is_exchangeable(const OccupancyModel& m);

/// C^(a)_{n,r} * t^r / (sum_v a(v) t^v)^n == P{S_n = r} under the tilt t.
bool kappa_identity_check(const WeightFunction& a, int n, int r, const Rational& t);

}  // namespace occ
