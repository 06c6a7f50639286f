#pragma once

#include "occupancy/models.hpp"

namespace occ {

/// Jump-amount law of a counting process built from i.i.d.-given-t tilted
/// variables; a(0) must equal 1.
struct MixedGeometricSpec {
    WeightFunction a;
    ThetaMixture mix;
    int horizon = 1;

    void validate() const;
};

/// Joint law of (J_0..J_t): p_t(j_0..j_t) = R_t(sum j_h) prod a(j_h), exact.
/// Keys run over all jump tuples with entries in 0..x_max.
std::map<Composition, Rational> joint_jump_law(const MixedGeometricSpec& spec, int t);

/// True iff the law of (J_0..J_t) given N_t = k equals realize(a, t+1, k).
bool verify_uosp(const MixedGeometricSpec& spec, int t, int k);

/// Same check against an explicit joint law (for corrupted-law tests).
bool verify_uosp_law(const std::map<Composition, Rational>& law, const WeightFunction& a, int t,
                     int k);

}  // namespace occ
