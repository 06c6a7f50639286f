#pragma once

#include "occupancy/models.hpp"

namespace occ {

/// I_s: sum occupancy numbers over consecutive blocks of s cells.
OccupancyModel merge(const OccupancyModel& m, int s);

/// Spec-level merge: MaSpec(C^(a)_{s,.}, n/s, r).
MaSpec merge_spec(const MaSpec& spec, int s);

/// Merge under an explicit partition of the cells into equal-size blocks.
OccupancyModel merge_grouping(const OccupancyModel& m, const std::vector<std::vector<int>>& groups);

/// K_1: remove one particle uniformly at random.
/// pmf'(x') = sum_j pmf(x' + e_j) (x'_j + 1) / r.
OccupancyModel drop_particle(const OccupancyModel& m);

/// Condition (eq. star): (C_{n,r-1}/C_{n,r}) sum_h ((x'_h+1)/r)(a(x'_h+1)/a(x'_h)) = 1
/// for every x' in A_{n,r-1} carrying positive mass.
bool star_condition(const WeightFunction& a, int n, int r);

/// K^{N,R}_{n,r}: law of the first n cells given their particle count equals r.
OccupancyModel condition_on_prefix(const OccupancyModel& m, int n, int r);

/// (I_{s1} o I_{s2}) == I_{s1 s2} on an explicit model.
bool verify_merge_composition(const OccupancyModel& m, int s1, int s2);

/// (K_1 o I_s) == (I_s o K_1) on realize(spec); requires star for a and a'.
bool verify_drop_merge_commute(const MaSpec& spec, int s);

/// (K^{N,R}_{n,r} o I_s) == (I_s o K^{Ns,R}_{ns,r}) == realize(a', n, r).
bool verify_condition_merge_commute(const MaSpec& spec, int n, int r, int s);

}  // namespace occ
