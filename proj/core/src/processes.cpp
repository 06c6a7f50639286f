#include "occupancy/processes.hpp"

namespace occ {

void MixedGeometricSpec::validate() const {
    if (a.at(0) != 1) throw std::domain_error("a-mixed geometric process requires a(0) = 1");
    if (horizon < 1) throw std::domain_error("horizon must be >= 1");
    mix.validate();
}

std::map<Composition, Rational> joint_jump_law(const MixedGeometricSpec& spec, int t) {
    spec.validate();
    if (t < 0 || t > spec.horizon) throw std::domain_error("t must lie in 0..horizon");
    const int steps = t + 1;
    const int v_max = spec.a.x_max();

    // R_t(m) = sum_i w_i B(t_i)^-(t+1) t_i^m over the truncated jump range.
    std::vector<Rational> inv_norm;
    for (const auto& comp : spec.mix.components) {
        Rational b = 0;
        for (int v = 0; v <= v_max; ++v) b += spec.a.at(v) * pow_rational(comp.t, v);
        inv_norm.push_back(comp.weight / pow_rational(b, steps));
    }
    std::vector<Rational> r_t(static_cast<std::size_t>(steps * v_max) + 1, 0);
    for (std::size_t m = 0; m < r_t.size(); ++m)
        for (std::size_t i = 0; i < spec.mix.components.size(); ++i)
            r_t[m] += inv_norm[i] * pow_rational(spec.mix.components[i].t, static_cast<long>(m));

    std::map<Composition, Rational> law;
    Composition jumps(static_cast<std::size_t>(steps), 0);
    auto rec = [&](auto&& self, int h, int total, const Rational& weight_prod) -> void {
        if (h == steps) {
            if (weight_prod != 0) law.emplace(jumps, r_t[static_cast<std::size_t>(total)] * weight_prod);
            return;
        }
        for (int v = 0; v <= v_max; ++v) {
            jumps[static_cast<std::size_t>(h)] = v;
            self(self, h + 1, total + v, weight_prod * spec.a.at(v));
        }
    };
    rec(rec, 0, 0, 1);
    return law;
}

bool verify_uosp_law(const std::map<Composition, Rational>& law, const WeightFunction& a, int t,
                     int k) {
    Rational total = 0;
    std::map<Composition, Rational> conditional;
    for (const auto& [jumps, p] : law) {
        int sum = 0;
        for (int j : jumps) sum += j;
        if (sum != k || p == 0) continue;
        conditional.emplace(jumps, p);
        total += p;
    }
    if (total == 0) throw std::domain_error("conditioning event {N_t = k} has probability 0");
    for (auto& [jumps, p] : conditional) p /= total;

    OccupancyModel expected = realize(MaSpec{a, t + 1, k});
    if (conditional.size() != expected.pmf.size()) return false;
    for (const auto& [jumps, p] : conditional)
        if (expected.prob(jumps) != p) return false;
    return true;
}

bool verify_uosp(const MixedGeometricSpec& spec, int t, int k) {
    return verify_uosp_law(joint_jump_law(spec, t), spec.a, t, k);
}

}  // namespace occ
