#include "occupancy/json_io.hpp"

#include <cstdio>
#include <nlohmann/json.hpp>

namespace occ {

using nlohmann::json;

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

json weights_to_json(const WeightFunction& a) {
    json values = json::array();
    for (const auto& v : a.values()) values.push_back(format_rational(v));
    return json{{"x_max", a.x_max()}, {"values", values}};
}

WeightFunction weights_from_json(const json& j) {
    std::vector<Rational> values;
    for (const auto& v : j.at("values")) values.push_back(parse_rational(v.get<std::string>()));
    if (j.contains("x_max") && j.at("x_max").get<int>() != static_cast<int>(values.size()) - 1)
        throw std::invalid_argument("weight file: x_max does not match values length");
    return WeightFunction(std::move(values));
}

json model_to_json(const OccupancyModel& m) {
    json pmf = json::array();
    for (const auto& [x, p] : m.pmf)
        pmf.push_back(json{{"x", x}, {"p", format_rational(p)}});
    return json{{"n", m.n}, {"r", m.r}, {"pmf", pmf}};
}

OccupancyModel model_from_json(const json& j) {
    OccupancyModel m{j.at("n").get<int>(), j.at("r").get<int>(), {}};
    for (const auto& entry : j.at("pmf")) {
        Composition x = entry.at("x").get<Composition>();
        if (static_cast<int>(x.size()) != m.n)
            throw std::invalid_argument("model file: composition length does not match n");
        m.pmf.emplace(std::move(x), parse_rational(entry.at("p").get<std::string>()));
    }
    return m;
}

json deconvolution_to_json(const DeconvolutionResult& r) {
    json out{{"status", r.status == DeconvStatus::decomposable ? "decomposable" : "indecomposable"},
             {"window", r.window}};
    if (r.factor) out["factor"] = weights_to_json(*r.factor);
    if (r.certificate)
        out["certificate"] =
            json{{"x", r.certificate->x}, {"value", format_rational(r.certificate->value)}};
    return out;
}

json classification_to_json(const GermClassification& c, int window) {
    json out{{"status", c.is_germ ? "germ" : "merged"}, {"window", window}};
    if (!c.is_germ) {
        out["s"] = c.s;
        if (c.factor) out["factor"] = weights_to_json(*c.factor);
    }
    return out;
}

json maxent_to_json(const MaxEntSolution& s) {
    json multipliers = json::array();
    for (double l : s.multipliers) multipliers.push_back(format_double(l));
    json residuals = json::array();
    for (double r : s.residuals) residuals.push_back(format_double(r));
    json pmf = json::array();
    for (const auto& [x, p] : s.pmf) pmf.push_back(json{{"x", x}, {"p", format_double(p)}});
    return json{{"multipliers", multipliers},
                {"residuals", residuals},
                {"dual_value", format_double(s.dual_value)},
                {"pmf", pmf}};
}

json scale_consistency_to_json(const ScaleConsistencyReport& r) {
    auto pmf_json = [](const std::map<Composition, double>& pmf) {
        json out = json::array();
        for (const auto& [x, p] : pmf) out.push_back(json{{"x", x}, {"p", format_double(p)}});
        return out;
    };
    return json{{"consistent", r.consistent},
                {"gap", format_double(r.gap)},
                {"fine_multiplier", format_double(r.fine_multiplier)},
                {"pushforward", pmf_json(r.pushforward)},
                {"coarse_solution", pmf_json(r.coarse_solution)}};
}

}  // namespace occ
