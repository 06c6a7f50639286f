// Command-line surface for the occupancy-model library: model construction,
// transformations, exact verification suites, deconvolution and MaxEnt runs.
// All output is machine-readable JSON; exit codes: 0 pass/success, 1 fail,
// 2 usage error, 3 infeasibility.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>

#include "occupancy/json_io.hpp"
#include "occupancy/kernel.hpp"
#include "occupancy/maxent.hpp"
#include "occupancy/models.hpp"
#include "occupancy/processes.hpp"
#include "occupancy/structure.hpp"
#include "occupancy/transforms.hpp"

using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInfeasible = 3;

void emit(const json& j) { std::cout << j.dump() << "\n"; }

[[noreturn]] void die(int code, const std::string& kind, const std::string& message) {
    std::cerr << json{{"error", kind}, {"message", message}}.dump() << "\n";
    std::exit(code);
}

// Presets mb/be/fd/pc:s/mh:s truncated at x_max; anything else is a file path.
occ::WeightFunction load_weights(const std::string& spec, int x_max) {
    if (spec == "mb") return occ::mb_weights(x_max);
    if (spec == "be") return occ::be_weights(x_max);
    if (spec == "fd") return occ::fd_weights(x_max);
    if (spec.rfind("pc:", 0) == 0) return occ::pc_weights(std::stoi(spec.substr(3)), x_max);
    if (spec.rfind("mh:", 0) == 0) return occ::mh_weights(std::stoi(spec.substr(3)), x_max);
    std::ifstream in(spec);
    if (!in) die(kExitUsage, "usage", "cannot open weights file: " + spec);
    return occ::weights_from_json(json::parse(in));
}

occ::OccupancyModel load_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) die(kExitUsage, "usage", "cannot open model file: " + path);
    return occ::model_from_json(json::parse(in));
}

// First composition where the two pmfs differ, with both values.
std::optional<json> pmf_witness(const occ::OccupancyModel& lhs, const occ::OccupancyModel& rhs) {
    for (const auto& x : occ::enumerate_support(lhs.n, lhs.r)) {
        occ::Rational p = lhs.prob(x), q = rhs.prob(x);
        if (p != q)
            return json{{"x", x},
                        {"lhs", occ::format_rational(p)},
                        {"rhs", occ::format_rational(q)}};
    }
    return std::nullopt;
}

int report_check(const std::string& id, bool pass, const json& detail) {
    json out{{"check", id}, {"result", pass ? "pass" : "fail"}};
    if (!detail.is_null()) out["detail"] = detail;
    emit(out);
    return pass ? kExitPass : kExitFail;
}

int run_verify(const std::string& id, const std::string& weights, int n, int r, int s, int s2,
               int big_n, int big_r, int t, int k) {
    if (id == "closure") {
        occ::MaSpec fine{load_weights(weights, r), n * s, r};
        occ::OccupancyModel merged = occ::merge(occ::realize(fine), s);
        occ::OccupancyModel closed = occ::realize(occ::merge_spec(fine, s));
        auto witness = pmf_witness(merged, closed);
        return report_check(id, !witness,
                            witness ? *witness : occ::model_to_json(merged));
    }
    if (id == "composition") {
        occ::OccupancyModel m = occ::realize(occ::MaSpec{load_weights(weights, r), big_n, r});
        bool pass = occ::verify_merge_composition(m, s, s2);
        return report_check(id, pass, json{{"N", big_n}, {"s1", s}, {"s2", s2}});
    }
    if (id == "star") {
        bool pass = occ::star_condition(load_weights(weights, r), n, r);
        return report_check(id, pass, json{{"n", n}, {"r", r}});
    }
    if (id == "drop-commute") {
        occ::MaSpec fine{load_weights(weights, r), big_n, r};
        bool pass = occ::verify_drop_merge_commute(fine, s);
        return report_check(id, pass, json{{"N", big_n}, {"s", s}});
    }
    if (id == "cond-commute") {
        occ::MaSpec fine{load_weights(weights, big_r), big_n, big_r};
        bool pass = occ::verify_condition_merge_commute(fine, n, r, s);
        return report_check(id, pass, json{{"Ns", big_n}, {"R", big_r}, {"n", n}, {"r", r}, {"s", s}});
    }
    if (id == "lambda-independence") {
        occ::WeightFunction a = load_weights(weights, r);
        std::vector<occ::ThetaMixture> mixtures{
            occ::ThetaMixture::single(occ::Rational(1, 2)),
            occ::ThetaMixture{{{occ::Rational(1, 3), occ::Rational(1, 4)},
                               {occ::Rational(2, 3), occ::Rational(3, 4)}}},
            occ::ThetaMixture{{{occ::Rational(1, 5), occ::Rational(1, 3)},
                               {occ::Rational(1, 2), occ::Rational(1, 3)},
                               {occ::Rational(4, 5), occ::Rational(1, 3)}}}};
        occ::OccupancyModel expected = occ::realize(occ::MaSpec{a, n, r});
        for (const auto& mix : mixtures) {
            auto got = occ::exponential_family_conditional(a, mix, n, r);
            if (auto witness = pmf_witness(got, expected))
                return report_check(id, false, *witness);
        }
        return report_check(id, true, json{{"mixtures", mixtures.size()}});
    }
    if (id == "uosp") {
        occ::MixedGeometricSpec spec{occ::gauge_canonicalize(load_weights(weights, std::max(k, 1))),
                                     occ::ThetaMixture::single(occ::Rational(1, 2)),
                                     std::max(t, 1)};
        bool pass = occ::verify_uosp(spec, t, k);
        return report_check(id, pass, json{{"t", t}, {"k", k}});
    }
    if (id == "norm-identity") {
        occ::WeightFunction a = load_weights(weights, r);
        occ::Rational lhs = occ::norm_const(occ::convolution_power(a, s, r), n, r);
        occ::Rational rhs = occ::norm_const(a, n * s, r);
        return report_check(id, lhs == rhs,
                            json{{"lhs", occ::format_rational(lhs)},
                                 {"rhs", occ::format_rational(rhs)}});
    }
    die(kExitUsage, "usage", "unknown proposition id: " + id);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic toolkit for exchangeable occupancy models"};
    app.require_subcommand(1);

    // model build
    auto* model_cmd = app.add_subcommand("model", "Model construction");
    model_cmd->require_subcommand(1);
    auto* build = model_cmd->add_subcommand("build", "Build an explicit model pmf");
    std::string build_weights, build_dump;
    int build_n = 0, build_r = 0;
    build->add_option("--weights", build_weights)->required();
    build->add_option("--n", build_n)->required();
    build->add_option("--r", build_r)->required();
    build->add_option("--dump", build_dump);

    // transform merge|drop|condition
    auto* transform_cmd = app.add_subcommand("transform", "Transform an explicit model");
    transform_cmd->require_subcommand(1);
    std::string tf_model;
    int tf_s = 1, tf_prefix_n = 0, tf_prefix_r = 0;
    auto* tf_merge = transform_cmd->add_subcommand("merge", "Merge blocks of s cells");
    tf_merge->add_option("model", tf_model)->required();
    tf_merge->add_option("--s", tf_s)->required();
    auto* tf_drop = transform_cmd->add_subcommand("drop", "Drop one particle uniformly");
    tf_drop->add_option("model", tf_model)->required();
    auto* tf_cond = transform_cmd->add_subcommand("condition", "Condition on a prefix count");
    tf_cond->add_option("model", tf_model)->required();
    tf_cond->add_option("--prefix-n", tf_prefix_n)->required();
    tf_cond->add_option("--prefix-r", tf_prefix_r)->required();

    // verify <id>
    auto* verify = app.add_subcommand("verify", "Run an exact proposition check");
    std::string v_id, v_weights = "be";
    int v_n = 2, v_r = 2, v_s = 2, v_s2 = 2, v_big_n = 4, v_big_r = 2, v_t = 2, v_k = 2;
    verify->add_option("id", v_id)->required();
    verify->add_option("--weights", v_weights);
    verify->add_option("--n", v_n);
    verify->add_option("--r", v_r);
    verify->add_option("--s", v_s);
    verify->add_option("--s1", v_s);
    verify->add_option("--s2", v_s2);
    verify->add_option("--N", v_big_n);
    verify->add_option("--Ns", v_big_n);
    verify->add_option("--R", v_big_r);
    verify->add_option("--t", v_t);
    verify->add_option("--k", v_k);

    // deconvolve
    auto* deconv = app.add_subcommand("deconvolve", "Convolution-root analysis");
    std::string d_weights;
    int d_s = 2, d_max_s = 0;
    deconv->add_option("--weights", d_weights)->required();
    deconv->add_option("--s", d_s);
    deconv->add_option("--max-s", d_max_s);
    int d_x_max = 6;
    deconv->add_option("--x-max", d_x_max, "Truncation window for preset weights");

    // maxent solve|consistency
    auto* maxent_cmd = app.add_subcommand("maxent", "Maximum-entropy inference");
    maxent_cmd->require_subcommand(1);
    std::string mx_weights;
    int mx_n = 2, mx_r = 2, mx_n2 = 0;
    double mx_c = 0.0;
    bool mx_has_c = false;
    auto* mx_solve = maxent_cmd->add_subcommand("solve", "Solve the M^(a) MaxEnt problem");
    auto* mx_cons = maxent_cmd->add_subcommand("consistency", "Scale-consistency check");
    for (auto* cmd : {mx_solve, mx_cons}) {
        cmd->add_option("--weights", mx_weights)->required();
        cmd->add_option("--n", mx_n)->required();
        cmd->add_option("--r", mx_r)->required();
        cmd->add_option_function<double>("--c", [&](double c) {
            mx_c = c;
            mx_has_c = true;
        });
    }
    mx_cons->add_option("--n2", mx_n2)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << json{{"error", "usage"}, {"message", e.what()}}.dump() << "\n";
        return kExitUsage;
    }

    try {
        if (*build) {
            occ::OccupancyModel m =
                occ::realize(occ::MaSpec{load_weights(build_weights, build_r), build_n, build_r});
            json dump = occ::model_to_json(m);
            if (!build_dump.empty()) std::ofstream(build_dump) << dump.dump() << "\n";
            emit(dump);
            return kExitPass;
        }
        if (*tf_merge) {
            emit(occ::model_to_json(occ::merge(load_model(tf_model), tf_s)));
            return kExitPass;
        }
        if (*tf_drop) {
            emit(occ::model_to_json(occ::drop_particle(load_model(tf_model))));
            return kExitPass;
        }
        if (*tf_cond) {
            emit(occ::model_to_json(
                occ::condition_on_prefix(load_model(tf_model), tf_prefix_n, tf_prefix_r)));
            return kExitPass;
        }
        if (*verify)
            return run_verify(v_id, v_weights, v_n, v_r, v_s, v_s2, v_big_n, v_big_r, v_t, v_k);
        if (*deconv) {
            occ::WeightFunction a = load_weights(d_weights, d_x_max);
            if (d_max_s >= 2) {
                emit(occ::classification_to_json(occ::classify_germ(a, d_max_s), a.x_max()));
            } else {
                emit(occ::deconvolution_to_json(occ::deconvolve(a, d_s)));
            }
            return kExitPass;
        }
        if (*mx_solve) {
            occ::WeightFunction a = load_weights(mx_weights, mx_r);
            double c = mx_has_c ? mx_c : occ::exact_log_weight_expectation(a, mx_n, mx_r);
            emit(occ::maxent_to_json(occ::solve_ma(a, mx_n, mx_r, c)));
            return kExitPass;
        }
        if (*mx_cons) {
            occ::WeightFamily family = [&](int s) -> occ::WeightFunction {
                if (mx_weights == "mb" || mx_weights == "be" || mx_weights == "fd")
                    return load_weights(mx_weights, mx_r);  // classical: same law at every scale
                if (mx_weights.rfind("pc:", 0) == 0)
                    return occ::pc_weights(std::stoi(mx_weights.substr(3)) * s, mx_r);
                if (mx_weights.rfind("mh:", 0) == 0)
                    return occ::mh_weights(std::stoi(mx_weights.substr(3)) * s, mx_r);
                occ::WeightFunction base = load_weights(mx_weights, mx_r);
                return occ::convolution_power(base, s, mx_r);
            };
            occ::ScaleConsistencyReport report = occ::check_scale_consistency(
                family, mx_n, mx_n2, mx_r, mx_has_c ? std::optional<double>(mx_c) : std::nullopt);
            emit(occ::scale_consistency_to_json(report));
            return report.consistent ? kExitPass : kExitFail;
        }
    } catch (const occ::infeasible_target_error& e) {
        die(kExitInfeasible, "infeasible", e.what());
    } catch (const occ::enumeration_cap_error& e) {
        die(kExitInfeasible, "resource", e.what());
    } catch (const std::domain_error& e) {
        die(kExitInfeasible, "domain", e.what());
    } catch (const std::invalid_argument& e) {
        die(kExitUsage, "usage", e.what());
    } catch (const std::exception& e) {
        die(kExitFail, "internal", e.what());
    }
    return kExitUsage;
}
