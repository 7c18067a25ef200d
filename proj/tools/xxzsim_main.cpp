#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "xxzsim/sweep.hpp"

using nlohmann::json;

namespace {

struct CliOptions {
    xxzsim::FixedParams params;
    std::uint64_t shots = 1024;  // 0 means exact evaluation, no sampling
    std::uint64_t seed = 1;
    std::string config_path;
    std::string out_path;
    std::string samples_out_path;
    std::string mode = "entanglement";
    std::vector<std::string> vary;
    double start = 0.0;
    double stop = 0.0;
    double step = 1.0;
};

struct OptionRefs {
    CLI::Option* theta0 = nullptr;
    CLI::Option* theta1 = nullptr;
    CLI::Option* phi0 = nullptr;
    CLI::Option* phi1 = nullptr;
    CLI::Option* J = nullptr;
    CLI::Option* d = nullptr;
    CLI::Option* t = nullptr;
    CLI::Option* shots = nullptr;
    CLI::Option* seed = nullptr;
    CLI::Option* out = nullptr;
    CLI::Option* mode = nullptr;
    CLI::Option* vary = nullptr;
    CLI::Option* start = nullptr;
    CLI::Option* stop = nullptr;
    CLI::Option* step = nullptr;
};

OptionRefs add_common_options(CLI::App* cmd, CliOptions& opt) {
    OptionRefs refs;
    refs.theta0 = cmd->add_option("--theta0", opt.params.theta0, "Initial-state angle theta0 [rad]");
    refs.theta1 = cmd->add_option("--theta1", opt.params.theta1, "Initial-state angle theta1 [rad]");
    refs.phi0 = cmd->add_option("--phi0", opt.params.phi0, "Initial-state phase phi0 [rad]");
    refs.phi1 = cmd->add_option("--phi1", opt.params.phi1, "Initial-state phase phi1 [rad]");
    refs.J = cmd->add_option("-J,--coupling", opt.params.J, "Coupling energy J");
    refs.d = cmd->add_option("-d,--anisotropy", opt.params.d, "Anisotropy d of the zz coupling");
    refs.t = cmd->add_option("-t,--time", opt.params.t, "Evolution time t");
    refs.shots = cmd->add_option("--shots", opt.shots, "Shots per circuit; 0 = exact, no sampling");
    refs.seed = cmd->add_option("--seed", opt.seed, "Base RNG seed");
    cmd->add_option("--config", opt.config_path, "JSON config file; flags take precedence");
    refs.out = cmd->add_option("--out", opt.out_path, "Output file (JSON summary, CSV for sweep)");
    return refs;
}

void apply_config_value(const json& cfg, const char* key, CLI::Option* opt, double& target) {
    if (opt != nullptr && opt->count() == 0 && cfg.contains(key)) target = cfg.at(key).get<double>();
}

void apply_config_value(const json& cfg, const char* key, CLI::Option* opt, std::uint64_t& target) {
    if (opt != nullptr && opt->count() == 0 && cfg.contains(key))
        target = cfg.at(key).get<std::uint64_t>();
}

void apply_config_value(const json& cfg, const char* key, CLI::Option* opt, std::string& target) {
    if (opt != nullptr && opt->count() == 0 && cfg.contains(key))
        target = cfg.at(key).get<std::string>();
}

/// Config file fills everything the command line left unset; the
/// XXZSIM_SEED environment variable supplies only the default seed.
void resolve_options(CliOptions& opt, const OptionRefs& refs) {
    bool seed_set = refs.seed != nullptr && refs.seed->count() > 0;
    if (!opt.config_path.empty()) {
        std::ifstream in(opt.config_path);
        if (!in) throw CLI::ValidationError("--config", "cannot open " + opt.config_path);
        json cfg = json::parse(in);
        apply_config_value(cfg, "theta0", refs.theta0, opt.params.theta0);
        apply_config_value(cfg, "theta1", refs.theta1, opt.params.theta1);
        apply_config_value(cfg, "phi0", refs.phi0, opt.params.phi0);
        apply_config_value(cfg, "phi1", refs.phi1, opt.params.phi1);
        apply_config_value(cfg, "J", refs.J, opt.params.J);
        apply_config_value(cfg, "d", refs.d, opt.params.d);
        apply_config_value(cfg, "t", refs.t, opt.params.t);
        apply_config_value(cfg, "shots", refs.shots, opt.shots);
        apply_config_value(cfg, "out", refs.out, opt.out_path);
        apply_config_value(cfg, "mode", refs.mode, opt.mode);
        apply_config_value(cfg, "start", refs.start, opt.start);
        apply_config_value(cfg, "stop", refs.stop, opt.stop);
        apply_config_value(cfg, "step", refs.step, opt.step);
        if (refs.vary != nullptr && refs.vary->count() == 0 && cfg.contains("vary"))
            opt.vary = cfg.at("vary").get<std::vector<std::string>>();
        if (!seed_set && cfg.contains("seed")) {
            opt.seed = cfg.at("seed").get<std::uint64_t>();
            seed_set = true;
        }
    }
    if (!seed_set) {
        if (const char* env = std::getenv("XXZSIM_SEED"); env != nullptr && *env != '\0')
            opt.seed = std::strtoull(env, nullptr, 10);
    }
}

std::optional<std::uint64_t> shots_of(const CliOptions& opt) {
    if (opt.shots == 0) return std::nullopt;
    return opt.shots;
}

json params_json(const xxzsim::FixedParams& p) {
    return json{{"theta0", p.theta0}, {"theta1", p.theta1}, {"phi0", p.phi0},
                {"phi1", p.phi1},     {"J", p.J},           {"d", p.d},
                {"t", p.t}};
}

void emit_summary(const json& summary, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << summary.dump(2) << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << summary.dump(2) << "\n";
    std::cout << "wrote " << out_path << "\n";
}

void print_report(const xxzsim::SingleReport& report) {
    std::printf("mode        : %s\n", xxzsim::mode_name(report.mode));
    const auto& p = report.params;
    std::printf("parameters  : theta0=%.10g theta1=%.10g phi0=%.10g phi1=%.10g J=%.10g d=%.10g t=%.10g\n",
                p.theta0, p.theta1, p.phi0, p.phi1, p.J, p.d, p.t);
    std::printf("exact       : %.12g\n", report.exact);
    if (report.sampled) {
        if (report.shots)
            std::printf("sampled     : %.12g  (%llu shots, seed %llu)\n", *report.sampled,
                        static_cast<unsigned long long>(*report.shots),
                        static_cast<unsigned long long>(report.seed));
        else
            std::printf("recovered   : %.12g  (from exact curve)\n", *report.sampled);
        const double err = report.std_error.value_or(0.0);
        std::printf("std_error   : %.12g\n", err);
        if (err > 0.0)
            std::printf("deviation   : %.3g std_errors\n",
                        std::abs(*report.sampled - report.exact) / err);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-spin XXZ toolkit: entanglement distance, evolution speed, echo fits"};
    app.require_subcommand(1);

    CliOptions entangle_opt, speed_opt, echo_opt, sweep_opt;

    CLI::App* entangle = app.add_subcommand("entangle", "Entanglement distance of qubit 0");
    OptionRefs entangle_refs = add_common_options(entangle, entangle_opt);

    CLI::App* speed = app.add_subcommand("speed", "Evolution speed v/gamma of the prepared state");
    OptionRefs speed_refs = add_common_options(speed, speed_opt);

    CLI::App* echofit = app.add_subcommand("echo-fit", "Recover the energy variance from echo decay");
    OptionRefs echo_refs = add_common_options(echofit, echo_opt);
    echofit->add_option("--samples-out", echo_opt.samples_out_path,
                        "Write the decay samples as CSV (alpha,s2,std_error)");

    CLI::App* sweep = app.add_subcommand("sweep", "Two-parameter grid sweep, CSV output");
    OptionRefs sweep_refs = add_common_options(sweep, sweep_opt);
    sweep_refs.mode = sweep->add_option("--mode", sweep_opt.mode,
                                        "entanglement | speed | echo-fit")
                          ->check(CLI::IsMember({"entanglement", "speed", "echo-fit"}));
    sweep_refs.vary =
        sweep->add_option("--vary", sweep_opt.vary,
                          "Two of: theta0 theta1 phi0 phi1 J d")
            ->expected(2);
    sweep_refs.start = sweep->add_option("--start", sweep_opt.start, "Grid start");
    sweep_refs.stop = sweep->add_option("--stop", sweep_opt.stop, "Grid stop (inclusive)");
    sweep_refs.step = sweep->add_option("--step", sweep_opt.step, "Grid step (> 0)");

    try {
        app.parse(argc, argv);

        if (*entangle || *speed || *echofit) {
            CliOptions& opt = *entangle ? entangle_opt : (*speed ? speed_opt : echo_opt);
            const OptionRefs& refs =
                *entangle ? entangle_refs : (*speed ? speed_refs : echo_refs);
            const xxzsim::RunMode mode = *entangle ? xxzsim::RunMode::Entanglement
                                        : *speed   ? xxzsim::RunMode::Speed
                                                   : xxzsim::RunMode::EchoFit;
            resolve_options(opt, refs);

            xxzsim::SingleReport report;
            json summary;
            if (mode == xxzsim::RunMode::EchoFit) {
                const xxzsim::EchoFitReport echo = xxzsim::run_echo_fit(
                    opt.params, xxzsim::kEchoAlphaGrid, shots_of(opt), opt.seed);
                report.mode = mode;
                report.params = opt.params;
                report.shots = shots_of(opt);
                report.seed = opt.seed;
                report.exact = echo.v_over_gamma_exact;
                report.sampled = echo.v_over_gamma_fit;
                report.std_error = echo.v_fit_std_error;
                print_report(report);
                std::printf("fit         : s2 = 1 - c*alpha^2 with c = %.12g (rms residual %.3g)\n",
                            echo.fit.c, echo.fit.rms_residual);
                std::printf("varh/J^2    : %.12g per alpha^2 | %.12g per (J t)^2\n",
                            echo.fit.varh_alpha_convention, echo.fit.varh_time_convention);
                std::printf("v/gamma fit : %.12g   exact: %.12g\n", echo.v_over_gamma_fit,
                            echo.v_over_gamma_exact);
                summary["fit"] = json{{"c", echo.fit.c},
                                      {"rms_residual", echo.fit.rms_residual},
                                      {"varh_per_alpha2", echo.fit.varh_alpha_convention},
                                      {"varh_per_jt2", echo.fit.varh_time_convention}};
                if (!opt.samples_out_path.empty()) {
                    std::ofstream samples_out(opt.samples_out_path);
                    if (!samples_out)
                        throw std::runtime_error("cannot write " + opt.samples_out_path);
                    xxzsim::write_samples_csv(samples_out, echo.samples);
                    std::printf("samples     : wrote %s\n", opt.samples_out_path.c_str());
                }
            } else {
                report = xxzsim::run_single(mode, opt.params, shots_of(opt), opt.seed);
                print_report(report);
            }

            summary["mode"] = xxzsim::mode_name(report.mode);
            summary["params"] = params_json(report.params);
            summary["exact"] = report.exact;
            summary["seed"] = report.seed;
            if (report.shots) summary["shots"] = *report.shots;
            if (report.sampled) summary["sampled"] = *report.sampled;
            if (report.std_error) summary["std_error"] = *report.std_error;

            emit_summary(summary, opt.out_path);
            return 0;
        }

        // sweep
        resolve_options(sweep_opt, sweep_refs);
        if (sweep_opt.vary.size() != 2)
            throw CLI::ValidationError("--vary", "exactly two parameter names are required");
        xxzsim::SweepSpec spec;
        spec.mode = xxzsim::parse_run_mode(sweep_opt.mode);
        spec.vary1 = xxzsim::parse_sweep_param(sweep_opt.vary[0]);
        spec.vary2 = xxzsim::parse_sweep_param(sweep_opt.vary[1]);
        spec.range = xxzsim::SweepRange{sweep_opt.start, sweep_opt.stop, sweep_opt.step};
        spec.fixed = sweep_opt.params;
        spec.shots = shots_of(sweep_opt);
        spec.seed = sweep_opt.seed;

        const std::string csv = xxzsim::sweep_csv(xxzsim::run_sweep(spec));
        if (sweep_opt.out_path.empty()) {
            std::cout << csv;
        } else {
            std::ofstream out(sweep_opt.out_path, std::ios::binary);
            if (!out) throw std::runtime_error("cannot write " + sweep_opt.out_path);
            out << csv;
            std::cout << "wrote " << sweep_opt.out_path << "\n";
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const xxzsim::internal_consistency_error& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
