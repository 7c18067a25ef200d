#pragma once

#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "xxzsim/analytics.hpp"
#include "xxzsim/fitting.hpp"
#include "xxzsim/sampling.hpp"

namespace xxzsim {

enum class RunMode { Entanglement, Speed, EchoFit };

const char* mode_name(RunMode mode);
RunMode parse_run_mode(const std::string& name);

/// Full assignment of every run parameter (angles in radians, J/d/t in
/// natural units, hbar = 1).
struct FixedParams {
    double theta0 = std::numbers::pi / 2.0;
    double theta1 = std::numbers::pi / 2.0;
    double phi0 = std::numbers::pi / 4.0;
    double phi1 = std::numbers::pi / 4.0;
    double J = 1.0;
    double d = 1.0;
    double t = 1.0;

    PrepAngles prep() const { return PrepAngles{theta0, theta1, phi0, phi1}; }
    ModelParams model() const { return ModelParams{J, d, t}; }
};

enum class SweepParam { Theta0, Theta1, Phi0, Phi1, J, D };

const char* sweep_param_name(SweepParam p);
SweepParam parse_sweep_param(const std::string& name);

struct SweepRange {
    double start = 0.0;
    double stop = 0.0;
    double step = 1.0;
};

/// start, start+step, ...; both endpoints are included when stop-start is an
/// integer multiple of step (within 1e-9 of a step).
std::vector<double> grid_points(const SweepRange& range);

struct SweepSpec {
    RunMode mode = RunMode::Entanglement;
    SweepParam vary1 = SweepParam::Theta0;
    SweepParam vary2 = SweepParam::Theta1;
    SweepRange range;
    FixedParams fixed;
    std::optional<std::uint64_t> shots;  // nullopt = exact evaluation only
    RngSeed seed = 0;
};

struct SweepRow {
    double p1 = 0.0;
    double p2 = 0.0;
    double exact = 0.0;
    std::optional<double> sampled;
    std::optional<double> std_error;
};

/// Evaluate the grid row-major over (p1, p2). Deterministic for a fixed
/// seed: point k of the grid samples with mix_seed(seed, k).
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

/// "p1,p2,exact,sampled,std_error" header; 12 significant digits; sampled
/// and std_error cells left empty in exact mode.
std::string sweep_csv(const std::vector<SweepRow>& rows);

/// Shot-sampled estimate of the entanglement of qubit 0 in the evolved
/// state from the three single-Pauli protocols; std_error propagated from
/// the three means by the delta method.
Estimate entanglement_sampled(const PrepAngles& a, const GateAngles& g, std::uint64_t shots,
                              RngSeed seed);

/// Shot-sampled v/gamma from the three pair-correlator protocols on the
/// prepared state; std_error propagated through <H^2>-<H>^2 by the delta
/// method (near zero variance it falls back to the sqrt scale).
Estimate speed_sampled(const PrepAngles& a, const ModelParams& p, std::uint64_t shots,
                       RngSeed seed);

// Default echo-decay grid for the curvature fit: alpha from -3pi/32 to
// 3pi/32 in steps of pi/128.
inline constexpr SweepRange kEchoAlphaGrid{-3.0 * std::numbers::pi / 32.0,
                                           3.0 * std::numbers::pi / 32.0,
                                           std::numbers::pi / 128.0};

/// Echo samples over an alpha grid at fixed anisotropy d (angles per point
/// are alpha, alpha, d*alpha). Exact when shots is nullopt.
std::vector<DecaySample> echo_decay_samples(const PrepAngles& a, double d,
                                            const SweepRange& alpha_grid,
                                            std::optional<std::uint64_t> shots, RngSeed seed);

struct EchoFitReport {
    FitResult fit;
    double v_over_gamma_fit = 0.0;
    double v_fit_std_error = 0.0;
    double v_over_gamma_exact = 0.0;
    double var_h_exact = 0.0;
    std::vector<DecaySample> samples;
};

EchoFitReport run_echo_fit(const FixedParams& params, const SweepRange& alpha_grid,
                           std::optional<std::uint64_t> shots, RngSeed seed);

struct SingleReport {
    RunMode mode = RunMode::Entanglement;
    FixedParams params;
    std::optional<std::uint64_t> shots;
    RngSeed seed = 0;
    double exact = 0.0;
    std::optional<double> sampled;
    std::optional<double> std_error;
};

/// One evaluation at fixed parameters; echo-fit uses the default alpha
/// grid and reports the recovered v/gamma as the sampled value.
SingleReport run_single(RunMode mode, const FixedParams& params,
                        std::optional<std::uint64_t> shots, RngSeed seed);

}  // namespace xxzsim
