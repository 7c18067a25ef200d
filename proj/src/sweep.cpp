#include "xxzsim/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace xxzsim {

const char* mode_name(RunMode mode) {
    switch (mode) {
        case RunMode::Entanglement: return "entanglement";
        case RunMode::Speed: return "speed";
        case RunMode::EchoFit: return "echo-fit";
    }
    return "?";
}

RunMode parse_run_mode(const std::string& name) {
    if (name == "entanglement") return RunMode::Entanglement;
    if (name == "speed") return RunMode::Speed;
    if (name == "echo-fit") return RunMode::EchoFit;
    throw std::invalid_argument("unknown mode: " + name);
}

const char* sweep_param_name(SweepParam p) {
    switch (p) {
        case SweepParam::Theta0: return "theta0";
        case SweepParam::Theta1: return "theta1";
        case SweepParam::Phi0: return "phi0";
        case SweepParam::Phi1: return "phi1";
        case SweepParam::J: return "J";
        case SweepParam::D: return "d";
    }
    return "?";
}

SweepParam parse_sweep_param(const std::string& name) {
    if (name == "theta0") return SweepParam::Theta0;
    if (name == "theta1") return SweepParam::Theta1;
    if (name == "phi0") return SweepParam::Phi0;
    if (name == "phi1") return SweepParam::Phi1;
    if (name == "J") return SweepParam::J;
    if (name == "d") return SweepParam::D;
    throw std::invalid_argument("unknown sweep parameter: " + name);
}

std::vector<double> grid_points(const SweepRange& range) {
    if (!(range.step > 0.0)) throw std::invalid_argument("grid_points: step must be positive");
    const double span = range.stop - range.start;
    if (span < 0.0) throw std::invalid_argument("grid_points: empty grid (stop < start)");
    const auto count = static_cast<std::size_t>(std::floor(span / range.step + 1e-9)) + 1;
    std::vector<double> points(count);
    for (std::size_t i = 0; i < count; ++i)
        points[i] = range.start + static_cast<double>(i) * range.step;
    return points;
}

namespace {

void assign(FixedParams& params, SweepParam which, double value) {
    switch (which) {
        case SweepParam::Theta0: params.theta0 = value; break;
        case SweepParam::Theta1: params.theta1 = value; break;
        case SweepParam::Phi0: params.phi0 = value; break;
        case SweepParam::Phi1: params.phi1 = value; break;
        case SweepParam::J: params.J = value; break;
        case SweepParam::D: params.d = value; break;
    }
}

Estimate speed_estimate_from_correlators(const Estimate& xx, const Estimate& yy,
                                         const Estimate& zz, double J, double d) {
    const double J2 = J * J;
    const double h = xx.value + yy.value + d * zz.value;
    const double var_h =
        J2 * (2.0 + d * d - 2.0 * zz.value - 2.0 * d * (xx.value + yy.value) - h * h);

    const double dx = J2 * (-2.0 * d - 2.0 * h);
    const double dy = dx;
    const double dz = J2 * (-2.0 - 2.0 * d * h);
    const double sigma_varh =
        std::sqrt(dx * dx * xx.std_error * xx.std_error + dy * dy * yy.std_error * yy.std_error +
                  dz * dz * zz.std_error * zz.std_error);

    Estimate out;
    out.shots = xx.shots;
    out.value = std::sqrt(std::max(0.0, var_h));
    // Delta method is valid away from zero variance; near zero the sqrt
    // fluctuation scale is sqrt(sigma_varh) instead.
    out.std_error = (var_h >= sigma_varh && out.value > 0.0) ? sigma_varh / (2.0 * out.value)
                                                             : std::sqrt(sigma_varh);
    return out;
}

}  // namespace

Estimate entanglement_sampled(const PrepAngles& a, const GateAngles& g, std::uint64_t shots,
                              RngSeed seed) {
    const Axis axes[3] = {Axis::X, Axis::Y, Axis::Z};
    double e = 1.0;
    double var = 0.0;
    for (int k = 0; k < 3; ++k) {
        const ShotCounts counts =
            run_shots(pauli_measure_circuit(a, g, 0, axes[k]), shots, mix_seed(seed, k));
        const Estimate m = mean_pm1(counts, 0);
        e -= m.value * m.value;
        const double dm = 2.0 * m.value * m.std_error;
        var += dm * dm;
    }
    Estimate out;
    out.shots = shots;
    out.value = e;
    out.std_error = std::sqrt(var);
    return out;
}

Estimate speed_sampled(const PrepAngles& a, const ModelParams& p, std::uint64_t shots,
                       RngSeed seed) {
    const Axis axes[3] = {Axis::X, Axis::Y, Axis::Z};
    Estimate corr[3];
    for (int k = 0; k < 3; ++k) {
        const ShotCounts counts =
            run_shots(correlator_circuit(a, axes[k]), shots, mix_seed(seed, k));
        corr[k] = parity(counts);
    }
    return speed_estimate_from_correlators(corr[0], corr[1], corr[2], p.J, p.d);
}

std::vector<DecaySample> echo_decay_samples(const PrepAngles& a, double d,
                                            const SweepRange& alpha_grid,
                                            std::optional<std::uint64_t> shots, RngSeed seed) {
    const std::vector<double> alphas = grid_points(alpha_grid);
    std::vector<DecaySample> samples;
    samples.reserve(alphas.size());
    for (std::size_t j = 0; j < alphas.size(); ++j) {
        const double alpha = alphas[j];
        const GateAngles g{alpha, alpha, d * alpha};
        DecaySample s;
        s.alpha = alpha;
        if (shots) {
            const Estimate p = prob00(run_shots(echo_circuit(a, g), *shots, mix_seed(seed, j)));
            s.s2 = p.value;
            s.std_error = p.std_error;
        } else {
            s.s2 = echo_exact(a, g);
            s.std_error = 0.0;
        }
        samples.push_back(s);
    }
    return samples;
}

EchoFitReport run_echo_fit(const FixedParams& params, const SweepRange& alpha_grid,
                           std::optional<std::uint64_t> shots, RngSeed seed) {
    EchoFitReport report;
    report.samples = echo_decay_samples(params.prep(), params.d, alpha_grid, shots, seed);
    report.fit = fit_quadratic_decay(report.samples);

    const SpeedResult exact = variance_H(params.prep(), params.model());
    report.var_h_exact = exact.var_h;
    report.v_over_gamma_exact = exact.v_over_gamma;

    const double w = report.fit.varh_time_convention;
    report.v_over_gamma_fit = std::abs(params.J) * std::sqrt(std::max(0.0, w));

    // Least-squares propagation of the per-sample errors into c, then into v.
    double denom = 0.0;
    double noise = 0.0;
    for (const DecaySample& s : report.samples) {
        const double a2 = s.alpha * s.alpha;
        denom += a2 * a2;
        noise += a2 * a2 * s.std_error * s.std_error;
    }
    if (denom > 0.0) {
        const double sigma_c = std::sqrt(noise) / denom;
        const double sigma_w = 4.0 * sigma_c;
        report.v_fit_std_error = (w >= sigma_w && report.v_over_gamma_fit > 0.0)
                                     ? std::abs(params.J) * std::abs(params.J) * sigma_w /
                                           (2.0 * report.v_over_gamma_fit)
                                     : std::abs(params.J) * std::sqrt(sigma_w);
    }
    return report;
}

SingleReport run_single(RunMode mode, const FixedParams& params,
                        std::optional<std::uint64_t> shots, RngSeed seed) {
    SingleReport report;
    report.mode = mode;
    report.params = params;
    report.shots = shots;
    report.seed = seed;

    const GateAngles g = angles_from_model(params.model());
    switch (mode) {
        case RunMode::Entanglement: {
            report.exact = entanglement_exact(params.prep(), g, 0).E;
            if (shots) {
                const Estimate e = entanglement_sampled(params.prep(), g, *shots, seed);
                report.sampled = e.value;
                report.std_error = e.std_error;
            }
            break;
        }
        case RunMode::Speed: {
            report.exact = variance_H(params.prep(), params.model()).v_over_gamma;
            if (shots) {
                const Estimate v = speed_sampled(params.prep(), params.model(), *shots, seed);
                report.sampled = v.value;
                report.std_error = v.std_error;
            }
            break;
        }
        case RunMode::EchoFit: {
            const EchoFitReport echo = run_echo_fit(params, kEchoAlphaGrid, shots, seed);
            report.exact = echo.v_over_gamma_exact;
            report.sampled = echo.v_over_gamma_fit;
            report.std_error = echo.v_fit_std_error;
            break;
        }
    }
    return report;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
    if (spec.vary1 == spec.vary2)
        throw std::invalid_argument("run_sweep: the two varied parameters must differ");
    const std::vector<double> axis1 = grid_points(spec.range);
    const std::vector<double> axis2 = grid_points(spec.range);

    std::vector<SweepRow> rows;
    rows.reserve(axis1.size() * axis2.size());
    std::uint64_t point_index = 0;
    for (double p1 : axis1) {
        for (double p2 : axis2) {
            FixedParams params = spec.fixed;
            assign(params, spec.vary1, p1);
            assign(params, spec.vary2, p2);
            const RngSeed point_seed = mix_seed(spec.seed, point_index++);

            SweepRow row;
            row.p1 = p1;
            row.p2 = p2;
            const GateAngles g = angles_from_model(params.model());
            switch (spec.mode) {
                case RunMode::Entanglement: {
                    row.exact = entanglement_exact(params.prep(), g, 0).E;
                    if (spec.shots) {
                        const Estimate e =
                            entanglement_sampled(params.prep(), g, *spec.shots, point_seed);
                        row.sampled = e.value;
                        row.std_error = e.std_error;
                    }
                    break;
                }
                case RunMode::Speed: {
                    row.exact = variance_H(params.prep(), params.model()).v_over_gamma;
                    if (spec.shots) {
                        const Estimate v =
                            speed_sampled(params.prep(), params.model(), *spec.shots, point_seed);
                        row.sampled = v.value;
                        row.std_error = v.std_error;
                    }
                    break;
                }
                case RunMode::EchoFit: {
                    row.exact = variance_H(params.prep(), params.model()).v_over_gamma;
                    if (spec.shots) {
                        const EchoFitReport echo =
                            run_echo_fit(params, kEchoAlphaGrid, spec.shots, point_seed);
                        row.sampled = echo.v_over_gamma_fit;
                        row.std_error = echo.v_fit_std_error;
                    }
                    break;
                }
            }
            rows.push_back(row);
        }
    }
    return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::string out = "p1,p2,exact,sampled,std_error\n";
    char buf[160];
    for (const SweepRow& row : rows) {
        if (row.sampled) {
            std::snprintf(buf, sizeof(buf), "%.12g,%.12g,%.12g,%.12g,%.12g\n", row.p1, row.p2,
                          row.exact, *row.sampled, row.std_error.value_or(0.0));
        } else {
            std::snprintf(buf, sizeof(buf), "%.12g,%.12g,%.12g,,\n", row.p1, row.p2, row.exact);
        }
        out += buf;
    }
    return out;
}

}  // namespace xxzsim
