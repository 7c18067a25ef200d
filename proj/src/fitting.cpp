#include "xxzsim/fitting.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace xxzsim {

FitResult fit_quadratic_decay(std::span<const DecaySample> samples,
                              bool inverse_variance_weighted) {
    if (samples.size() < 2)
        throw std::invalid_argument("fit_quadratic_decay: need at least two samples");

    double numerator = 0.0;
    double denominator = 0.0;
    for (const DecaySample& s : samples) {
        if (!std::isfinite(s.alpha) || !std::isfinite(s.s2))
            throw std::invalid_argument("fit_quadratic_decay: non-finite sample");
        double w = 1.0;
        if (inverse_variance_weighted) {
            if (s.alpha == 0.0) continue;  // anchored point, carries no information
            if (s.std_error <= 0.0)
                throw std::invalid_argument(
                    "fit_quadratic_decay: weighted fit requires positive std_error");
            w = 1.0 / (s.std_error * s.std_error);
        }
        const double a2 = s.alpha * s.alpha;
        numerator += w * a2 * (1.0 - s.s2);
        denominator += w * a2 * a2;
    }
    if (denominator == 0.0)
        throw std::invalid_argument("fit_quadratic_decay: all alphas are zero, fit is degenerate");

    FitResult out;
    out.c = numerator / denominator;
    out.varh_alpha_convention = out.c;
    out.varh_time_convention = 4.0 * out.c;  // alpha^2 = 4 (J t)^2

    double rss = 0.0;
    for (const DecaySample& s : samples) {
        const double r = s.s2 - (1.0 - out.c * s.alpha * s.alpha);
        rss += r * r;
    }
    out.rms_residual = std::sqrt(rss / static_cast<double>(samples.size()));
    return out;
}

double speed_from_fit(const FitResult& fit, double J, double negative_tolerance) {
    double varh = fit.varh_time_convention;
    if (varh < -negative_tolerance)
        throw std::domain_error("speed_from_fit: fitted curvature is negative beyond tolerance");
    if (varh < 0.0) varh = 0.0;
    return std::abs(J) * std::sqrt(varh);
}

void write_samples_csv(std::ostream& os, std::span<const DecaySample> samples) {
    os << "alpha,s2,std_error\n";
    char buf[96];
    for (const DecaySample& s : samples) {
        std::snprintf(buf, sizeof(buf), "%.12g,%.12g,%.12g\n", s.alpha, s.s2, s.std_error);
        os << buf;
    }
}

std::vector<DecaySample> read_samples_csv(std::istream& is) {
    std::vector<DecaySample> out;
    std::string line;
    bool first = true;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (first) {
            first = false;
            if (line.rfind("alpha", 0) == 0) continue;  // header
        }
        std::istringstream ls(line);
        std::string field;
        DecaySample s;
        double* slots[3] = {&s.alpha, &s.s2, &s.std_error};
        for (int i = 0; i < 3; ++i) {
            if (!std::getline(ls, field, ','))
                throw std::invalid_argument("read_samples_csv: malformed line: " + line);
            *slots[i] = std::stod(field);
        }
        out.push_back(s);
    }
    return out;
}

}  // namespace xxzsim
