#pragma once

#include <iosfwd>
#include <span>
#include <vector>

namespace xxzsim {

/// One echo-decay observation: squared survival probability s2 at rotation
/// angle alpha = 2 J t (hbar = 1), with its sampling standard error.
struct DecaySample {
    double alpha = 0.0;
    double s2 = 1.0;
    double std_error = 0.0;
};

/// Result of the one-parameter least-squares fit s2 = 1 - c * alpha^2.
///
/// The recovered energy variance is reported in both curvature conventions,
/// because the two abscissa readings (alpha versus J t) differ by a factor
/// of four: per alpha^2 the number is c itself, per (J t)^2 it is 4 c (in
/// units of J^2). Only the (J t)^2 reading is consistent with
/// s2 = 1 - t^2 <dH^2>.
struct FitResult {
    double c = 0.0;
    double rms_residual = 0.0;
    double varh_alpha_convention = 0.0;  // = c
    double varh_time_convention = 0.0;   // = 4 c, energy variance in units of J^2
};

/// Closed-form least squares for the model anchored at (alpha=0, s2=1):
/// c = sum a_i^2 (1 - s2_i) / sum a_i^4, optionally inverse-variance
/// weighted by the sample std_error.
FitResult fit_quadratic_decay(std::span<const DecaySample> samples,
                              bool inverse_variance_weighted = false);

/// v / gamma = |J| sqrt(varh_time_convention). Curvatures below
/// -negative_tolerance are a fit-quality error; small negatives clamp to 0.
double speed_from_fit(const FitResult& fit, double J, double negative_tolerance = 1e-9);

/// CSV with header "alpha,s2,std_error".
void write_samples_csv(std::ostream& os, std::span<const DecaySample> samples);
std::vector<DecaySample> read_samples_csv(std::istream& is);

}  // namespace xxzsim
