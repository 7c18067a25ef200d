#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "test_util.hpp"
#include "xxzsim/fitting.hpp"
#include "xxzsim/sweep.hpp"

using namespace xxzsim;

namespace {
constexpr double kPi = std::numbers::pi;

std::vector<DecaySample> echo_grid_samples(double curvature) {
    std::vector<DecaySample> samples;
    for (int k = -12; k <= 12; ++k) {
        const double alpha = static_cast<double>(k) * kPi / 128.0;
        samples.push_back({alpha, 1.0 - curvature * alpha * alpha, 0.0});
    }
    return samples;
}

double gaussian(TestRng& rng) {
    const double u1 = 1.0 - rng.rng.next_unit();
    const double u2 = rng.rng.next_unit();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
}
}  // namespace

TEST_CASE("fit recovers an exact quadratic and a flat curve") {
    const FitResult exact = fit_quadratic_decay(echo_grid_samples(0.25));
    CHECK(std::abs(exact.c - 0.25) < 1e-12);
    CHECK(exact.rms_residual < 1e-12);
    CHECK(std::abs(exact.varh_alpha_convention - 0.25) < 1e-12);
    CHECK(std::abs(exact.varh_time_convention - 1.0) < 1e-12);

    const FitResult flat = fit_quadratic_decay(echo_grid_samples(0.0));
    CHECK(flat.c == 0.0);
}

TEST_CASE("fit input validation") {
    CHECK_THROWS_AS(fit_quadratic_decay(std::vector<DecaySample>{{0.1, 0.9, 0.0}}),
                    std::invalid_argument);
    const std::vector<DecaySample> zeros{{0.0, 1.0, 0.0}, {0.0, 1.0, 0.0}};
    CHECK_THROWS_AS(fit_quadratic_decay(zeros), std::invalid_argument);
    const std::vector<DecaySample> no_sigma{{0.1, 0.99, 0.0}, {0.2, 0.96, 0.0}};
    CHECK_THROWS_AS(fit_quadratic_decay(no_sigma, true), std::invalid_argument);
}

TEST_CASE("fit is even in alpha") {
    TestRng rng(71);
    std::vector<DecaySample> samples;
    for (int i = 0; i < 15; ++i)
        samples.push_back({rng.uniform(-0.4, 0.4), rng.uniform(0.8, 1.0), 0.01});
    const double c_fwd = fit_quadratic_decay(samples).c;
    for (DecaySample& s : samples) s.alpha = -s.alpha;
    CHECK(fit_quadratic_decay(samples).c == c_fwd);
}

TEST_CASE("noise-free echo fit recovers the energy variance within 2%") {
    const FixedParams bench;  // theta=pi/2, phi=pi/4 defaults
    FixedParams params = bench;
    params.d = 2.0;
    const std::vector<DecaySample> samples =
        echo_decay_samples(params.prep(), params.d, kEchoAlphaGrid, std::nullopt, 0);
    const FitResult fit = fit_quadratic_decay(samples);

    const double var_h = variance_H(params.prep(), params.model()).var_h;  // = J^2 = 1
    CHECK(std::abs(fit.varh_time_convention - var_h) / var_h < 0.02);
    // Residual is pure quartic truncation, far below the sampling scale.
    CHECK(fit.rms_residual < 1e-3);
}

TEST_CASE("weighted fit matches unweighted on homoscedastic samples") {
    std::vector<DecaySample> samples = echo_grid_samples(0.25);
    for (DecaySample& s : samples) s.std_error = 0.01;
    const double unweighted = fit_quadratic_decay(samples, false).c;
    const double weighted = fit_quadratic_decay(samples, true).c;
    CHECK(std::abs(weighted - unweighted) < 1e-12);
}

TEST_CASE("shot-scale noise moves the curvature only modestly") {
    // Binomial noise at 1024 shots gives the fitted c a standard deviation
    // of about 0.019 on this grid (c = 0.25), so |dc| < 10% of c is a
    // ~1.3 sigma event (~80% of trials) and |dc| < 20% a ~2.6 sigma one.
    const PrepAngles bench{kPi / 2.0, kPi / 2.0, kPi / 4.0, kPi / 4.0};
    std::vector<DecaySample> exact =
        echo_decay_samples(bench, 2.0, kEchoAlphaGrid, std::nullopt, 0);
    const double c_exact = fit_quadratic_decay(exact).c;

    TestRng rng(72);
    int within10 = 0;
    int within20 = 0;
    const int trials = 100;
    for (int trial = 0; trial < trials; ++trial) {
        std::vector<DecaySample> noisy = exact;
        for (DecaySample& s : noisy) {
            const double sigma = std::sqrt(std::max(0.0, s.s2 * (1.0 - s.s2)) / 1024.0);
            s.s2 += sigma * gaussian(rng);
            s.std_error = sigma;
        }
        const double c = fit_quadratic_decay(noisy).c;
        const double rel = std::abs(c - c_exact) / c_exact;
        if (rel < 0.10) ++within10;
        if (rel < 0.20) ++within20;
    }
    CHECK(within20 >= 95);
    CHECK(within10 >= 70);
}

TEST_CASE("speed_from_fit conventions") {
    FitResult fit;
    fit.c = 0.25;
    fit.varh_alpha_convention = 0.25;
    fit.varh_time_convention = 1.0;
    CHECK(speed_from_fit(fit, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(speed_from_fit(fit, -2.0) == doctest::Approx(2.0).epsilon(1e-15));

    fit.varh_time_convention = 0.0;
    CHECK(speed_from_fit(fit, 3.0) == 0.0);

    // A 0.96 J^2 variance reads back as sqrt(0.96) ~ 0.98 |J|.
    fit.varh_time_convention = 0.96;
    CHECK(std::abs(speed_from_fit(fit, 1.0) - std::sqrt(0.96)) < 1e-15);
    CHECK(std::abs(speed_from_fit(fit, 1.0) - 0.98) < 0.0021);

    fit.varh_time_convention = -1e-12;
    CHECK(speed_from_fit(fit, 1.0) == 0.0);
    fit.varh_time_convention = -0.5;
    CHECK_THROWS_AS(speed_from_fit(fit, 1.0), std::domain_error);
}

TEST_CASE("decay samples round-trip through CSV") {
    const std::vector<DecaySample> samples{
        {-0.294524311274, 0.978, 0.00453}, {0.0, 1.0, 0.0}, {0.1227184630309, 0.9961, 0.00195}};
    std::ostringstream os;
    write_samples_csv(os, samples);
    CHECK(os.str().rfind("alpha,s2,std_error\n", 0) == 0);

    std::istringstream is(os.str());
    const std::vector<DecaySample> back = read_samples_csv(is);
    REQUIRE(back.size() == samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) {
        CHECK(std::abs(back[i].alpha - samples[i].alpha) < 1e-9);
        CHECK(std::abs(back[i].s2 - samples[i].s2) < 1e-9);
        CHECK(std::abs(back[i].std_error - samples[i].std_error) < 1e-9);
    }

    std::istringstream bad("alpha,s2,std_error\n0.1,0.5\n");
    CHECK_THROWS_AS(read_samples_csv(bad), std::invalid_argument);
}
