#include <doctest.h>

#include <cmath>
#include <numbers>

#include "test_util.hpp"
#include "xxzsim/sampling.hpp"

using namespace xxzsim;

namespace {
constexpr double kPi = std::numbers::pi;

ShotCounts make_counts(std::uint64_t shots,
                       std::initializer_list<std::pair<const char*, std::uint64_t>> entries) {
    ShotCounts c;
    c.shots = shots;
    for (const auto& [key, n] : entries) c.counts[key] = n;
    return c;
}
}  // namespace

TEST_CASE("run_shots on a deterministic circuit") {
    const ShotCounts counts = run_shots(correlator_circuit({0, 0, 0, 0}, Axis::Z), 1024, 7);
    CHECK(counts.shots == 1024);
    CHECK(counts.counts.size() == 1);
    CHECK(counts.counts.at("00") == 1024);
}

TEST_CASE("run_shots rejects bad requests") {
    Circuit unmeasured = prep_circuit({0, 0, 0, 0});
    CHECK_THROWS_AS(run_shots(unmeasured, 16, 1), std::invalid_argument);
    CHECK_THROWS_AS(run_shots(correlator_circuit({0, 0, 0, 0}, Axis::Z), 0, 1),
                    std::invalid_argument);
}

TEST_CASE("identical seeds give identical counts, different seeds differ") {
    const Circuit c = pauli_measure_circuit({kPi / 2.0, 1.0, 0.3, 0.9}, {0.4, 0.4, 0.8}, 0,
                                            Axis::X);
    const ShotCounts a = run_shots(c, 1024, 99);
    const ShotCounts b = run_shots(c, 1024, 99);
    CHECK(a.counts == b.counts);
    CHECK(to_json(a) == to_json(b));

    std::uint64_t total = 0;
    for (const auto& [key, n] : a.counts) total += n;
    CHECK(total == a.shots);

    const ShotCounts other = run_shots(c, 1024, 100);
    CHECK(a.counts != other.counts);
}

TEST_CASE("mean_pm1 arithmetic") {
    Estimate e = mean_pm1(make_counts(1024, {{"0", 768}, {"1", 256}}), 0);
    CHECK(e.value == doctest::Approx(0.5).epsilon(1e-15));

    e = mean_pm1(make_counts(1024, {{"0", 1024}}), 0);
    CHECK(e.value == 1.0);
    CHECK(e.std_error == 0.0);

    e = mean_pm1(make_counts(1024, {{"0", 512}, {"1", 512}}), 0);
    CHECK(e.value == 0.0);
    CHECK(e.std_error == doctest::Approx(1.0 / 32.0).epsilon(1e-12));

    CHECK_THROWS_AS(mean_pm1(make_counts(4, {{"0", 4}}), 3), std::invalid_argument);
}

TEST_CASE("parity and prob00 arithmetic") {
    CHECK(parity(make_counts(1024, {{"00", 1024}})).value == 1.0);
    CHECK(parity(make_counts(1024, {{"01", 512}, {"10", 512}})).value == -1.0);
    CHECK(parity(make_counts(1024, {{"00", 256}, {"01", 256}, {"10", 256}, {"11", 256}})).value ==
          0.0);
    CHECK_THROWS_AS(parity(make_counts(4, {{"0", 4}})), std::invalid_argument);

    CHECK(prob00(make_counts(1024, {{"00", 1024}})).value == 1.0);
    CHECK(prob00(make_counts(1024, {{"11", 1024}})).value == 0.0);
    const Estimate p = prob00(make_counts(1024, {{"00", 960}, {"01", 64}}));
    CHECK(p.value == doctest::Approx(0.9375).epsilon(1e-15));
    CHECK(p.std_error == doctest::Approx(std::sqrt(0.9375 * 0.0625 / 1024.0)).epsilon(1e-12));
}

TEST_CASE("counts serialize to JSON with sorted keys") {
    const ShotCounts c = make_counts(8, {{"10", 3}, {"00", 4}, {"11", 1}});
    CHECK(to_json(c) == "{\"shots\": 8, \"counts\": {\"00\": 4, \"10\": 3, \"11\": 1}}");
}

TEST_CASE("Born-rule frequency approaches one half") {
    const Circuit c = pauli_measure_circuit({kPi / 2.0, 0, 0, 0}, {0, 0, 0}, 0, Axis::Z);
    const std::uint64_t shots = 1 << 16;
    const ShotCounts counts = run_shots(c, shots, 2024);
    const double freq = static_cast<double>(counts.counts.at("0")) / static_cast<double>(shots);
    CHECK(std::abs(freq - 0.5) < 4.0 * 0.5 / 256.0);  // 4 sigma at 2^16 shots
}

TEST_CASE("estimates have binomial coverage at 1024 shots") {
    TestRng rng(2025);
    const std::uint64_t shots = 1024;
    int within2 = 0;
    int within5 = 0;
    const int cases = 200;
    for (int i = 0; i < cases; ++i) {
        const PrepAngles a = rng.prep();
        const GateAngles g = rng.gate_angles();
        const Axis axis = i % 3 == 0 ? Axis::X : i % 3 == 1 ? Axis::Y : Axis::Z;
        const Circuit c = pauli_measure_circuit(a, g, 0, axis);

        const auto dist = measured_distribution(c);
        const double exact = dist[0] - dist[1];
        const double se = std::sqrt((1.0 - exact * exact) / static_cast<double>(shots));

        const double est = mean_pm1(run_shots(c, shots, mix_seed(4242, i)), 0).value;
        const double dev = std::abs(est - exact);
        if (dev <= 2.0 * se) ++within2;
        if (dev <= 5.0 * se) ++within5;
    }
    CHECK(within2 >= static_cast<int>(0.92 * cases));
    CHECK(within5 == cases);
}

TEST_CASE("estimator error shrinks from 256 to 4096 shots") {
    TestRng rng(2026);
    double rms256 = 0.0;
    double rms4096 = 0.0;
    const int cases = 100;
    for (int i = 0; i < cases; ++i) {
        const Circuit c = pauli_measure_circuit(rng.prep(), rng.gate_angles(), 0, Axis::Z);
        const auto dist = measured_distribution(c);
        const double exact = dist[0] - dist[1];

        const double e256 = mean_pm1(run_shots(c, 256, mix_seed(9000, i)), 0).value - exact;
        const double e4096 = mean_pm1(run_shots(c, 4096, mix_seed(9100, i)), 0).value - exact;
        rms256 += e256 * e256;
        rms4096 += e4096 * e4096;
    }
    CHECK(std::sqrt(rms4096 / cases) < std::sqrt(rms256 / cases));
}

TEST_CASE("mix_seed separates subtask streams") {
    CHECK(mix_seed(1, 0) != mix_seed(1, 1));
    CHECK(mix_seed(1, 0) != mix_seed(2, 0));
    CHECK(mix_seed(123, 45) == mix_seed(123, 45));
}
