#include <doctest.h>

#include <cmath>
#include <numbers>

#include "test_util.hpp"
#include "xxzsim/analytics.hpp"
#include "xxzsim/gates.hpp"

using namespace xxzsim;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("rot_1q closed forms") {
    CHECK(max_abs_diff(rot_1q(Axis::Z, 0.0), Mat2::identity()) < 1e-15);

    const Mat2 ry = rot_1q(Axis::Y, kPi / 2.0);
    const double c = std::cos(kPi / 4.0);
    CHECK(std::abs(ry(0, 0) - c) < 1e-15);
    CHECK(std::abs(ry(0, 1) + c) < 1e-15);
    CHECK(std::abs(ry(1, 0) - c) < 1e-15);
    CHECK(std::abs(ry(1, 1) - c) < 1e-15);

    CHECK_THROWS_AS(rot_1q(Axis::X, std::nan("")), std::invalid_argument);
}

TEST_CASE("measurement basis-rotation identities") {
    // sx = RY(pi/2) sz RY(-pi/2): rotate by -pi/2 about Y, then measure Z.
    const Mat2 lhs_x = mul(rot_1q(Axis::Y, kPi / 2.0),
                           mul(pauli(Axis::Z), rot_1q(Axis::Y, -kPi / 2.0)));
    CHECK(max_abs_diff(lhs_x, pauli(Axis::X)) < 1e-12);

    // sy = RX(-pi/2) sz RX(pi/2): rotate by +pi/2 about X, then measure Z.
    const Mat2 lhs_y = mul(rot_1q(Axis::X, -kPi / 2.0),
                           mul(pauli(Axis::Z), rot_1q(Axis::X, kPi / 2.0)));
    CHECK(max_abs_diff(lhs_y, pauli(Axis::Y)) < 1e-12);
}

TEST_CASE("rot_2q closed forms and commutation") {
    const Mat4 rzz = rot_2q(PairAxis::ZZ, 0.7);
    const Cmplx lo{std::cos(0.35), -std::sin(0.35)};
    const Cmplx hi{std::cos(0.35), std::sin(0.35)};
    CHECK(std::abs(rzz(0, 0) - lo) < 1e-15);
    CHECK(std::abs(rzz(1, 1) - hi) < 1e-15);
    CHECK(std::abs(rzz(2, 2) - hi) < 1e-15);
    CHECK(std::abs(rzz(3, 3) - lo) < 1e-15);

    TestRng rng(31);
    for (int i = 0; i < 20; ++i) {
        const Mat4 a = rot_2q(PairAxis::XX, rng.angle());
        const Mat4 b = rot_2q(PairAxis::YY, rng.angle());
        const Mat4 czz = rot_2q(PairAxis::ZZ, rng.angle());
        CHECK(max_abs_diff(mul(a, b), mul(b, a)) < 1e-12);
        CHECK(max_abs_diff(mul(a, czz), mul(czz, a)) < 1e-12);
        CHECK(max_abs_diff(mul(b, czz), mul(czz, b)) < 1e-12);
    }

    const Mat4 full_turn = rot_2q(PairAxis::XX, 2.0 * kPi);
    CHECK(max_abs_diff(full_turn, scale(Mat4::identity(), -1.0)) < 1e-15);
}

TEST_CASE("rotations invert and are unitary for random angles") {
    TestRng rng(32);
    for (int i = 0; i < 100; ++i) {
        const double theta = rng.uniform(-10.0, 10.0);
        for (Axis k : {Axis::X, Axis::Y, Axis::Z}) {
            CHECK(max_abs_diff(mul(rot_1q(k, theta), rot_1q(k, -theta)), Mat2::identity()) <
                  1e-12);
            CHECK(unitarity_defect(rot_1q(k, theta)) < 1e-12);
        }
        for (PairAxis kk : {PairAxis::XX, PairAxis::YY, PairAxis::ZZ}) {
            CHECK(max_abs_diff(mul(rot_2q(kk, theta), rot_2q(kk, -theta)), Mat4::identity()) <
                  1e-12);
            CHECK(unitarity_defect(rot_2q(kk, theta)) < 1e-12);
        }
    }
}

TEST_CASE("angles_from_model") {
    const GateAngles zero = angles_from_model({1.0, 2.0, 0.0});
    CHECK(zero.alpha_x == 0.0);
    CHECK(zero.alpha_y == 0.0);
    CHECK(zero.alpha_z == 0.0);

    const GateAngles g = angles_from_model({1.0, 1.0, kPi / 4.0});
    CHECK(std::abs(g.alpha_x - kPi / 2.0) < 1e-15);
    CHECK(std::abs(g.alpha_y - kPi / 2.0) < 1e-15);
    CHECK(std::abs(g.alpha_z - kPi / 2.0) < 1e-15);

    const GateAngles aniso = angles_from_model({1.0, 2.0, 0.37});
    CHECK(std::abs(aniso.alpha_z - 2.0 * aniso.alpha_x) < 1e-15);
    CHECK(aniso.alpha_x == aniso.alpha_y);
}

TEST_CASE("gate composition equals the eigendecomposition exponential") {
    TestRng rng(33);
    for (int i = 0; i < 50; ++i) {
        const ModelParams p{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0),
                            rng.uniform(-2.0, 2.0)};
        const GateAngles g = angles_from_model(p);
        const Mat4 via_gates = evolution_from_gates(g);
        const Mat4 via_eig = evolution_from_eig(g);
        // Phase-invariant comparison: |tr(A^dag B)| / 4 = 1 iff A = e^{i phi} B.
        const double t = std::abs(trace(mul(adjoint(via_gates), via_eig))) / 4.0;
        CHECK(std::abs(t - 1.0) < 1e-10);
        CHECK(unitarity_defect(via_eig) < 1e-10);
    }
}

TEST_CASE("xxz_hamiltonian is assembled from Pauli products") {
    const Mat4 h = xxz_hamiltonian(1.3, 0.8);
    Mat4 want = add(pair_coupling(PairAxis::XX), pair_coupling(PairAxis::YY));
    want = add(want, scale(pair_coupling(PairAxis::ZZ), 0.8));
    want = scale(want, 1.3);
    CHECK(max_abs_diff(h, want) == 0.0);

    // H t as angle combination matches the model-derived gate angles.
    const ModelParams p{1.3, 0.8, 0.45};
    CHECK(max_abs_diff(coupling_sum(angles_from_model(p)), scale(h, p.t)) < 1e-15);
}
