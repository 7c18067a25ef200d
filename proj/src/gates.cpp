#include "xxzsim/gates.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace xxzsim {

namespace {

constexpr Cmplx kI{0.0, 1.0};

void require_finite(double angle, const char* who) {
    if (!std::isfinite(angle)) throw std::invalid_argument(std::string(who) + ": non-finite angle");
}

}  // namespace

Mat2 pauli(Axis k) {
    Mat2 m;
    switch (k) {
        case Axis::X:
            m(0, 1) = 1.0;
            m(1, 0) = 1.0;
            break;
        case Axis::Y:
            m(0, 1) = -kI;
            m(1, 0) = kI;
            break;
        case Axis::Z:
            m(0, 0) = 1.0;
            m(1, 1) = -1.0;
            break;
    }
    return m;
}

Mat4 pair_coupling(PairAxis kk) {
    Axis k = Axis::X;
    if (kk == PairAxis::YY) k = Axis::Y;
    if (kk == PairAxis::ZZ) k = Axis::Z;
    const Mat2 s = pauli(k);
    return tensor2(s, s);
}

Mat2 rot_1q(Axis axis, double angle) {
    require_finite(angle, "rot_1q");
    const double c = std::cos(angle / 2.0);
    const double s = std::sin(angle / 2.0);
    Mat2 m;
    switch (axis) {
        case Axis::X:
            m(0, 0) = c;
            m(0, 1) = -kI * s;
            m(1, 0) = -kI * s;
            m(1, 1) = c;
            break;
        case Axis::Y:
            m(0, 0) = c;
            m(0, 1) = -s;
            m(1, 0) = s;
            m(1, 1) = c;
            break;
        case Axis::Z:
            m(0, 0) = Cmplx{c, -s};
            m(1, 1) = Cmplx{c, s};
            break;
    }
    return m;
}

Mat4 rot_2q(PairAxis axis, double angle) {
    require_finite(angle, "rot_2q");
    // sigma_k (x) sigma_k squares to the identity, so
    // exp(-i a/2 KK) = cos(a/2) I - i sin(a/2) KK.
    const double c = std::cos(angle / 2.0);
    const double s = std::sin(angle / 2.0);
    return add(scale(Mat4::identity(), c), scale(pair_coupling(axis), -kI * s));
}

GateAngles angles_from_model(const ModelParams& p) {
    if (!std::isfinite(p.J) || !std::isfinite(p.d) || !std::isfinite(p.t))
        throw std::invalid_argument("angles_from_model: non-finite model parameters");
    const double a = 2.0 * p.J * p.t;
    return GateAngles{a, a, p.d * a};
}

Mat4 xxz_hamiltonian(double J, double d) {
    Mat4 h = add(pair_coupling(PairAxis::XX), pair_coupling(PairAxis::YY));
    h = add(h, scale(pair_coupling(PairAxis::ZZ), d));
    return scale(h, J);
}

Mat4 coupling_sum(const GateAngles& g) {
    Mat4 m = scale(pair_coupling(PairAxis::XX), g.alpha_x / 2.0);
    m = add(m, scale(pair_coupling(PairAxis::YY), g.alpha_y / 2.0));
    m = add(m, scale(pair_coupling(PairAxis::ZZ), g.alpha_z / 2.0));
    return m;
}

}  // namespace xxzsim
