#include "xxzsim/analytics.hpp"

#include <cmath>
#include <string>

namespace xxzsim {

namespace {

constexpr double kDualRouteTol = 1e-10;

Cmplx phase(double angle) { return Cmplx{std::cos(angle), std::sin(angle)}; }

}  // namespace

StateVector separable_state(const PrepAngles& a) {
    const double c0 = std::cos(a.theta0 / 2.0);
    const double s0 = std::sin(a.theta0 / 2.0);
    const double c1 = std::cos(a.theta1 / 2.0);
    const double s1 = std::sin(a.theta1 / 2.0);
    StateVector s(2);
    s.set_amp(0, c0 * c1);
    s.set_amp(1, phase(a.phi0) * s0 * c1);
    s.set_amp(2, phase(a.phi1) * c0 * s1);
    s.set_amp(3, phase(a.phi0 + a.phi1) * s0 * s1);
    return s;
}

Mat4 evolution_from_gates(const GateAngles& g) {
    return mul(rot_2q(PairAxis::XX, g.alpha_x),
               mul(rot_2q(PairAxis::YY, g.alpha_y), rot_2q(PairAxis::ZZ, g.alpha_z)));
}

Mat4 evolution_from_eig(const GateAngles& g) {
    const SymEig4 eig = sym_eig4(coupling_sum(g));
    // U = V exp(-i Lambda) V^T with real orthogonal V.
    Mat4 u;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            Cmplx acc{};
            for (int k = 0; k < 4; ++k)
                acc += eig.vectors(r, k) * phase(-eig.values[k]) * eig.vectors(c, k);
            u(r, c) = acc;
        }
    return u;
}

StateVector oracle_evolved_state(const PrepAngles& a, const GateAngles& g) {
    Circuit c = prep_circuit(a);
    c.extend(evolution_circuit(g));
    StateVector gate_route = simulate(c);

    StateVector eig_route = separable_state(a);
    eig_route.apply_2q(evolution_from_eig(g), 0, 1);

    const double overlap = std::abs(inner(gate_route, eig_route));
    if (1.0 - overlap > kDualRouteTol)
        throw internal_consistency_error(
            "oracle_evolved_state: gate and eigendecomposition routes disagree, 1-|overlap| = " +
            std::to_string(1.0 - overlap));
    return gate_route;
}

EntanglementResult entanglement_exact(const PrepAngles& a, const GateAngles& g, int qubit) {
    const StateVector state = oracle_evolved_state(a, g);
    EntanglementResult out;
    out.bloch = reduced_bloch(state, qubit);
    out.E = 1.0 - out.bloch.norm_sq();
    return out;
}

BlochVector closed_form_bloch(const PrepAngles& a, const GateAngles& g) {
    const double ax2 = 2.0 * g.alpha_x;
    const double ay2 = 2.0 * g.alpha_y;
    const double az2 = 2.0 * g.alpha_z;
    const double ct0h2 = std::cos(a.theta0 / 2.0) * std::cos(a.theta0 / 2.0);
    const double st0h2 = std::sin(a.theta0 / 2.0) * std::sin(a.theta0 / 2.0);
    const double ct1h2 = std::cos(a.theta1 / 2.0) * std::cos(a.theta1 / 2.0);
    const double st1h2 = std::sin(a.theta1 / 2.0) * std::sin(a.theta1 / 2.0);

    BlochVector r;
    r.x = 2.0 * std::sin(a.theta0) * std::cos(ay2) *
              (std::cos(a.phi0 + az2) * ct1h2 + std::cos(a.phi0 - az2) * st1h2) +
          2.0 * std::sin(a.theta1) * std::sin(ay2) *
              (std::sin(a.phi0 + az2) * ct0h2 - std::sin(a.phi1 - az2) * st0h2);
    r.y = 2.0 * std::sin(a.theta0) * std::cos(ax2) *
              (std::sin(a.phi0 + az2) * ct1h2 + std::sin(a.phi0 - az2) * st1h2) +
          2.0 * std::sin(a.theta1) * std::sin(ax2) *
              (-std::cos(a.phi1 + az2) * ct0h2 + std::cos(a.phi1 - az2) * st0h2);
    r.z = std::cos(ax2) * std::cos(ay2) * std::cos(a.theta0) +
          std::sin(ax2) * std::sin(ay2) * std::cos(a.theta1) +
          0.25 * std::sin(ax2 + ay2) * std::sin(a.theta0) * std::sin(a.theta1) *
              std::sin(a.phi0) * std::cos(a.phi1);
    return r;
}

ClosedFormResult entanglement_closed_form(const PrepAngles& a, const GateAngles& g) {
    ClosedFormResult out;
    out.value = 1.0 - closed_form_bloch(a, g).norm_sq();
    out.matches_oracle = std::abs(out.value - entanglement_exact(a, g, 0).E) <= 1e-8;
    return out;
}

double correlator_exact(const StateVector& state, Axis axis) {
    if (state.n_qubits() != 2)
        throw std::invalid_argument("correlator_exact: expected a two-qubit state");
    const PairAxis kk = axis == Axis::X   ? PairAxis::XX
                        : axis == Axis::Y ? PairAxis::YY
                                          : PairAxis::ZZ;
    StateVector applied = state;
    applied.apply_2q(pair_coupling(kk), 0, 1);
    return inner(state, applied).real();
}

SpeedResult variance_H(const PrepAngles& a, const ModelParams& p) {
    const double J2 = p.J * p.J;
    const double d = p.d;
    const double dphi = a.phi0 - a.phi1;

    // Trigonometric closed form on the separable state.
    const double closed =
        2.0 * J2 + J2 * d * d - 2.0 * J2 * std::cos(a.theta0) * std::cos(a.theta1) -
        2.0 * J2 * d * std::sin(a.theta0) * std::sin(a.theta1) * std::cos(dphi) -
        J2 * std::sin(a.theta0) * std::sin(a.theta0) * std::sin(a.theta1) * std::sin(a.theta1) *
            std::cos(dphi) * std::cos(dphi) -
        0.5 * J2 * d * std::sin(2.0 * a.theta0) * std::sin(2.0 * a.theta1) * std::cos(dphi) -
        J2 * d * d * std::cos(a.theta0) * std::cos(a.theta0) * std::cos(a.theta1) *
            std::cos(a.theta1);

    // Correlator route: <H^2> - <H>^2 from the three pair correlators.
    const StateVector psi0 = separable_state(a);
    const double xx = correlator_exact(psi0, Axis::X);
    const double yy = correlator_exact(psi0, Axis::Y);
    const double zz = correlator_exact(psi0, Axis::Z);
    const double h2 = J2 * (2.0 + d * d - 2.0 * zz - 2.0 * d * (xx + yy));
    const double h = p.J * (xx + yy + d * zz);
    const double via_correlators = h2 - h * h;

    if (std::abs(closed - via_correlators) > kDualRouteTol * std::max(1.0, std::abs(closed)))
        throw internal_consistency_error(
            "variance_H: closed form and correlator route disagree: " + std::to_string(closed) +
            " vs " + std::to_string(via_correlators));

    double var_h = closed;
    if (var_h < 0.0) {
        if (var_h < -1e-12)
            throw internal_consistency_error("variance_H: negative variance " +
                                             std::to_string(var_h));
        var_h = 0.0;
    }
    return SpeedResult{var_h, std::sqrt(var_h)};
}

double tangle_crosscheck(const StateVector& state, int qubit) {
    if (state.n_qubits() != 2)
        throw std::invalid_argument("tangle_crosscheck: expected a two-qubit state");
    const std::size_t mask = std::size_t{1} << qubit;
    double rho00 = 0.0;
    double rho11 = 0.0;
    Cmplx rho01{};
    for (std::size_t i = 0; i < state.dim(); ++i) {
        if (i & mask) {
            rho11 += std::norm(state.amps()[i]);
        } else {
            rho00 += std::norm(state.amps()[i]);
            rho01 += state.amps()[i] * std::conj(state.amps()[i | mask]);
        }
    }
    const double purity = rho00 * rho00 + rho11 * rho11 + 2.0 * std::norm(rho01);
    return 2.0 * (1.0 - purity);
}

double echo_exact(const PrepAngles& a, const GateAngles& g) {
    const StateVector prepared = simulate(prep_circuit(a));
    StateVector evolved = prepared;
    evolved.apply_2q(evolution_from_gates(g), 0, 1);
    return std::norm(inner(prepared, evolved));
}

}  // namespace xxzsim
