#pragma once

#include <stdexcept>

#include "xxzsim/protocols.hpp"

namespace xxzsim {

/// Thrown when two algebraically equivalent computation routes disagree
/// beyond tolerance; this always indicates a convention bug, never bad input.
class internal_consistency_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct EntanglementResult {
    double E = 0.0;  // 1 - |bloch|^2, in [0, 1] for pure states
    BlochVector bloch;
};

struct SpeedResult {
    double var_h = 0.0;         // <H^2> - <H>^2
    double v_over_gamma = 0.0;  // sqrt(var_h), hbar = 1
};

struct ClosedFormResult {
    double value = 0.0;
    bool matches_oracle = false;  // agrees with the exact route within 1e-8
};

/// The separable two-qubit state built directly from its amplitudes,
/// independent of the gate pipeline.
StateVector separable_state(const PrepAngles& a);

/// Evolution unitary as the product RXX RYY RZZ of rotation gates.
Mat4 evolution_from_gates(const GateAngles& g);

/// The same unitary as exp(-i (a_x/2 XX + a_y/2 YY + a_z/2 ZZ)) computed by
/// eigendecomposition of the coupling matrix.
Mat4 evolution_from_eig(const GateAngles& g);

/// Evolved state |psi(t)> computed by BOTH routes above; throws
/// internal_consistency_error if they disagree (phase-invariant overlap
/// metric, tolerance 1e-10). Returns the gate-route state.
StateVector oracle_evolved_state(const PrepAngles& a, const GateAngles& g);

/// Entanglement of one qubit with the rest: 1 minus the squared Bloch
/// vector length of its reduced state, on the oracle-evolved state.
EntanglementResult entanglement_exact(const PrepAngles& a, const GateAngles& g, int qubit);

/// Hand-written closed-form Pauli means of qubit 0 for the evolved state,
/// kept exactly as transcribed for traceability. The expressions carry
/// known defects (components can leave [-1, 1] and the angle arguments are
/// doubled relative to the exact dynamics), so use entanglement_exact for
/// physics and this route only to study the discrepancy.
BlochVector closed_form_bloch(const PrepAngles& a, const GateAngles& g);

/// 1 - |closed_form_bloch|^2 plus a flag telling whether it reproduces the
/// exact entanglement within 1e-8.
ClosedFormResult entanglement_closed_form(const PrepAngles& a, const GateAngles& g);

/// Exact <psi| sigma_k (x) sigma_k |psi> for a two-qubit state.
double correlator_exact(const StateVector& state, Axis axis);

/// Energy variance of the separable state under the XXZ Hamiltonian,
/// computed by a trigonometric closed form AND by the correlator route
/// <H^2> - <H>^2; the two must agree within 1e-10 or an
/// internal_consistency_error is thrown. Tiny negative results (>= -1e-12)
/// are clamped to zero.
SpeedResult variance_H(const PrepAngles& a, const ModelParams& p);

/// 2 (1 - Tr rho^2) of the explicit reduced density matrix; equals the
/// entanglement distance for pure two-qubit states.
double tangle_crosscheck(const StateVector& state, int qubit);

/// Exact squared survival amplitude |<psi0| U(g) |psi0>|^2.
double echo_exact(const PrepAngles& a, const GateAngles& g);

}  // namespace xxzsim
