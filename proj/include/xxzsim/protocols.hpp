#pragma once

#include <string>
#include <vector>

#include "xxzsim/gates.hpp"
#include "xxzsim/state_vector.hpp"

namespace xxzsim {

/// Parameters of the separable two-qubit initial state
/// (cos(t0/2)|0> + e^{i p0} sin(t0/2)|1>) (x) (cos(t1/2)|0> + e^{i p1} sin(t1/2)|1>).
struct PrepAngles {
    double theta0 = 0.0;
    double theta1 = 0.0;
    double phi0 = 0.0;
    double phi1 = 0.0;
};

enum class GateKind { RX, RY, RZ, RXX, RYY, RZZ };

bool is_two_qubit(GateKind kind);
const char* gate_name(GateKind kind);

struct GateOp {
    GateKind kind;
    double angle;
    int targets[2];

    static GateOp one(GateKind kind, double angle, int q) { return GateOp{kind, angle, {q, -1}}; }
    static GateOp two(GateKind kind, double angle, int a, int b) {
        return GateOp{kind, angle, {a, b}};
    }
};

/// An ordered gate list; ops apply left to right in time order.
struct Circuit {
    int n_qubits = 2;
    std::vector<GateOp> ops;
    std::vector<int> measured;

    void append(const GateOp& op) { ops.push_back(op); }
    void extend(const Circuit& other);
};

/// From |00>: RY0(theta0), RY1(theta1), RZ0(phi0), RZ1(phi1). Equals the
/// separable state above up to a global phase.
Circuit prep_circuit(const PrepAngles& a);

/// RZZ(alpha_z), RYY(alpha_y), RXX(alpha_x), in that canonical order. The
/// three commute, so any order realizes the same unitary.
Circuit evolution_circuit(const GateAngles& g);

/// Preparation, evolution, then the basis rotation that maps the requested
/// Pauli axis onto Z on the measured qubit: X -> RY(-pi/2), Y -> RX(+pi/2),
/// Z -> nothing. Measures only that qubit.
Circuit pauli_measure_circuit(const PrepAngles& a, const GateAngles& g, int qubit, Axis axis);

/// Preparation followed by the same basis rotation on both qubits and a
/// measurement of both; the parity estimator of the counts gives the
/// same-axis pair correlator of the prepared state.
Circuit correlator_circuit(const PrepAngles& a, Axis axis);

/// Preparation, evolution, inverse preparation (RZ0(-phi0), RZ1(-phi1),
/// RY0(-theta0), RY1(-theta1)), both qubits measured. P(00) is the squared
/// survival amplitude of the prepared state under the evolution.
Circuit echo_circuit(const PrepAngles& a, const GateAngles& g);

/// Run the circuit from |0...0>.
StateVector simulate(const Circuit& c);

/// Exact outcome distribution over the measured qubits.
std::vector<double> measured_distribution(const Circuit& c);

/// Line-oriented text form: "QUBITS n", one "GATE angle targets..." per op
/// (angles with 17 significant digits), then "MEASURE i j..." if anything
/// is measured.
std::string to_text(const Circuit& c);

}  // namespace xxzsim
