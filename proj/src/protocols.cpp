#include "xxzsim/protocols.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace xxzsim {

namespace {

constexpr double kHalfPi = 1.5707963267948966;

Axis rotation_axis(GateKind kind) {
    switch (kind) {
        case GateKind::RX: return Axis::X;
        case GateKind::RY: return Axis::Y;
        default: return Axis::Z;
    }
}

PairAxis rotation_pair_axis(GateKind kind) {
    switch (kind) {
        case GateKind::RXX: return PairAxis::XX;
        case GateKind::RYY: return PairAxis::YY;
        default: return PairAxis::ZZ;
    }
}

}  // namespace

bool is_two_qubit(GateKind kind) {
    return kind == GateKind::RXX || kind == GateKind::RYY || kind == GateKind::RZZ;
}

const char* gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::RX: return "RX";
        case GateKind::RY: return "RY";
        case GateKind::RZ: return "RZ";
        case GateKind::RXX: return "RXX";
        case GateKind::RYY: return "RYY";
        case GateKind::RZZ: return "RZZ";
    }
    return "?";
}

void Circuit::extend(const Circuit& other) {
    if (other.n_qubits != n_qubits)
        throw std::invalid_argument("Circuit::extend: qubit counts differ");
    ops.insert(ops.end(), other.ops.begin(), other.ops.end());
}

Circuit prep_circuit(const PrepAngles& a) {
    Circuit c;
    c.append(GateOp::one(GateKind::RY, a.theta0, 0));
    c.append(GateOp::one(GateKind::RY, a.theta1, 1));
    c.append(GateOp::one(GateKind::RZ, a.phi0, 0));
    c.append(GateOp::one(GateKind::RZ, a.phi1, 1));
    return c;
}

Circuit evolution_circuit(const GateAngles& g) {
    Circuit c;
    c.append(GateOp::two(GateKind::RZZ, g.alpha_z, 0, 1));
    c.append(GateOp::two(GateKind::RYY, g.alpha_y, 0, 1));
    c.append(GateOp::two(GateKind::RXX, g.alpha_x, 0, 1));
    return c;
}

Circuit pauli_measure_circuit(const PrepAngles& a, const GateAngles& g, int qubit, Axis axis) {
    if (qubit < 0 || qubit > 1)
        throw std::invalid_argument("pauli_measure_circuit: qubit must be 0 or 1");
    Circuit c = prep_circuit(a);
    c.extend(evolution_circuit(g));
    if (axis == Axis::X) c.append(GateOp::one(GateKind::RY, -kHalfPi, qubit));
    if (axis == Axis::Y) c.append(GateOp::one(GateKind::RX, kHalfPi, qubit));
    c.measured = {qubit};
    return c;
}

Circuit correlator_circuit(const PrepAngles& a, Axis axis) {
    Circuit c = prep_circuit(a);
    if (axis == Axis::X) {
        c.append(GateOp::one(GateKind::RY, -kHalfPi, 0));
        c.append(GateOp::one(GateKind::RY, -kHalfPi, 1));
    }
    if (axis == Axis::Y) {
        c.append(GateOp::one(GateKind::RX, kHalfPi, 0));
        c.append(GateOp::one(GateKind::RX, kHalfPi, 1));
    }
    c.measured = {0, 1};
    return c;
}

Circuit echo_circuit(const PrepAngles& a, const GateAngles& g) {
    Circuit c = prep_circuit(a);
    c.extend(evolution_circuit(g));
    c.append(GateOp::one(GateKind::RZ, -a.phi0, 0));
    c.append(GateOp::one(GateKind::RZ, -a.phi1, 1));
    c.append(GateOp::one(GateKind::RY, -a.theta0, 0));
    c.append(GateOp::one(GateKind::RY, -a.theta1, 1));
    c.measured = {0, 1};
    return c;
}

StateVector simulate(const Circuit& c) {
    StateVector s(c.n_qubits);
    for (const GateOp& op : c.ops) {
        if (is_two_qubit(op.kind)) {
            s.apply_2q(rot_2q(rotation_pair_axis(op.kind), op.angle), op.targets[0],
                       op.targets[1]);
        } else {
            s.apply_1q(rot_1q(rotation_axis(op.kind), op.angle), op.targets[0]);
        }
    }
    return s;
}

std::vector<double> measured_distribution(const Circuit& c) {
    return marginal_probabilities(simulate(c), c.measured);
}

std::string to_text(const Circuit& c) {
    std::string out = "QUBITS " + std::to_string(c.n_qubits) + "\n";
    char buf[64];
    for (const GateOp& op : c.ops) {
        std::snprintf(buf, sizeof(buf), "%.17g", op.angle);
        out += gate_name(op.kind);
        out += ' ';
        out += buf;
        out += ' ';
        out += std::to_string(op.targets[0]);
        if (is_two_qubit(op.kind)) {
            out += ' ';
            out += std::to_string(op.targets[1]);
        }
        out += '\n';
    }
    if (!c.measured.empty()) {
        out += "MEASURE";
        for (int q : c.measured) out += ' ' + std::to_string(q);
        out += '\n';
    }
    return out;
}

}  // namespace xxzsim
