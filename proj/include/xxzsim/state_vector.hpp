#pragma once

#include <string_view>
#include <vector>

#include "xxzsim/linalg.hpp"

namespace xxzsim {

/// Dense statevector over the computational basis of a small qubit register.
///
/// Indexing convention: qubit 0 is the least significant bit, so basis index
/// i corresponds to the bitstring b0 b1 ... with b_k = (i >> k) & 1, and a
/// bitstring is written qubit-0-first ("01" means q0=0, q1=1, index 2).
class StateVector {
public:
    static constexpr int kMaxQubits = 10;

    /// |0...0> on n qubits.
    explicit StateVector(int n_qubits);

    int n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return amps_.size(); }
    const std::vector<Cmplx>& amps() const { return amps_; }
    Cmplx amp(std::size_t index) const { return amps_.at(index); }
    void set_amp(std::size_t index, Cmplx value) { amps_.at(index) = value; }

    double norm_sq() const;

    /// Apply a single-qubit unitary to `target`, identity elsewhere.
    void apply_1q(const Mat2& u, int target);

    /// Apply a two-qubit unitary to the ordered pair (t0, t1). The 4x4
    /// matrix index is bit_t0 + 2*bit_t1, matching tensor2().
    void apply_2q(const Mat4& u, int t0, int t1);

private:
    int n_qubits_;
    std::vector<Cmplx> amps_;
};

/// Computational basis state from a qubit-0-first bitstring.
StateVector basis_state(int n_qubits, std::string_view bits);

/// <a|b> with conjugation on a.
Cmplx inner(const StateVector& a, const StateVector& b);

struct BlochVector {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
    double norm_sq() const { return x * x + y * y + z * z; }
};

/// Single-qubit Pauli expectation values (<sx>, <sy>, <sz>) of one qubit,
/// computed exactly from the amplitudes.
BlochVector reduced_bloch(const StateVector& s, int qubit);

/// Probability distribution over the listed qubits, marginalized over the
/// rest. Outcome index o has bit j equal to the measured value of qubits[j].
std::vector<double> marginal_probabilities(const StateVector& s, const std::vector<int>& qubits);

}  // namespace xxzsim
