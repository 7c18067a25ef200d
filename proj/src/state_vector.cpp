#include "xxzsim/state_vector.hpp"

#include <stdexcept>
#include <string>

namespace xxzsim {

namespace {

void check_qubit(int qubit, int n_qubits, const char* who) {
    if (qubit < 0 || qubit >= n_qubits)
        throw std::invalid_argument(std::string(who) + ": qubit index " + std::to_string(qubit) +
                                    " out of range for " + std::to_string(n_qubits) + " qubits");
}

}  // namespace

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits)
        throw std::invalid_argument("StateVector: n_qubits must be in [1, " +
                                    std::to_string(kMaxQubits) + "]");
    amps_.assign(std::size_t{1} << n_qubits, Cmplx{});
    amps_[0] = 1.0;
}

double StateVector::norm_sq() const {
    double total = 0.0;
    for (const Cmplx& a : amps_) total += std::norm(a);
    return total;
}

void StateVector::apply_1q(const Mat2& u, int target) {
    check_qubit(target, n_qubits_, "apply_1q");
    const std::size_t mask = std::size_t{1} << target;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if (i & mask) continue;
        const Cmplx a0 = amps_[i];
        const Cmplx a1 = amps_[i | mask];
        amps_[i] = u(0, 0) * a0 + u(0, 1) * a1;
        amps_[i | mask] = u(1, 0) * a0 + u(1, 1) * a1;
    }
}

void StateVector::apply_2q(const Mat4& u, int t0, int t1) {
    check_qubit(t0, n_qubits_, "apply_2q");
    check_qubit(t1, n_qubits_, "apply_2q");
    if (t0 == t1) throw std::invalid_argument("apply_2q: targets must be distinct");
    const std::size_t m0 = std::size_t{1} << t0;
    const std::size_t m1 = std::size_t{1} << t1;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if (i & (m0 | m1)) continue;
        const std::size_t idx[4] = {i, i | m0, i | m1, i | m0 | m1};
        Cmplx in[4];
        for (int k = 0; k < 4; ++k) in[k] = amps_[idx[k]];
        for (int r = 0; r < 4; ++r) {
            Cmplx acc{};
            for (int c = 0; c < 4; ++c) acc += u(r, c) * in[c];
            amps_[idx[r]] = acc;
        }
    }
}

StateVector basis_state(int n_qubits, std::string_view bits) {
    if (static_cast<int>(bits.size()) != n_qubits)
        throw std::invalid_argument("basis_state: bitstring length does not match qubit count");
    std::size_t index = 0;
    for (int k = 0; k < n_qubits; ++k) {
        const char ch = bits[static_cast<std::size_t>(k)];
        if (ch != '0' && ch != '1')
            throw std::invalid_argument("basis_state: bitstring must contain only 0/1");
        if (ch == '1') index |= std::size_t{1} << k;
    }
    StateVector s(n_qubits);
    s.set_amp(0, Cmplx{});
    s.set_amp(index, 1.0);
    return s;
}

Cmplx inner(const StateVector& a, const StateVector& b) {
    if (a.n_qubits() != b.n_qubits())
        throw std::invalid_argument("inner: states have different qubit counts");
    Cmplx acc{};
    for (std::size_t i = 0; i < a.dim(); ++i) acc += std::conj(a.amps()[i]) * b.amps()[i];
    return acc;
}

BlochVector reduced_bloch(const StateVector& s, int qubit) {
    check_qubit(qubit, s.n_qubits(), "reduced_bloch");
    const std::size_t mask = std::size_t{1} << qubit;
    BlochVector r;
    Cmplx cross{};  // sum over conj(a_{bit=0}) * a_{bit=1}
    for (std::size_t i = 0; i < s.dim(); ++i) {
        const double p = std::norm(s.amps()[i]);
        r.z += (i & mask) ? -p : p;
        if (!(i & mask)) cross += std::conj(s.amps()[i]) * s.amps()[i | mask];
    }
    r.x = 2.0 * cross.real();
    r.y = 2.0 * cross.imag();
    return r;
}

std::vector<double> marginal_probabilities(const StateVector& s, const std::vector<int>& qubits) {
    if (qubits.empty())
        throw std::invalid_argument("marginal_probabilities: no qubits selected");
    for (int q : qubits) check_qubit(q, s.n_qubits(), "marginal_probabilities");
    std::vector<double> probs(std::size_t{1} << qubits.size(), 0.0);
    for (std::size_t i = 0; i < s.dim(); ++i) {
        std::size_t outcome = 0;
        for (std::size_t j = 0; j < qubits.size(); ++j)
            if (i & (std::size_t{1} << qubits[j])) outcome |= std::size_t{1} << j;
        probs[outcome] += std::norm(s.amps()[i]);
    }
    return probs;
}

}  // namespace xxzsim
