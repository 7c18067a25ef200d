#pragma once

#include <array>
#include <complex>
#include <cstddef>

namespace xxzsim {

using Cmplx = std::complex<double>;

/// Dense column-major-agnostic square matrix of fixed dimension N.
/// Element access is (row, col); storage is row-major.
template <int N>
struct SquareMat {
    std::array<Cmplx, static_cast<std::size_t>(N) * N> e{};

    Cmplx& operator()(int r, int c) { return e[static_cast<std::size_t>(r) * N + c]; }
    const Cmplx& operator()(int r, int c) const { return e[static_cast<std::size_t>(r) * N + c]; }

    static constexpr int dim() { return N; }

    static SquareMat identity() {
        SquareMat m;
        for (int i = 0; i < N; ++i) m(i, i) = 1.0;
        return m;
    }
};

using Mat2 = SquareMat<2>;
using Mat4 = SquareMat<4>;

template <int N>
SquareMat<N> mul(const SquareMat<N>& a, const SquareMat<N>& b) {
    SquareMat<N> out;
    for (int r = 0; r < N; ++r) {
        for (int k = 0; k < N; ++k) {
            const Cmplx ark = a(r, k);
            if (ark == Cmplx{}) continue;
            for (int c = 0; c < N; ++c) out(r, c) += ark * b(k, c);
        }
    }
    return out;
}

template <int N>
SquareMat<N> adjoint(const SquareMat<N>& a) {
    SquareMat<N> out;
    for (int r = 0; r < N; ++r)
        for (int c = 0; c < N; ++c) out(r, c) = std::conj(a(c, r));
    return out;
}

template <int N>
SquareMat<N> add(const SquareMat<N>& a, const SquareMat<N>& b) {
    SquareMat<N> out;
    for (std::size_t i = 0; i < a.e.size(); ++i) out.e[i] = a.e[i] + b.e[i];
    return out;
}

template <int N>
SquareMat<N> scale(const SquareMat<N>& a, Cmplx factor) {
    SquareMat<N> out;
    for (std::size_t i = 0; i < a.e.size(); ++i) out.e[i] = factor * a.e[i];
    return out;
}

template <int N>
double max_abs_diff(const SquareMat<N>& a, const SquareMat<N>& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.e.size(); ++i) worst = std::max(worst, std::abs(a.e[i] - b.e[i]));
    return worst;
}

/// max |(U†U − I)_{rc}|; zero for an exactly unitary matrix.
template <int N>
double unitarity_defect(const SquareMat<N>& u) {
    return max_abs_diff(mul(adjoint(u), u), SquareMat<N>::identity());
}

Cmplx trace(const Mat4& m);

/// Tensor product of two single-qubit operators over a qubit pair.
/// `low` acts on the first target (least significant bit of the pair index),
/// `high` on the second, so the pair index is bit_low + 2*bit_high.
Mat4 tensor2(const Mat2& low, const Mat2& high);

struct SymEig4 {
    std::array<double, 4> values{};
    Mat4 vectors;  // column k is the eigenvector for values[k]
};

/// Cyclic Jacobi diagonalization of a real symmetric 4x4 matrix.
/// The input is validated: imaginary parts and asymmetry beyond 1e-12
/// are rejected (the couplings this library exponentiates are always
/// real symmetric in the computational basis).
SymEig4 sym_eig4(const Mat4& m);

}  // namespace xxzsim
