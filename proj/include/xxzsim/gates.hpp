#pragma once

#include "xxzsim/linalg.hpp"

namespace xxzsim {

enum class Axis { X, Y, Z };
enum class PairAxis { XX, YY, ZZ };

/// Two-spin XXZ model parameters, hbar = 1 throughout:
/// H = J (sx sx + sy sy + d sz sz).
struct ModelParams {
    double J = 1.0;  // coupling energy
    double d = 1.0;  // anisotropy of the zz coupling
    double t = 1.0;  // evolution time
};

/// Rotation angles of the two-qubit evolution gates,
/// alpha_x = alpha_y = 2 J t and alpha_z = 2 J d t for model-derived values.
struct GateAngles {
    double alpha_x = 0.0;
    double alpha_y = 0.0;
    double alpha_z = 0.0;
};

Mat2 pauli(Axis k);

/// Same-axis Pauli coupling sigma_k (x) sigma_k on a qubit pair.
Mat4 pair_coupling(PairAxis kk);

/// exp(-i angle sigma_axis / 2), the half-angle convention used for every
/// rotation gate in this library.
Mat2 rot_1q(Axis axis, double angle);

/// exp(-i angle sigma_k(x)sigma_k / 2) with the same half-angle convention,
/// so rot_2q(XX, 2Jt) realizes exp(-i J t sx sx).
Mat4 rot_2q(PairAxis axis, double angle);

GateAngles angles_from_model(const ModelParams& p);

/// The 4x4 XXZ Hamiltonian J (XX + YY + d ZZ), assembled from explicit
/// Pauli tensor products.
Mat4 xxz_hamiltonian(double J, double d);

/// H*t expressed through gate angles:
/// (alpha_x/2) XX + (alpha_y/2) YY + (alpha_z/2) ZZ.
Mat4 coupling_sum(const GateAngles& g);

}  // namespace xxzsim
