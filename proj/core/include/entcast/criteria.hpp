#pragma once

#include "entcast/broadcasting.hpp"
#include "entcast/states.hpp"

namespace entcast {

/// (r, s, T) of a two-qubit state: rho = (I@I + r.sigma@I + I@s.sigma
/// + sum t_mn sigma_m@sigma_n)/4, with t_mn = Tr(rho sigma_m@sigma_n).
struct BlochDecomposition {
    Eigen::Vector3d r;
    Eigen::Vector3d s;
    Eigen::Matrix3d t;
};

BlochDecomposition bloch_decompose(const DensityOperator& rho);

/// Rebuild the 4x4 matrix from a Bloch decomposition (validation helper).
ComplexMatrix bloch_reconstruct(const BlochDecomposition& b);

struct PptResult {
    bool separable;        // min partial-transpose eigenvalue >= -1e-10
    double min_eigenvalue;
};

/// Peres-Horodecki test; necessary and sufficient for two qubits.
PptResult ppt_separable(const DensityOperator& rho);

/// Three-valued verdict with a +-band around zero, for probing states that sit
/// exactly on an analytic separability boundary.
enum class PptVerdict { separable, boundary, inseparable };
PptVerdict ppt_verdict(const DensityOperator& rho, double band = 1e-6);
const char* to_string(PptVerdict v);

/// M(rho) = lambda_2 + lambda_3 of T^T T. The CHSH inequality is violated iff
/// M(rho) > 1.
double chsh_M(const DensityOperator& rho);

struct TeleportationUsefulness {
    double n;      // sum of singular values of T
    double f_max;  // (1 + n/3)/2
};

/// N(rho) criterion: the state is useful as a standard-teleportation channel
/// iff n > 1, with maximal teleportation fidelity (1 + n/3)/2.
TeleportationUsefulness teleportation_N(const DensityOperator& rho);

/// Closed interval for |alpha|^2, possibly empty. All windows have the form
/// (1 +- sqrt(1-g))/2 and are symmetric about 1/2.
struct AlphaWindow {
    bool empty;
    double lo;
    double hi;

    bool contains(double alpha_sq) const { return !empty && alpha_sq >= lo && alpha_sq <= hi; }
};

/// |alpha|^2 window where the kept pair (a1,b1) is inseparable:
/// g = R^4(2-6R+5R^2)^2 / (4(1-2R)^4(1-R)^4); empty for R past root_x().
AlphaWindow window_a1b1(Reflectivity r);

/// |alpha|^2 window where the transmitted pair (c,d) is inseparable:
/// g = (1-2R)^4(1-2R+2R^2)^2 / (4R^4(1-R)^4).
AlphaWindow window_cd(Reflectivity r);

/// |alpha|^2 window where the cross pair (a1,c) is separable:
/// g = 4R^2(1-2R)^2 / (1-R)^4.
AlphaWindow window_a1c(Reflectivity r);

/// Combined validity window for broadcasting: for R in (r_lo, 1/3] the binding
/// constraint is the (c,d) window, for R in (1/3, root_x()) the (a1,b1) window;
/// empty outside (r_lo, root_x()) with r_lo = 1/2 - sqrt(-9+6 sqrt 3)/6.
AlphaWindow broadcast_condition(Reflectivity r);

/// Lower end of the R-range where the transmitted pair can be inseparable.
double broadcast_r_lower();

/// Root of 3R^4 - 18R^3 + 24R^2 - 12R + 2 in (1/3, 1/2): the largest
/// reflectivity for which the kept pair can remain inseparable.
double root_x();

}  // namespace entcast
