#pragma once

#include "entcast/cloning.hpp"
#include "entcast/states.hpp"

namespace entcast {

struct BroadcastFidelities {
    double f_a1b1;
    double f_cd;
};

/// Outcome of one conditional broadcast: the coincidence amplitude lambda_d,
/// the normalized six-qubit coincidence state phi_d on labels
/// (a1,a2,c,b1,b2,d), and the four pairwise reduced states.
struct BroadcastResult {
    Reflectivity r;
    Complex alpha;
    Complex beta;
    double lambda_d;
    double lambda_s;
    PureState phi_d;
    DensityOperator rho_a1b1;
    DensityOperator rho_cd;
    DensityOperator rho_a1c;
    DensityOperator rho_b1d;
};

/// Coincidence-basis action of an unbalanced beam splitter on the two-photon
/// polarization state: (1-2R) I + 2R |Psi-><Psi-|. Identity at R=0, singlet
/// projector at R=1/2.
ComplexMatrix pi_operator(Reflectivity r);

/// (alpha|00> + beta|11>)_{a1,b1} x |Psi->_{a2,c} x |Psi->_{b2,d}, reordered to
/// label order (a1,a2,c,b1,b2,d).
PureState build_input_state(Complex alpha, Complex beta);

/// Apply the coincidence operator at both stations, record lambda_d, normalize,
/// and take the four pairwise partial traces.
///
/// lambda convention: the two 1/sqrt(2) singlet normalizations are absorbed
/// into the coincidence expansion, so lambda_d = 4(1-3R+3R^2)^2 and the
/// symmetric point R=1/3 reads lambda_d = 4/9, lambda_s = 5/9.
BroadcastResult run_broadcast(Complex alpha, Complex beta, Reflectivity r);

/// Direct 18-term expansion of the coincidence state with
/// lambda_d = 4(1-3R+3R^2)^2; equals run_broadcast's phi_d up to global phase.
PureState phi_d_explicit(Complex alpha, Complex beta, Reflectivity r);

/// Closed form of the kept pair (a1,b1):
///   [4(1-2R)^2(1-R)^2 |psi><psi| + (R^4 + 4(1-2R)(1-R)R^2|alpha|^2)|00><00|
///    + (R^4 + 4(1-2R)(1-R)R^2|beta|^2)|11><11|
///    + R^2(2-6R+5R^2)(|01><01| + |10><10|)] / (4(1-3R+3R^2)^2).
DensityOperator closed_form_rho_a1b1(Complex alpha, Complex beta, Reflectivity r);

/// Closed form of the transmitted pair (c,d); same structure with coefficients
/// 4R^2(1-R)^2, (1-2R)^4 + 4R(1-R)(1-2R)^2|.|^2 and (1-2R)^2(1-2R+2R^2).
DensityOperator closed_form_rho_cd(Complex alpha, Complex beta, Reflectivity r);

/// Closed form of the cross pair (a1,c) = (b1,d):
///   [(1-R)^2|alpha|^2|00><00| + (1-R)^2|beta|^2|11><11| + 2R(1-2R)|psi+><psi+|
///    + ((1-4R+3R^2)|alpha|^2 + R(3R-1))|01><01|
///    + ((1-4R+3R^2)|beta|^2 + R(3R-1))|10><10|] / (2(1-3R+3R^2)).
DensityOperator closed_form_rho_a1c(Complex alpha, Complex beta, Reflectivity r);

/// Closed-form fidelities of both output pairs against the input pair.
BroadcastFidelities broadcast_fidelities(Complex alpha, Complex beta, Reflectivity r);

}  // namespace entcast
