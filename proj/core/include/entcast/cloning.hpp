#pragma once

#include "entcast/states.hpp"

namespace entcast {

/// Asymmetry parameter of the universal cloning machine, p in [0,1], q = 1-p.
class CloneParams {
public:
    explicit CloneParams(double p);
    double p() const { return p_; }
    double q() const { return 1.0 - p_; }

private:
    double p_;
};

/// Beam-splitter reflectivity, restricted to [0, 1/2]; T = 1-R.
class Reflectivity {
public:
    explicit Reflectivity(double r);
    double R() const { return r_; }
    double T() const { return 1.0 - r_; }

private:
    double r_;
};

struct FidelityPair {
    double f_a;
    double f_b;
};

/// Output fidelities of the conditional beam-splitter cloner:
/// F_A = (2-6R+5R^2)/(2(1-3R+3R^2)), F_B = (1-2R+2R^2)/(2(1-3R+3R^2)).
FidelityPair filip_fidelities(Reflectivity r);

/// Output fidelities of the universal asymmetric cloner:
/// F_A = (2-2p+p^2)/(2(1-p+p^2)), F_B = (1+p^2)/(2(1-p+p^2)).
FidelityPair asym_cloner_fidelities(CloneParams params);

/// p = R/(1-R): the cloner asymmetry that reproduces the beam-splitter fidelities.
CloneParams p_from_R(Reflectivity r);

/// Isometry of the universal asymmetric cloning machine for a d-level input.
/// Column j is the image of |j>|00>:
///   (|jjj> + p sum_r |j,j+r,j+r> + q sum_r |j+r,j,j+r>) / sqrt(1+(d-1)(p^2+q^2))
/// with addition mod d. The result is d^3 x d with orthonormal columns.
ComplexMatrix cloner_isometry(CloneParams params, int d);

/// d=4 cloner applied to alpha|0> + beta|3>, with each 4-level system encoded
/// as a qubit pair (|0>->|00>, |1>->|01>, |2>->|10>, |3>->|11>). Returns the
/// 6-qubit state alpha*eta0 + beta*eta1 on labels B1..B6.
PureState apply_cloner_d4(CloneParams params, Complex alpha, Complex beta);

}  // namespace entcast
