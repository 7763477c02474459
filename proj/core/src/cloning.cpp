#include "entcast/cloning.hpp"

#include <cmath>

namespace entcast {

CloneParams::CloneParams(double p) : p_(p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        raise(Errc::invalid_argument, "CloneParams: p must lie in [0, 1]");
    }
}

Reflectivity::Reflectivity(double r) : r_(r) {
    if (!(r >= 0.0 && r <= 0.5)) {
        raise(Errc::invalid_argument, "Reflectivity: R must lie in [0, 1/2]");
    }
}

FidelityPair filip_fidelities(Reflectivity r) {
    const double R = r.R();
    const double denom = 2.0 * (1.0 - 3.0 * R + 3.0 * R * R);
    return {(2.0 - 6.0 * R + 5.0 * R * R) / denom, (1.0 - 2.0 * R + 2.0 * R * R) / denom};
}

FidelityPair asym_cloner_fidelities(CloneParams params) {
    const double p = params.p();
    const double denom = 2.0 * (1.0 - p + p * p);
    return {(2.0 - 2.0 * p + p * p) / denom, (1.0 + p * p) / denom};
}

CloneParams p_from_R(Reflectivity r) { return CloneParams(r.R() / (1.0 - r.R())); }

ComplexMatrix cloner_isometry(CloneParams params, int d) {
    if (d < 2) {
        raise(Errc::invalid_argument, "cloner_isometry: dimension must be at least 2");
    }
    const double p = params.p();
    const double q = params.q();
    const double norm = std::sqrt(1.0 + (d - 1) * (p * p + q * q));

    auto idx = [d](int x, int y, int z) { return (static_cast<long>(x) * d + y) * d + z; };

    ComplexMatrix u = ComplexMatrix::Zero(static_cast<long>(d) * d * d, d);
    for (int j = 0; j < d; ++j) {
        u(idx(j, j, j), j) += 1.0;
        for (int r = 1; r < d; ++r) {
            const int k = (j + r) % d;
            u(idx(j, k, k), j) += p;
            u(idx(k, j, k), j) += q;
        }
        u.col(j) /= norm;
    }
    return u;
}

PureState apply_cloner_d4(CloneParams params, Complex alpha, Complex beta) {
    if (std::abs(std::norm(alpha) + std::norm(beta) - 1.0) > kStructuralTol) {
        raise(Errc::not_normalized, "apply_cloner_d4: |alpha|^2 + |beta|^2 must equal 1");
    }
    const ComplexMatrix u = cloner_isometry(params, 4);
    ComplexVector in = ComplexVector::Zero(4);
    in(0) = alpha;
    in(3) = beta;
    // A base-4 triple index coincides bit-for-bit with the 6-qubit index under
    // the pairwise encoding, so the column space maps directly onto B1..B6.
    ComplexVector out = u * in;
    return PureState({"B1", "B2", "B3", "B4", "B5", "B6"}, std::move(out));
}

}  // namespace entcast
