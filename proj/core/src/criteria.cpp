#include "entcast/criteria.hpp"

#include <cmath>
#include <limits>

namespace entcast {

namespace {

void check_two_qubit(const DensityOperator& rho, const char* where) {
    if (rho.dims() != std::vector<int>{2, 2}) {
        raise(Errc::dimension_mismatch, std::string(where) + ": two-qubit state required");
    }
}

const std::array<const ComplexMatrix*, 3>& paulis() {
    static const std::array<const ComplexMatrix*, 3> s = {&pauli_x(), &pauli_y(), &pauli_z()};
    return s;
}

double real_trace(const ComplexMatrix& m) { return m.trace().real(); }

AlphaWindow window_from_g(double g) {
    if (!(g <= 1.0)) return {true, 0.0, 0.0};
    const double half_width = 0.5 * std::sqrt(1.0 - g);
    return {false, 0.5 - half_width, 0.5 + half_width};
}

// g-factors of the three separability windows. A vanishing coherence weight
// (denominator) with nonvanishing mixture weight means the window is empty.
double g_a1b1(double R) {
    const double num = std::pow(R, 4) * std::pow(2.0 - 6.0 * R + 5.0 * R * R, 2);
    const double den = 4.0 * std::pow(1.0 - 2.0 * R, 4) * std::pow(1.0 - R, 4);
    if (den <= 0.0) return std::numeric_limits<double>::infinity();
    return num / den;
}

double g_cd(double R) {
    const double num = std::pow(1.0 - 2.0 * R, 4) * std::pow(1.0 - 2.0 * R + 2.0 * R * R, 2);
    const double den = 4.0 * std::pow(R, 4) * std::pow(1.0 - R, 4);
    if (den <= 0.0) return std::numeric_limits<double>::infinity();
    return num / den;
}

double g_a1c(double R) {
    return 4.0 * R * R * std::pow(1.0 - 2.0 * R, 2) / std::pow(1.0 - R, 4);
}

}  // namespace

BlochDecomposition bloch_decompose(const DensityOperator& rho) {
    check_two_qubit(rho, "bloch_decompose");
    BlochDecomposition b;
    const ComplexMatrix& m = rho.matrix();
    for (int i = 0; i < 3; ++i) {
        b.r(i) = real_trace(m * kron(*paulis()[i], identity2()));
        b.s(i) = real_trace(m * kron(identity2(), *paulis()[i]));
        for (int j = 0; j < 3; ++j) {
            b.t(i, j) = real_trace(m * kron(*paulis()[i], *paulis()[j]));
        }
    }
    return b;
}

ComplexMatrix bloch_reconstruct(const BlochDecomposition& b) {
    ComplexMatrix m = ComplexMatrix::Identity(4, 4);
    for (int i = 0; i < 3; ++i) {
        m += b.r(i) * kron(*paulis()[i], identity2());
        m += b.s(i) * kron(identity2(), *paulis()[i]);
        for (int j = 0; j < 3; ++j) {
            m += b.t(i, j) * kron(*paulis()[i], *paulis()[j]);
        }
    }
    return m / 4.0;
}

PptResult ppt_separable(const DensityOperator& rho) {
    check_two_qubit(rho, "ppt_separable");
    const ComplexMatrix pt = partial_transpose(rho.matrix(), rho.dims(), 1);
    const double min_eig = hermitian_eigenvalues(pt).front();
    return {min_eig >= -kStructuralTol, min_eig};
}

PptVerdict ppt_verdict(const DensityOperator& rho, double band) {
    const double min_eig = ppt_separable(rho).min_eigenvalue;
    if (min_eig < -band) return PptVerdict::inseparable;
    if (min_eig > band) return PptVerdict::separable;
    return PptVerdict::boundary;
}

const char* to_string(PptVerdict v) {
    switch (v) {
        case PptVerdict::separable: return "separable";
        case PptVerdict::boundary: return "boundary";
        case PptVerdict::inseparable: return "inseparable";
    }
    return "?";
}

double chsh_M(const DensityOperator& rho) {
    const Eigen::Matrix3d t = bloch_decompose(rho).t;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> solver(t.transpose() * t,
                                                          Eigen::EigenvaluesOnly);
    const auto& ev = solver.eigenvalues();  // ascending
    return ev(1) + ev(2);
}

TeleportationUsefulness teleportation_N(const DensityOperator& rho) {
    const Eigen::Matrix3d t = bloch_decompose(rho).t;
    const Eigen::JacobiSVD<Eigen::Matrix3d> svd(t);
    const double n = svd.singularValues().sum();
    return {n, 0.5 * (1.0 + n / 3.0)};
}

AlphaWindow window_a1b1(Reflectivity r) { return window_from_g(g_a1b1(r.R())); }

AlphaWindow window_cd(Reflectivity r) { return window_from_g(g_cd(r.R())); }

AlphaWindow window_a1c(Reflectivity r) { return window_from_g(g_a1c(r.R())); }

AlphaWindow broadcast_condition(Reflectivity r) {
    const double R = r.R();
    if (R <= broadcast_r_lower() || R >= root_x()) return {true, 0.0, 0.0};
    if (R <= 1.0 / 3.0) return window_cd(r);
    return window_a1b1(r);
}

double broadcast_r_lower() { return 0.5 - std::sqrt(-9.0 + 6.0 * std::sqrt(3.0)) / 6.0; }

double root_x() {
    auto poly = [](double R) {
        return 3.0 * std::pow(R, 4) - 18.0 * std::pow(R, 3) + 24.0 * R * R - 12.0 * R + 2.0;
    };
    double lo = 1.0 / 3.0;  // poly > 0
    double hi = 0.5;        // poly < 0
    while (hi - lo > 1e-13) {
        const double mid = 0.5 * (lo + hi);
        if (poly(mid) > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace entcast
