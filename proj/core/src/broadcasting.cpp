#include "entcast/broadcasting.hpp"

#include <cmath>

namespace entcast {

namespace {

void check_pair_normalized(Complex alpha, Complex beta) {
    if (std::abs(std::norm(alpha) + std::norm(beta) - 1.0) > kStructuralTol) {
        raise(Errc::not_normalized, "broadcast: |alpha|^2 + |beta|^2 must equal 1");
    }
}

ComplexMatrix pair_projector(const ComplexVector& v) { return v * v.adjoint(); }

DensityOperator two_qubit_density(const std::string& l1, const std::string& l2, ComplexMatrix m) {
    return DensityOperator({l1, l2}, {2, 2}, std::move(m));
}

}  // namespace

ComplexMatrix pi_operator(Reflectivity r) {
    const double R = r.R();
    return (1.0 - 2.0 * R) * ComplexMatrix::Identity(4, 4) +
           2.0 * R * pair_projector(bell_vector(BellKind::PsiMinus));
}

PureState build_input_state(Complex alpha, Complex beta) {
    check_pair_normalized(alpha, beta);
    const PureState in = tensor({initial_pair(alpha, beta),
                                 bell_state(BellKind::PsiMinus, {"a2", "c"}),
                                 bell_state(BellKind::PsiMinus, {"b2", "d"})});
    return reorder(in, {"a1", "a2", "c", "b1", "b2", "d"});
}

BroadcastResult run_broadcast(Complex alpha, Complex beta, Reflectivity r) {
    const PureState input = build_input_state(alpha, beta);

    // Label order is (a1,a2,c,b1,b2,d), so both coincidence operators act on
    // adjacent factors.
    const ComplexMatrix pi = pi_operator(r);
    const ComplexMatrix op = kron(kron(kron(pi, identity2()), pi), identity2());

    ComplexVector raw = op * input.amplitudes();
    const double raw_norm_sq = raw.squaredNorm();
    if (raw_norm_sq < 1e-14) {
        raise(Errc::degenerate_state, "run_broadcast: coincidence amplitude vanished");
    }
    const double lambda_d = 4.0 * raw_norm_sq;
    raw /= std::sqrt(raw_norm_sq);

    PureState phi_d(input.labels(), std::move(raw));
    DensityOperator rho_a1b1 = reduce(phi_d, {"a1", "b1"});
    DensityOperator rho_cd = reduce(phi_d, {"c", "d"});
    DensityOperator rho_a1c = reduce(phi_d, {"a1", "c"});
    DensityOperator rho_b1d = reduce(phi_d, {"b1", "d"});

    return BroadcastResult{r,
                           alpha,
                           beta,
                           lambda_d,
                           1.0 - lambda_d,
                           std::move(phi_d),
                           std::move(rho_a1b1),
                           std::move(rho_cd),
                           std::move(rho_a1c),
                           std::move(rho_b1d)};
}

PureState phi_d_explicit(Complex alpha, Complex beta, Reflectivity r) {
    check_pair_normalized(alpha, beta);
    const double R = r.R();
    const double lambda_d = 4.0 * std::pow(1.0 - 3.0 * R + 3.0 * R * R, 2);

    const double w2 = (1.0 - 2.0 * R) * (1.0 - 2.0 * R);  // both photons transmitted twice
    const double t2 = (1.0 - R) * (1.0 - R);
    const double r2 = R * R;
    const double wt = (1.0 - 2.0 * R) * (1.0 - R);
    const double rw = R * (1.0 - 2.0 * R);
    const double rt = R * (1.0 - R);

    // Terms are written on label order (a1,a2,b1,b2,c,d); bit strings follow
    // the same order.
    struct Term {
        bool alpha_branch;
        const char* bits;
        double coeff;
    };
    const Term terms[] = {
        {true, "000011", w2},   {true, "010100", t2},   {true, "101000", r2},
        {true, "000110", -wt},  {true, "010001", -wt},  {true, "001010", rw},
        {true, "100001", rw},   {true, "011000", -rt},  {true, "100100", -rt},
        {false, "111100", w2},  {false, "101011", t2},  {false, "010111", r2},
        {false, "111001", -wt}, {false, "101110", -wt}, {false, "110101", rw},
        {false, "011110", rw},  {false, "100111", -rt}, {false, "011011", -rt},
    };

    ComplexVector amps = ComplexVector::Zero(64);
    for (const Term& t : terms) {
        long idx = 0;
        for (const char* c = t.bits; *c; ++c) idx = (idx << 1) | (*c == '1' ? 1 : 0);
        amps(idx) += (t.alpha_branch ? alpha : beta) * t.coeff;
    }
    amps /= std::sqrt(lambda_d);

    const PureState state({"a1", "a2", "b1", "b2", "c", "d"}, std::move(amps));
    return reorder(state, {"a1", "a2", "c", "b1", "b2", "d"});
}

DensityOperator closed_form_rho_a1b1(Complex alpha, Complex beta, Reflectivity r) {
    check_pair_normalized(alpha, beta);
    const double R = r.R();
    const double denom = 4.0 * std::pow(1.0 - 3.0 * R + 3.0 * R * R, 2);

    ComplexVector psi = ComplexVector::Zero(4);
    psi(0) = alpha;
    psi(3) = beta;

    ComplexMatrix m = 4.0 * std::pow(1.0 - 2.0 * R, 2) * std::pow(1.0 - R, 2) *
                      pair_projector(psi);
    const double diag_mix = 4.0 * (1.0 - 2.0 * R) * (1.0 - R) * R * R;
    m(0, 0) += std::pow(R, 4) + diag_mix * std::norm(alpha);
    m(3, 3) += std::pow(R, 4) + diag_mix * std::norm(beta);
    const double offmix = R * R * (2.0 - 6.0 * R + 5.0 * R * R);
    m(1, 1) += offmix;
    m(2, 2) += offmix;
    return two_qubit_density("a1", "b1", m / denom);
}

DensityOperator closed_form_rho_cd(Complex alpha, Complex beta, Reflectivity r) {
    check_pair_normalized(alpha, beta);
    const double R = r.R();
    const double denom = 4.0 * std::pow(1.0 - 3.0 * R + 3.0 * R * R, 2);

    ComplexVector psi = ComplexVector::Zero(4);
    psi(0) = alpha;
    psi(3) = beta;

    ComplexMatrix m = 4.0 * R * R * std::pow(1.0 - R, 2) * pair_projector(psi);
    const double diag_mix = 4.0 * R * (1.0 - R) * std::pow(1.0 - 2.0 * R, 2);
    m(0, 0) += std::pow(1.0 - 2.0 * R, 4) + diag_mix * std::norm(alpha);
    m(3, 3) += std::pow(1.0 - 2.0 * R, 4) + diag_mix * std::norm(beta);
    const double offmix = std::pow(1.0 - 2.0 * R, 2) * (1.0 - 2.0 * R + 2.0 * R * R);
    m(1, 1) += offmix;
    m(2, 2) += offmix;
    return two_qubit_density("c", "d", m / denom);
}

DensityOperator closed_form_rho_a1c(Complex alpha, Complex beta, Reflectivity r) {
    check_pair_normalized(alpha, beta);
    const double R = r.R();
    const double denom = 2.0 * (1.0 - 3.0 * R + 3.0 * R * R);

    ComplexMatrix m = 2.0 * R * (1.0 - 2.0 * R) * pair_projector(bell_vector(BellKind::PsiPlus));
    const double t2 = std::pow(1.0 - R, 2);
    m(0, 0) += t2 * std::norm(alpha);
    m(3, 3) += t2 * std::norm(beta);
    const double mid = 1.0 - 4.0 * R + 3.0 * R * R;
    const double shift = R * (3.0 * R - 1.0);
    m(1, 1) += mid * std::norm(alpha) + shift;
    m(2, 2) += mid * std::norm(beta) + shift;
    return two_qubit_density("a1", "c", m / denom);
}

BroadcastFidelities broadcast_fidelities(Complex alpha, Complex beta, Reflectivity r) {
    check_pair_normalized(alpha, beta);
    const double R = r.R();
    const double denom = 4.0 * std::pow(1.0 - 3.0 * R + 3.0 * R * R, 2);
    const double quartic = std::norm(alpha) * std::norm(alpha) + std::norm(beta) * std::norm(beta);

    const double f_a1b1 = (4.0 * std::pow(1.0 - 2.0 * R, 2) * std::pow(1.0 - R, 2) +
                           std::pow(R, 4) +
                           4.0 * (1.0 - 2.0 * R) * (1.0 - R) * R * R * quartic) /
                          denom;
    const double f_cd = (4.0 * R * R * std::pow(1.0 - R, 2) + std::pow(1.0 - 2.0 * R, 4) +
                         4.0 * R * (1.0 - R) * std::pow(1.0 - 2.0 * R, 2) * quartic) /
                        denom;
    return {f_a1b1, f_cd};
}

}  // namespace entcast
