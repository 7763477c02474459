#include "entcast/protocol_runner.hpp"

#include <cmath>

namespace entcast {

namespace {

void check_channel(const DensityOperator& channel) {
    if (channel.dims() != std::vector<int>{2, 2}) {
        raise(Errc::dimension_mismatch, "teleportation channel must be a two-qubit state");
    }
}

// Teleporting through a pure Bell channel maps the input by a fixed
// Pauli-like unitary per outcome; the correction is its inverse. Derived
// numerically so the result is tied to this library's Bell phase conventions.
std::array<ComplexMatrix, 4> corrections_for_bell(BellKind channel_kind) {
    const ComplexVector chan = bell_vector(channel_kind);
    const auto basis = bell_basis();

    std::array<ComplexMatrix, 4> corrections;
    for (int k = 0; k < 4; ++k) {
        // Columns of the per-outcome map: project (e_j x chan) on the outcome.
        ComplexMatrix v(2, 2);
        for (int j = 0; j < 2; ++j) {
            ComplexVector joint = ComplexVector::Zero(8);
            for (int c = 0; c < 4; ++c) joint(j * 4 + c) = chan(c);
            for (int r = 0; r < 2; ++r) {
                Complex sum = 0;
                for (int a = 0; a < 2; ++a) {
                    for (int b = 0; b < 2; ++b) {
                        sum += std::conj(basis[k](a * 2 + b)) * joint(a * 4 + b * 2 + r);
                    }
                }
                v(r, j) = sum;
            }
        }
        // v is proportional to a unitary with |det| = 1/2 scaling; normalize.
        const double scale = std::sqrt((v.adjoint() * v).trace().real() / 2.0);
        corrections[k] = v.adjoint() / scale;
    }
    return corrections;
}

}  // namespace

ComplexVector haar_random_qubit(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexVector v(2);
    v(0) = Complex(gauss(rng), gauss(rng));
    v(1) = Complex(gauss(rng), gauss(rng));
    v /= v.norm();
    return v;
}

std::array<ComplexMatrix, 4> standard_corrections_for(const DensityOperator& channel) {
    check_channel(channel);
    BellKind dominant = BellKind::PhiPlus;
    double best = -1.0;
    for (BellKind kind : all_bell_kinds()) {
        const ComplexVector v = bell_vector(kind);
        const double overlap = pure_fidelity(channel.matrix(), v);
        if (overlap > best + 1e-12) {
            best = overlap;
            dominant = kind;
        }
    }
    return corrections_for_bell(dominant);
}

double simulate_standard_teleportation(const DensityOperator& channel,
                                       const ComplexVector& input) {
    check_channel(channel);
    if (input.size() != 2 || std::abs(input.norm() - 1.0) > kStructuralTol) {
        raise(Errc::not_normalized, "teleportation input must be a unit-norm qubit");
    }

    const auto corrections = standard_corrections_for(channel);
    const ComplexMatrix joint = kron(ComplexMatrix(input * input.adjoint()), channel.matrix());
    const auto basis = bell_basis();

    double fidelity = 0.0;
    double total_probability = 0.0;
    for (int k = 0; k < 4; ++k) {
        const ComplexMatrix projector =
            kron(ComplexMatrix(basis[k] * basis[k].adjoint()), identity2());
        const ComplexMatrix projected = projector * joint * projector;
        const double p = projected.trace().real();
        total_probability += p;
        if (p < 1e-14) continue;
        const ComplexMatrix receiver = partial_trace(projected, {2, 2, 2}, {2}) / p;
        const ComplexMatrix corrected = corrections[k] * receiver * corrections[k].adjoint();
        fidelity += p * pure_fidelity(corrected, input);
    }
    if (std::abs(total_probability - 1.0) > kStructuralTol) {
        raise(Errc::not_normalized, "teleportation outcome probabilities do not sum to one");
    }
    return fidelity;
}

MonteCarloResult monte_carlo_teleportation_fidelity(const DensityOperator& channel,
                                                    long n_samples, std::uint64_t seed) {
    check_channel(channel);
    if (n_samples < 100) {
        raise(Errc::invalid_argument, "monte_carlo_teleportation_fidelity: need >= 100 samples");
    }

    std::mt19937_64 rng(seed);
    double sum = 0.0;
    double sum_sq = 0.0;
    for (long i = 0; i < n_samples; ++i) {
        const double f = simulate_standard_teleportation(channel, haar_random_qubit(rng));
        sum += f;
        sum_sq += f * f;
    }
    const double mean = sum / n_samples;
    const double var = std::max(0.0, sum_sq / n_samples - mean * mean);
    return MonteCarloResult{mean, std::sqrt(var / n_samples), n_samples, seed};
}

}  // namespace entcast
