#pragma once

#include <cstdint>
#include <random>

#include "entcast/states.hpp"

namespace entcast {

/// Haar-uniform single-qubit pure state: two complex Gaussian amplitudes,
/// normalized.
ComplexVector haar_random_qubit(std::mt19937_64& rng);

/// Correction unitaries for the standard teleportation protocol, indexed by
/// Bell outcome (all_bell_kinds order). The standard set {I, Z, X, XZ} is
/// assigned so that the channel's dominant Bell component teleports perfectly;
/// with a singlet channel this is the textbook assignment.
std::array<ComplexMatrix, 4> standard_corrections_for(const DensityOperator& channel);

/// Teleport `input` through the two-qubit `channel`: Bell-measure (input,
/// first channel qubit), apply the outcome correction on the second, and
/// average the fidelity to the input over all four outcomes.
double simulate_standard_teleportation(const DensityOperator& channel,
                                       const ComplexVector& input);

struct MonteCarloResult {
    double mean;
    double std_error;
    long samples;
    std::uint64_t seed;
};

/// Mean teleportation fidelity over Haar-random inputs. For channels whose
/// correlation matrix is diagonal in the Pauli basis (real Schmidt
/// coefficients), the mean matches the (1 + N/3)/2 formula within sampling
/// error.
MonteCarloResult monte_carlo_teleportation_fidelity(const DensityOperator& channel,
                                                    long n_samples, std::uint64_t seed);

}  // namespace entcast
