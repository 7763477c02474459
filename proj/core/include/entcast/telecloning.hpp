#pragma once

#include <cstdint>
#include <utility>

#include "entcast/cloning.hpp"
#include "entcast/states.hpp"
#include "entcast/transcript.hpp"

namespace entcast {

/// Pre-shared eight-qubit channel (|00> eta0 + |11> eta1)/sqrt(2) on labels
/// (A1p, A2p, B1..B6). A1p and A2p stay with the senders; B5, B6 hold the
/// ancillas.
struct TelecloningChannel {
    CloneParams params;
    PureState state;
};

TelecloningChannel build_channel(CloneParams params);

enum class RecoveryOp { identity, pauli_z, pauli_x, pauli_xz };

const char* to_string(RecoveryOp op);
const ComplexMatrix& recovery_matrix(RecoveryOp op);

/// Conditional single-qubit corrections for the six receivers, in label order
/// B1..B6, for one pair of Bell outcomes.
struct RecoveryPlan {
    std::pair<BellKind, BellKind> outcome;
    std::array<RecoveryOp, 6> ops;
    bool zero_probability;  // outcome pairs of mixed Phi/Psi parity never occur
};

RecoveryPlan recovery_plan(BellKind first, BellKind second);

struct TelecloningRun {
    std::pair<BellKind, BellKind> outcome;
    double probability;
    PureState pre_recovery;     // receiver state right after both measurements
    PureState receiver_state;   // after the conditional corrections
    ProtocolTranscript transcript;
};

/// Run the protocol on alpha|00> + beta|11> held by A1, A2: form the joint
/// state with the channel, Bell-measure (A1,A1p) and (A2,A2p), and apply the
/// recovery plan. Every realized outcome has probability 1/8 and ends with the
/// receivers in alpha*eta0 + beta*eta1 up to a global phase.
std::vector<TelecloningRun> run_telecloning_all(Complex alpha, Complex beta, CloneParams params);

/// Single run with pseudo-random outcomes; the seed is recorded in the
/// transcript and fixed seeds reproduce runs exactly.
TelecloningRun run_telecloning_sampled(Complex alpha, Complex beta, CloneParams params,
                                       std::uint64_t seed);

struct ClonePair {
    DensityOperator b1b2;
    DensityOperator b3b4;
};

/// Reduced states of the two receiver pairs after the protocol.
ClonePair output_clones(Complex alpha, Complex beta, CloneParams params);

/// Closed forms: rho_B1B2 = [(1-q^2+3p^2)|psi><psi| + q^2 I]/(1+3(p^2+q^2))
/// and the p<->q counterpart for rho_B3B4.
DensityOperator closed_form_rho_b1b2(Complex alpha, Complex beta, CloneParams params);
DensityOperator closed_form_rho_b3b4(Complex alpha, Complex beta, CloneParams params);

struct ResourceCost {
    int ebits;
    int cbits;
};

struct ResourceReport {
    ResourceCost naive;        // teleport-then-clone-then-teleport
    ResourceCost telecloning;  // this protocol
};

ResourceReport resource_report();

}  // namespace entcast
