#include "entcast/telecloning.hpp"

#include <cmath>

namespace entcast {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

const std::vector<std::string>& receiver_labels() {
    static const std::vector<std::string> labels = {"B1", "B2", "B3", "B4", "B5", "B6"};
    return labels;
}

bool is_phi(BellKind kind) { return kind == BellKind::PhiPlus || kind == BellKind::PhiMinus; }

bool is_plus(BellKind kind) { return kind == BellKind::PhiPlus || kind == BellKind::PsiPlus; }

PureState apply_recovery(const PureState& state, const std::array<RecoveryOp, 6>& ops) {
    ComplexMatrix full = recovery_matrix(ops[0]);
    for (int i = 1; i < 6; ++i) full = kron(full, recovery_matrix(ops[i]));
    ComplexVector out = full * state.amplitudes();
    return PureState(state.labels(), std::move(out));
}

TelecloningRun finish_run(const PureState& joint, BellKind first, BellKind second,
                          ProtocolTranscript transcript) {
    const auto basis = bell_basis();
    const int k1 = static_cast<int>(first);
    const int k2 = static_cast<int>(second);

    const MeasurementOutcome m1 = measure_in_basis(joint, "A1", "A1p", basis, k1);
    const MeasurementOutcome m2 = measure_in_basis(m1.post_state, "A2", "A2p", basis, k2);
    const double probability = m1.probability * m2.probability;

    transcript.add("A1", EventKind::measurement, to_string(first), m1.probability);
    transcript.add("A2", EventKind::measurement, to_string(second), m2.probability);
    transcript.add("A1", EventKind::classical_send, to_string(first));
    transcript.add("A2", EventKind::classical_send, to_string(second));
    for (const auto& rx : receiver_labels()) {
        transcript.add(rx, EventKind::classical_receive, to_string(first));
        transcript.add(rx, EventKind::classical_receive, to_string(second));
    }

    const RecoveryPlan plan = recovery_plan(first, second);
    for (int i = 0; i < 6; ++i) {
        transcript.add(receiver_labels()[i], EventKind::local_op, to_string(plan.ops[i]));
    }

    PureState recovered = apply_recovery(m2.post_state, plan.ops);
    return TelecloningRun{{first, second}, probability, m2.post_state, std::move(recovered),
                          std::move(transcript)};
}

PureState joint_with_channel(Complex alpha, Complex beta, CloneParams params) {
    ComplexVector pair = ComplexVector::Zero(4);
    pair(0) = alpha;
    pair(3) = beta;
    const PureState input({"A1", "A2"}, std::move(pair));
    const TelecloningChannel channel = build_channel(params);
    return tensor({input, channel.state});
}

}  // namespace

TelecloningChannel build_channel(CloneParams params) {
    const PureState eta0 = apply_cloner_d4(params, 1.0, 0.0);
    const PureState eta1 = apply_cloner_d4(params, 0.0, 1.0);

    ComplexVector amps = ComplexVector::Zero(256);
    amps.segment(0, 64) = kInvSqrt2 * eta0.amplitudes();    // |00> branch
    amps.segment(192, 64) = kInvSqrt2 * eta1.amplitudes();  // |11> branch

    std::vector<std::string> labels = {"A1p", "A2p"};
    labels.insert(labels.end(), receiver_labels().begin(), receiver_labels().end());
    return TelecloningChannel{params, PureState(std::move(labels), std::move(amps))};
}

const char* to_string(RecoveryOp op) {
    switch (op) {
        case RecoveryOp::identity: return "I";
        case RecoveryOp::pauli_z: return "Z";
        case RecoveryOp::pauli_x: return "X";
        case RecoveryOp::pauli_xz: return "XZ";
    }
    return "?";
}

const ComplexMatrix& recovery_matrix(RecoveryOp op) {
    static const ComplexMatrix xz = pauli_x() * pauli_z();
    switch (op) {
        case RecoveryOp::identity: return identity2();
        case RecoveryOp::pauli_z: return pauli_z();
        case RecoveryOp::pauli_x: return pauli_x();
        case RecoveryOp::pauli_xz: return xz;
    }
    return identity2();
}

RecoveryPlan recovery_plan(BellKind first, BellKind second) {
    RecoveryPlan plan{{first, second},
                      {RecoveryOp::identity, RecoveryOp::identity, RecoveryOp::identity,
                       RecoveryOp::identity, RecoveryOp::identity, RecoveryOp::identity},
                      false};
    if (is_phi(first) != is_phi(second)) {
        plan.zero_probability = true;  // mixed parity never appears in the joint expansion
        return plan;
    }
    const bool sign_flip = is_plus(first) != is_plus(second);
    if (is_phi(first)) {
        if (sign_flip) {
            plan.ops = {RecoveryOp::pauli_z, RecoveryOp::identity, RecoveryOp::pauli_z,
                        RecoveryOp::identity, RecoveryOp::pauli_z, RecoveryOp::identity};
        }
    } else {
        if (sign_flip) {
            plan.ops = {RecoveryOp::pauli_xz, RecoveryOp::pauli_x, RecoveryOp::pauli_xz,
                        RecoveryOp::pauli_x, RecoveryOp::pauli_xz, RecoveryOp::pauli_x};
        } else {
            plan.ops = {RecoveryOp::pauli_x, RecoveryOp::pauli_x, RecoveryOp::pauli_x,
                        RecoveryOp::pauli_x, RecoveryOp::pauli_x, RecoveryOp::pauli_x};
        }
    }
    return plan;
}

std::vector<TelecloningRun> run_telecloning_all(Complex alpha, Complex beta, CloneParams params) {
    const PureState joint = joint_with_channel(alpha, beta, params);
    const auto basis = bell_basis();

    std::vector<TelecloningRun> runs;
    runs.reserve(8);
    for (BellKind first : all_bell_kinds()) {
        const MeasurementOutcome m1 =
            measure_in_basis(joint, "A1", "A1p", basis, static_cast<int>(first));
        const auto probs2 = measurement_probabilities(m1.post_state, "A2", "A2p", basis);
        for (BellKind second : all_bell_kinds()) {
            if (probs2[static_cast<int>(second)] < 1e-12) continue;
            ProtocolTranscript transcript;
            runs.push_back(finish_run(joint, first, second, std::move(transcript)));
        }
    }
    return runs;
}

TelecloningRun run_telecloning_sampled(Complex alpha, Complex beta, CloneParams params,
                                       std::uint64_t seed) {
    const PureState joint = joint_with_channel(alpha, beta, params);
    const auto basis = bell_basis();

    std::mt19937_64 rng(seed);
    const int k1 = sample_outcome(joint, "A1", "A1p", basis, rng);
    const MeasurementOutcome m1 = measure_in_basis(joint, "A1", "A1p", basis, k1);
    const int k2 = sample_outcome(m1.post_state, "A2", "A2p", basis, rng);

    ProtocolTranscript transcript;
    transcript.seed = seed;
    return finish_run(joint, all_bell_kinds()[k1], all_bell_kinds()[k2], std::move(transcript));
}

ClonePair output_clones(Complex alpha, Complex beta, CloneParams params) {
    const PureState encoded = apply_cloner_d4(params, alpha, beta);
    return ClonePair{reduce(encoded, {"B1", "B2"}), reduce(encoded, {"B3", "B4"})};
}

namespace {

DensityOperator clone_closed_form(Complex alpha, Complex beta, double own, double other,
                                  std::string l1, std::string l2) {
    ComplexVector psi = ComplexVector::Zero(4);
    psi(0) = alpha;
    psi(3) = beta;
    const double denom = 1.0 + 3.0 * (own * own + other * other);
    ComplexMatrix m = (1.0 - other * other + 3.0 * own * own) * (psi * psi.adjoint()) +
                      other * other * ComplexMatrix::Identity(4, 4);
    return DensityOperator({std::move(l1), std::move(l2)}, {2, 2}, m / denom);
}

}  // namespace

DensityOperator closed_form_rho_b1b2(Complex alpha, Complex beta, CloneParams params) {
    return clone_closed_form(alpha, beta, params.p(), params.q(), "B1", "B2");
}

DensityOperator closed_form_rho_b3b4(Complex alpha, Complex beta, CloneParams params) {
    return clone_closed_form(alpha, beta, params.q(), params.p(), "B3", "B4");
}

ResourceReport resource_report() {
    // Teleport-then-clone-then-teleport: 1 ebit sender-to-sender plus 4 ebits
    // to the receivers, with 2 + 8 classical bits. The channel protocol uses
    // one shared ebit and one 2-bit message per sender.
    return ResourceReport{{5, 10}, {1, 4}};
}

}  // namespace entcast
