#pragma once

#include <string>

#include "entcast/criteria.hpp"
#include "entcast/protocol_runner.hpp"
#include "entcast/states.hpp"
#include "entcast/telecloning.hpp"
#include "entcast/transcript.hpp"

namespace entcast {

/// {"labels": [...], "amplitudes": [[re, im], ...]}
std::string pure_state_to_json(const PureState& state);
PureState pure_state_from_json(const std::string& text);

/// Broadcast verdict report consumed by the CLI:
/// {R, alpha, M, N, F_max, ppt: {a1b1, cd, a1c}, windows: {...}}.
std::string verdict_report_json(const BroadcastResult& result);

/// Ordered protocol events plus the RNG seed when one was used.
std::string transcript_to_json(const ProtocolTranscript& transcript);

/// {p, fidelity_B1B2, fidelity_B3B4, closed_form_match}
std::string clone_report_json(double p, double fidelity_b1b2, double fidelity_b3b4,
                              bool closed_form_match);

struct TeleportMcReport {
    std::string channel;
    double n;
    double f_max_formula;
    MonteCarloResult mc;
};

/// One {channel, N, F_max_formula, F_mc, stderr, samples, seed} object per
/// report, in order.
std::string teleport_mc_reports_json(const std::vector<TeleportMcReport>& reports);

}  // namespace entcast
