#include "entcast/transcript.hpp"

namespace entcast {

std::optional<std::string> transcript_violation(const ProtocolTranscript& t) {
    for (size_t i = 0; i < t.events.size(); ++i) {
        const TranscriptEvent& e = t.events[i];
        if (e.step != static_cast<int>(i)) {
            return "event " + std::to_string(i) + " has step index " + std::to_string(e.step);
        }
        if (e.kind == EventKind::measurement && !e.probability.has_value()) {
            return "measurement event " + std::to_string(i) + " is missing a probability";
        }
        if (e.kind == EventKind::classical_receive) {
            bool matched = false;
            for (size_t j = 0; j < i; ++j) {
                if (t.events[j].kind == EventKind::classical_send &&
                    t.events[j].payload == e.payload) {
                    matched = true;
                    break;
                }
            }
            if (!matched) {
                return "classical_receive event " + std::to_string(i) +
                       " has no prior matching classical_send";
            }
        }
    }
    return std::nullopt;
}

}  // namespace entcast
