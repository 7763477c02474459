#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace entcast {

enum class EventKind { local_op, measurement, classical_send, classical_receive };

const char* to_string(EventKind kind);

struct TranscriptEvent {
    int step;
    std::string actor;
    EventKind kind;
    std::string payload;
    std::optional<double> probability;  // measurement events only
};

/// Ordered log of local operations, measurement outcomes, and classical
/// messages of one protocol run.
struct ProtocolTranscript {
    std::optional<std::uint64_t> seed;  // absent for enumerated runs
    std::vector<TranscriptEvent> events;

    void add(std::string actor, EventKind kind, std::string payload,
             std::optional<double> probability = std::nullopt) {
        events.push_back({static_cast<int>(events.size()), std::move(actor), kind,
                          std::move(payload), probability});
    }
};

/// Checks transcript well-formedness: every classical_receive refers back to a
/// prior classical_send with the same payload, and measurement events carry a
/// probability. Returns an explanation for the first violation found.
std::optional<std::string> transcript_violation(const ProtocolTranscript& t);

inline const char* to_string(EventKind kind) {
    switch (kind) {
        case EventKind::local_op: return "local_op";
        case EventKind::measurement: return "measurement";
        case EventKind::classical_send: return "classical_send";
        case EventKind::classical_receive: return "classical_receive";
    }
    return "?";
}

}  // namespace entcast
