#pragma once

#include <stdexcept>
#include <string>

namespace entcast {

enum class Errc {
    dimension_mismatch,
    invalid_argument,
    not_normalized,
    not_hermitian,
    not_positive,
    duplicate_label,
    unknown_label,
    bad_permutation,
    zero_probability,
    degenerate_state,
    io_error,
};

const char* to_string(Errc code) noexcept;

/// Exception carrying a machine-readable error code and a human-readable message.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& msg) { throw Error(code, msg); }

inline const char* to_string(Errc code) noexcept {
    switch (code) {
        case Errc::dimension_mismatch: return "dimension mismatch";
        case Errc::invalid_argument: return "invalid argument";
        case Errc::not_normalized: return "not normalized";
        case Errc::not_hermitian: return "not hermitian";
        case Errc::not_positive: return "not positive semidefinite";
        case Errc::duplicate_label: return "duplicate label";
        case Errc::unknown_label: return "unknown label";
        case Errc::bad_permutation: return "bad permutation";
        case Errc::zero_probability: return "zero probability";
        case Errc::degenerate_state: return "degenerate state";
        case Errc::io_error: return "i/o error";
    }
    return "unknown error";
}

}  // namespace entcast
