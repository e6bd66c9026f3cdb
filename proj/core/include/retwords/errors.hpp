#pragma once

#include <stdexcept>
#include <string>

namespace retwords {

// Domain failure taxonomy. Codes are stable identifiers used in the CLI's
// machine-readable error output.
enum class Errc {
    invalid_argument,
    bad_config,
    radicand_mismatch,
    regularity_violation,
    horizon_exceeded,
    no_occurrence,
    not_a_factor,
    not_reducible,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::invalid_argument: return "invalid-argument";
        case Errc::bad_config: return "bad-config";
        case Errc::radicand_mismatch: return "radicand-mismatch";
        case Errc::regularity_violation: return "regularity-violation";
        case Errc::horizon_exceeded: return "horizon-exceeded";
        case Errc::no_occurrence: return "no-occurrence";
        case Errc::not_a_factor: return "not-a-factor";
        case Errc::not_reducible: return "not-reducible";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    Errc code() const { return code_; }
    const char* code_name() const { return errc_name(code_); }

private:
    Errc code_;
};

}  // namespace retwords
