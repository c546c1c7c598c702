#pragma once

#include <stdexcept>
#include <string>

namespace sievewalk {

// Argument outside the mathematical domain of an operation (e.g. l > n).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// A documented contract was violated (non-coprime moduli, inadmissible system,
// offset outside the sweep window, ...).
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// The request is valid but beyond what this build supports (e.g. exact mode
// above its size gate).
struct CapabilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed or unusable configuration input (files, CLI values).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace sievewalk
