#pragma once

#include <stdexcept>
#include <string>

namespace mckay {

// Bad input: violated precondition, failed invariant, parse failure.
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Enumeration budget exhausted before the computation finished.
struct cap_exceeded : domain_error {
    explicit cap_exceeded(const std::string& what) : domain_error(what) {}
};

// A structural assertion failed mid-algorithm (e.g. a segment crossing
// outside the lattice).  These indicate a bug or an input outside the
// theory, never a recoverable user mistake.
struct internal_error : std::runtime_error {
    explicit internal_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace mckay
