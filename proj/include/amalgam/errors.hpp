#pragma once

#include <stdexcept>
#include <string>

namespace amalgam {

/// Error categories, mapped to CLI exit codes by the driver.
enum class ErrorKind {
    invalid_parameter,     // malformed input to a constructor
    invariant_violation,   // a structural invariant failed exhaustive checking
    hypothesis_violation,  // operation applied outside its stated hypotheses
    not_a_homomorphism,    // candidate map fails a hom axiom (witness in message)
    not_local,             // local-ring query on a non-local ring
    empty_spectrum,        // spectrum query on the zero ring
    resource_limit,        // carrier size would exceed the configured cap
    witness_failure,       // an exact-arithmetic witness computation failed
    usage,                 // bad CLI arguments / unknown suite
};

class AmalgamError : public std::runtime_error {
  public:
    AmalgamError(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw AmalgamError(kind, message);
}

/// Outcome of a single verification step. `ok == false` carries a concrete,
/// re-checkable witness of the failure.
struct CheckResult {
    bool ok = true;
    std::string witness;

    static CheckResult pass() { return {true, {}}; }
    static CheckResult fail(std::string w) { return {false, std::move(w)}; }
    explicit operator bool() const { return ok; }
};

}  // namespace amalgam
