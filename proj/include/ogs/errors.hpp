#pragma once

#include <stdexcept>
#include <string>

namespace ogs {

// An element was handed to a group it does not belong to.
struct FamilyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Magnus comparison reached the degree cap without separating two words
// that are not identical as reduced words. Never silently EQ.
struct UndecidedOrderError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Ball generation exceeded its element cap.
struct CapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A theorem-mode hypothesis does not hold for the given input.
struct HypothesisError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed JSON, malformed flags, or an argument outside an operation's domain.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An invariant an operation is required to assert failed; carries the
// serialized counterexample so the caller can file a certificate.
struct CounterexampleError : std::runtime_error {
    std::string payload;
    CounterexampleError(const std::string& what, std::string payload_json)
        : std::runtime_error(what), payload(std::move(payload_json)) {}
};

} // namespace ogs
