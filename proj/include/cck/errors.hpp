#ifndef CCK_ERRORS_HPP
#define CCK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cck {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad user-facing input: malformed matrices, type strings, sequences.
struct InvalidInput : Error {
    using Error::Error;
};

// The mutation class is (or may be) infinite; no result produced.
struct NotFiniteType : Error {
    using Error::Error;
};

// A search hit its node budget before reaching a conclusion.
struct CapExhausted : Error {
    using Error::Error;
};

// Two independent computations of the same quantity disagree.
struct CrossCheckMismatch : Error {
    using Error::Error;
};

// An internal invariant failed (Laurent division inexact, sign
// coherence broken, duplicate variable in a cluster, ...).
struct EngineBug : Error {
    using Error::Error;
};

}  // namespace cck

#endif
