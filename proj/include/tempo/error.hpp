#pragma once

#include <stdexcept>
#include <string>

namespace tempo {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad configuration: unknown column, clashing names, unit mismatch.
struct ConfigError : Error {
    using Error::Error;
};

// Malformed input (CSV, XES, rule text, archive). Messages carry the location.
struct ParseError : Error {
    using Error::Error;
};

// Operation not legal in the current index state (e.g. ingest into a frozen index).
struct StateError : Error {
    using Error::Error;
};

// Within-case timestamp order violation during ingestion.
struct OrderError : StateError {
    using StateError::StateError;
};

} // namespace tempo
