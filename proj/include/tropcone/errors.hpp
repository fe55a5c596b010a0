#pragma once

#include <stdexcept>
#include <string>

namespace tropcone {

// Malformed input files or text encodings.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// An operation was called outside its stated domain.
struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

// A self-check that should never fail did; signals a bug, not bad input.
struct InternalError : std::runtime_error {
    explicit InternalError(const std::string& what) : std::runtime_error(what) {}
};

// The polar candidate enumeration exceeded its configured cap.
struct CandidateCapExceeded : std::runtime_error {
    explicit CandidateCapExceeded(const std::string& what) : std::runtime_error(what) {}
};

} // namespace tropcone
