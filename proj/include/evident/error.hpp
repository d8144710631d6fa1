#pragma once
// Error reporting for the evident library.
//
// Every failure is an evident::Error carrying a stable ErrorCode. A few codes
// carry a payload (the offending total, input index, attribute list or line),
// exposed through the small subclasses below.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace evident {

enum class ErrorCode : std::uint8_t {
    // frame_algebra
    DuplicateAtom,
    EmptyFrame,
    TooManyAtoms,
    UnknownAtom,
    FrameMismatch,
    UnmappedAttribute,
    InvalidExpression,
    // evidence
    MassOnEmptySet,
    NotNormalized,
    NegativeMass,
    EmptyFocus,
    DegreeOutOfRange,
    MissingAtom,
    // combination
    TotalConflict,
    FactorOutOfRange,
    EmptyInput,
    // decision
    TrivialProposition,
    InvalidThreshold,
    // source_router
    ImpliesNotRoutable,
    EmptyShortlist,
    SchemaMismatch,
    TooFewParts,
    DuplicateSource,
    InvalidSource,
    // scenario_harness
    ParseError,
    UnsortedReports,
    InvalidWindow,
    InvalidParameter,
    EmptyTrace,
    Io,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

class NotNormalizedError : public Error {
public:
    explicit NotNormalizedError(double total);
    double total() const noexcept { return total_; }

private:
    double total_;
};

class TotalConflictError : public Error {
public:
    // `index` is the position of the input whose combination reached total conflict.
    explicit TotalConflictError(std::size_t index);
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

class SchemaMismatchError : public Error {
public:
    explicit SchemaMismatchError(std::vector<std::string> attributes);
    const std::vector<std::string>& attributes() const noexcept { return attributes_; }

private:
    std::vector<std::string> attributes_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& message);
    // 1-based; 0 when the failure is structural rather than syntactic.
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace evident
