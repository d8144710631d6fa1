#include "evident/error.hpp"

#include <cstdio>

namespace evident {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::DuplicateAtom: return "DuplicateAtom";
        case ErrorCode::EmptyFrame: return "EmptyFrame";
        case ErrorCode::TooManyAtoms: return "TooManyAtoms";
        case ErrorCode::UnknownAtom: return "UnknownAtom";
        case ErrorCode::FrameMismatch: return "FrameMismatch";
        case ErrorCode::UnmappedAttribute: return "UnmappedAttribute";
        case ErrorCode::InvalidExpression: return "InvalidExpression";
        case ErrorCode::MassOnEmptySet: return "MassOnEmptySet";
        case ErrorCode::NotNormalized: return "NotNormalized";
        case ErrorCode::NegativeMass: return "NegativeMass";
        case ErrorCode::EmptyFocus: return "EmptyFocus";
        case ErrorCode::DegreeOutOfRange: return "DegreeOutOfRange";
        case ErrorCode::MissingAtom: return "MissingAtom";
        case ErrorCode::TotalConflict: return "TotalConflict";
        case ErrorCode::FactorOutOfRange: return "FactorOutOfRange";
        case ErrorCode::EmptyInput: return "EmptyInput";
        case ErrorCode::TrivialProposition: return "TrivialProposition";
        case ErrorCode::InvalidThreshold: return "InvalidThreshold";
        case ErrorCode::ImpliesNotRoutable: return "ImpliesNotRoutable";
        case ErrorCode::EmptyShortlist: return "EmptyShortlist";
        case ErrorCode::SchemaMismatch: return "SchemaMismatch";
        case ErrorCode::TooFewParts: return "TooFewParts";
        case ErrorCode::DuplicateSource: return "DuplicateSource";
        case ErrorCode::InvalidSource: return "InvalidSource";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::UnsortedReports: return "UnsortedReports";
        case ErrorCode::InvalidWindow: return "InvalidWindow";
        case ErrorCode::InvalidParameter: return "InvalidParameter";
        case ErrorCode::EmptyTrace: return "EmptyTrace";
        case ErrorCode::Io: return "Io";
    }
    return "Unknown";
}

namespace {

std::string format_total(double total) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "masses sum to %.12g", total);
    return buf;
}

std::string join(const std::vector<std::string>& items) {
    std::string out;
    for (const auto& item : items) {
        if (!out.empty()) out += ", ";
        out += item;
    }
    return out;
}

}  // namespace

NotNormalizedError::NotNormalizedError(double total)
    : Error(ErrorCode::NotNormalized, format_total(total)), total_(total) {}

TotalConflictError::TotalConflictError(std::size_t index)
    : Error(ErrorCode::TotalConflict,
            "evidence at input " + std::to_string(index) + " is in total conflict with the evidence before it"),
      index_(index) {}

SchemaMismatchError::SchemaMismatchError(std::vector<std::string> attributes)
    : Error(ErrorCode::SchemaMismatch, "parts differ on attributes: " + join(attributes)),
      attributes_(std::move(attributes)) {}

ParseError::ParseError(std::size_t line, const std::string& message)
    : Error(ErrorCode::ParseError, line > 0 ? "line " + std::to_string(line) + ": " + message : message),
      line_(line) {}

}  // namespace evident
