#pragma once

#include <stdexcept>
#include <string>

namespace dentalmark {

/// Machine-readable failure categories. Every library error carries one of
/// these codes; the CLI maps them onto process exit codes.
enum class ErrorCode {
    UnreadableFile,
    UnsupportedFormat,
    MalformedGeometry,
    WriteFailure,
    LengthMismatch,
    NonPositiveTau,
    VariantMismatch,
    MalformedJson,
    UnknownClass,
    NonFiniteCoordinate,
    BadMagic,
    VersionMismatch,
    VertexCountMismatch,
    TruncatedFile,
    NonPositiveScale,
    DegenerateBox,
    VariantScaleMismatch,
    NegativeThreshold,
    EmptyThresholds,
    ShapeMismatch,
    EmptyDataset,
    TooFewVertices,
    InvalidArgument,
};

inline const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::UnreadableFile: return "UnreadableFile";
        case ErrorCode::UnsupportedFormat: return "UnsupportedFormat";
        case ErrorCode::MalformedGeometry: return "MalformedGeometry";
        case ErrorCode::WriteFailure: return "WriteFailure";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::NonPositiveTau: return "NonPositiveTau";
        case ErrorCode::VariantMismatch: return "VariantMismatch";
        case ErrorCode::MalformedJson: return "MalformedJson";
        case ErrorCode::UnknownClass: return "UnknownClass";
        case ErrorCode::NonFiniteCoordinate: return "NonFiniteCoordinate";
        case ErrorCode::BadMagic: return "BadMagic";
        case ErrorCode::VersionMismatch: return "VersionMismatch";
        case ErrorCode::VertexCountMismatch: return "VertexCountMismatch";
        case ErrorCode::TruncatedFile: return "TruncatedFile";
        case ErrorCode::NonPositiveScale: return "NonPositiveScale";
        case ErrorCode::DegenerateBox: return "DegenerateBox";
        case ErrorCode::VariantScaleMismatch: return "VariantScaleMismatch";
        case ErrorCode::NegativeThreshold: return "NegativeThreshold";
        case ErrorCode::EmptyThresholds: return "EmptyThresholds";
        case ErrorCode::ShapeMismatch: return "ShapeMismatch";
        case ErrorCode::EmptyDataset: return "EmptyDataset";
        case ErrorCode::TooFewVertices: return "TooFewVertices";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

}  // namespace dentalmark
