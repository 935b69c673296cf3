#ifndef QGSPEC_ERRORS_HPP
#define QGSPEC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qg {

// Domain error cases. The CLI maps any qg::Error to exit code 1 and prints
// "<code>: <message>" on a single line.
enum class ErrorCode {
    DuplicateEdge,
    SelfLoop,
    VertexOutOfRange,
    InvalidSize,
    ContractionViolatesSimplicity,
    Disconnected,
    IsolatedVertex,
    EmptyGraph,
    NonPositiveLambda,
    GridTooCoarse,
    NonHermitianR,
    WindowTooSmall,
    WindowMismatch,
    InconsistentSpectrum,
    InvalidArgument,
    ParseError,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

inline const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::DuplicateEdge: return "DuplicateEdge";
        case ErrorCode::SelfLoop: return "SelfLoop";
        case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
        case ErrorCode::InvalidSize: return "InvalidSize";
        case ErrorCode::ContractionViolatesSimplicity: return "ContractionViolatesSimplicity";
        case ErrorCode::Disconnected: return "Disconnected";
        case ErrorCode::IsolatedVertex: return "IsolatedVertex";
        case ErrorCode::EmptyGraph: return "EmptyGraph";
        case ErrorCode::NonPositiveLambda: return "NonPositiveLambda";
        case ErrorCode::GridTooCoarse: return "GridTooCoarse";
        case ErrorCode::NonHermitianR: return "NonHermitianR";
        case ErrorCode::WindowTooSmall: return "WindowTooSmall";
        case ErrorCode::WindowMismatch: return "WindowMismatch";
        case ErrorCode::InconsistentSpectrum: return "InconsistentSpectrum";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "UnknownError";
}

} // namespace qg

#endif
