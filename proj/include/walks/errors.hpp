#ifndef WALKS_ERRORS_HPP
#define WALKS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace walks {

// Machine-readable failure codes. The CLI maps these onto exit codes and
// emits the code string on the diagnostic stream.
enum class ErrorCode {
    ZeroStep,
    NonPositiveWeight,
    MissingForwardOrBackwardStep,
    EntryOutOfRange,
    UnsupportedClass,
    ResourceLimit,
    NonZeroDrift,
    InsufficientData,
    NonPositiveTerms,
    QuadratureUnderResolved,
    BadInput,
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::ZeroStep: return "ZeroStep";
        case ErrorCode::NonPositiveWeight: return "NonPositiveWeight";
        case ErrorCode::MissingForwardOrBackwardStep: return "MissingForwardOrBackwardStep";
        case ErrorCode::EntryOutOfRange: return "EntryOutOfRange";
        case ErrorCode::UnsupportedClass: return "UnsupportedClass";
        case ErrorCode::ResourceLimit: return "ResourceLimit";
        case ErrorCode::NonZeroDrift: return "NonZeroDrift";
        case ErrorCode::InsufficientData: return "InsufficientData";
        case ErrorCode::NonPositiveTerms: return "NonPositiveTerms";
        case ErrorCode::QuadratureUnderResolved: return "QuadratureUnderResolved";
        case ErrorCode::BadInput: return "BadInput";
    }
    return "Unknown";
}

class WalkError : public std::runtime_error {
public:
    WalkError(ErrorCode code, const std::string& what, int axis = -1)
        : std::runtime_error(what), code_(code), axis_(axis) {}

    ErrorCode code() const { return code_; }
    // 1-based coordinate index for per-axis failures, -1 otherwise.
    int axis() const { return axis_; }

private:
    ErrorCode code_;
    int axis_;
};

} // namespace walks

#endif
