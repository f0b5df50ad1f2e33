#pragma once

#include <stdexcept>
#include <string>

namespace wid {

enum class ErrorCode {
    InvalidImage,
    ConstantImage,
    BlankDocument,
    InsufficientText,
    BlockTooSmall,
    DegenerateLabels,
    ShapeError,
    StratificationError,
    NoEvidence,
    ClassSetMismatch,
    ManifestError,
    EmptySubset,
    PlanError,
    FeatureCacheMiss,
    ConfigError,
    IoError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

// extract_blocks failure: reports how many blocks the image could yield.
class InsufficientTextError : public Error {
public:
    InsufficientTextError(int possible, const std::string& what)
        : Error(ErrorCode::InsufficientText, what), possible_(possible) {}

    int possible() const { return possible_; }

private:
    int possible_;
};

} // namespace wid
