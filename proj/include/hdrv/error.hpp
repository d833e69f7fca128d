#pragma once

#include <stdexcept>
#include <string>

namespace hdrv {

enum class ErrorCode {
    invalid_input,
    invalid_parameter,
    shape_mismatch,
    exposure_mismatch,
    degenerate_pair,
    too_small,
    too_short,
    format_error,
    io_error,
    data_error,
};

// Single exception type for all library failures; the code tells callers
// (and the CLI exit-code mapping) what class of failure occurred.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

} // namespace hdrv
