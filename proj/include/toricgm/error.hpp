#ifndef TORICGM_ERROR_HPP
#define TORICGM_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace toricgm {

enum class ErrorCode {
    InvalidArgument,
    NotConnected,
    NotUnique,
    NotCentral,
    MultipleCenters,
    SizeLimit,
    DegenerateSampling,
    MissingVariable,
    ZeroPolynomial,
    ColumnMismatch,
    DimensionMismatch,
    NotInKernel,
    DegreeTooLow,
    ParseError,
};

std::string_view to_string(ErrorCode code);

// Single exception type for the library; callers switch on code().
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace toricgm

#endif  // TORICGM_ERROR_HPP
