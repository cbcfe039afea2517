#include "toricgm/error.hpp"

namespace toricgm {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::NotConnected: return "NotConnected";
        case ErrorCode::NotUnique: return "NotUnique";
        case ErrorCode::NotCentral: return "NotCentral";
        case ErrorCode::MultipleCenters: return "MultipleCenters";
        case ErrorCode::SizeLimit: return "SizeLimit";
        case ErrorCode::DegenerateSampling: return "DegenerateSampling";
        case ErrorCode::MissingVariable: return "MissingVariable";
        case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorCode::ColumnMismatch: return "ColumnMismatch";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::NotInKernel: return "NotInKernel";
        case ErrorCode::DegreeTooLow: return "DegreeTooLow";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

}  // namespace toricgm
