#include "cohesion/error.hpp"

namespace cohesion {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::NoTerminal: return "NoTerminal";
        case ErrorCode::NotAnIdeal: return "NotAnIdeal";
        case ErrorCode::NotIdempotent: return "NotIdempotent";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::BaseMismatch: return "BaseMismatch";
        case ErrorCode::NotPreCohesiveSite: return "NotPreCohesiveSite";
        case ErrorCode::NotAboveCentre: return "NotAboveCentre";
        case ErrorCode::NotRigid: return "NotRigid";
        case ErrorCode::UnknownFixture: return "UnknownFixture";
        case ErrorCode::InvalidInput: return "InvalidInput";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace cohesion
