#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cohesion {

enum class ErrorCode {
    NoTerminal,
    NotAnIdeal,
    NotIdempotent,
    TooLarge,
    BaseMismatch,
    NotPreCohesiveSite,
    NotAboveCentre,
    NotRigid,
    UnknownFixture,
    InvalidInput,
};

std::string_view to_string(ErrorCode code);

// Every domain failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message);

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace cohesion
