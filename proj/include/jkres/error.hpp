#pragma once

#include <stdexcept>
#include <string>

namespace jkres {

enum class ErrorCode {
    BadInput,
    ZeroForm,
    NotSpanning,
    NotPointed,
    NotRegular,
    OutsideCone,
    Infeasible,
    NonUnimodular,
    BudgetExceeded,
    MarginMismatch,
    Disconnected,
    Internal,
};

const char* error_code_name(ErrorCode code);

/// Exception carrying a machine-readable error code plus a human detail string.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + detail),
          code_(code),
          detail_(detail) {}

    ErrorCode code() const { return code_; }
    const std::string& detail() const { return detail_; }

private:
    ErrorCode code_;
    std::string detail_;
};

} // namespace jkres
