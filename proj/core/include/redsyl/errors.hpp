#ifndef REDSYL_ERRORS_HPP
#define REDSYL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace redsyl {

enum class ErrorKind {
    InvalidPrime,
    FieldTooLarge,
    NoSuchRoot,
    ShapeError,
    UnknownGroup,
    GroupTooLarge,
    InvalidGroupTable,
    CyclicGroup,
    NotMaximal,
    SamePrime,
    NotPrime,
    WrongProvenance,
    IndexMismatch,
    MatchingFailed,
    TooLargeToEnumerate,
    ExactBudgetExceeded,
    ConfigError,
    InternalError,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace redsyl

#endif
