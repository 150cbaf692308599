#ifndef SPT_ERRORS_HPP
#define SPT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace spt {

enum class ErrorCode {
    invalid_argument,   // bad descriptor, bad coordinates, contract violation
    io_error,           // unreadable or missing file
    overflow,           // a count left the 64-bit range
    budget_exceeded,    // intersecting-family search hit its budget
    impossible_case,    // a provably-empty branch was reached
    internal_assertion, // a postcondition failed
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

// Failure kinds an injection postcondition can report.
enum class ViolationKind {
    not_independent,
    wrong_size,
    missing_target_vertex,
    collision,
};

const char* violation_kind_name(ViolationKind kind);

// Postcondition failure of an injection map; carries the kind so a
// verifier can record it as a violation instead of crashing.
class PostconditionError : public Error {
public:
    PostconditionError(ViolationKind kind, std::string message)
        : Error(ErrorCode::internal_assertion, std::move(message)), kind_(kind) {}

    ViolationKind kind() const { return kind_; }

private:
    ViolationKind kind_;
};

[[noreturn]] inline void fail(ErrorCode code, std::string message) {
    throw Error(code, std::move(message));
}

} // namespace spt

#endif // SPT_ERRORS_HPP
