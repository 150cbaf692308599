#include "core/errors.hpp"

namespace spt {

const char* error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::invalid_argument: return "invalid-argument";
    case ErrorCode::io_error: return "io-error";
    case ErrorCode::overflow: return "overflow";
    case ErrorCode::budget_exceeded: return "budget-exceeded";
    case ErrorCode::impossible_case: return "impossible-case";
    case ErrorCode::internal_assertion: return "internal-assertion";
    }
    return "unknown";
}

const char* violation_kind_name(ViolationKind kind) {
    switch (kind) {
    case ViolationKind::not_independent: return "not-independent";
    case ViolationKind::wrong_size: return "wrong-size";
    case ViolationKind::missing_target_vertex: return "missing-target-vertex";
    case ViolationKind::collision: return "collision";
    }
    return "unknown";
}

} // namespace spt
