#pragma once

#include <stdexcept>
#include <string>

namespace hq {

// Error kinds mirror the process exit codes of the CLI and the C API
// status values: structural = malformed input, invalid = an algebraic
// verification failed, cap = a resource cap was exceeded.
enum class ErrorKind { structural = 1, invalid = 2, cap = 3 };

struct error : std::runtime_error {
    ErrorKind kind;
    error(ErrorKind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

[[noreturn]] inline void fail_structural(const std::string& msg) {
    throw error(ErrorKind::structural, msg);
}
[[noreturn]] inline void fail_invalid(const std::string& msg) {
    throw error(ErrorKind::invalid, msg);
}
[[noreturn]] inline void fail_cap(const std::string& msg) {
    throw error(ErrorKind::cap, msg);
}

} // namespace hq
