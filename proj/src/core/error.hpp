#pragma once

#include <stdexcept>
#include <string>

namespace kgtask {

enum class ErrorCode {
    InvalidArgument,
    Io,
    Validation,
    Infeasible,
    Internal,
};

class KgtError : public std::runtime_error {
public:
    KgtError(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw KgtError(code, what);
}

// Invariant check that stays active in release builds.
inline void require(bool cond, const std::string& what,
                    ErrorCode code = ErrorCode::Validation) {
    if (!cond) fail(code, what);
}

}  // namespace kgtask
