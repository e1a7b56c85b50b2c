#pragma once

#include <stdexcept>
#include <string>

namespace toric {

// Whether a failure is a malformed-input problem (CLI exit 2) or a violated
// mathematical precondition on well-formed data (CLI exit 3).
enum class ErrorClass { Validation, Math };

class Error : public std::runtime_error {
public:
    Error(ErrorClass cls, std::string kind, std::string message)
        : std::runtime_error(kind + ": " + message),
          kind_(std::move(kind)),
          message_(std::move(message)),
          class_(cls) {}

    const std::string& kind() const { return kind_; }
    const std::string& message() const { return message_; }
    ErrorClass error_class() const { return class_; }

private:
    std::string kind_;
    std::string message_;
    ErrorClass class_;
};

[[noreturn]] inline void fail_validation(const std::string& kind, const std::string& msg) {
    throw Error(ErrorClass::Validation, kind, msg);
}

[[noreturn]] inline void fail_math(const std::string& kind, const std::string& msg) {
    throw Error(ErrorClass::Math, kind, msg);
}

} // namespace toric
