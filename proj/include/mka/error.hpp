#pragma once

#include <stdexcept>
#include <string>

namespace mka {

/// Domain error with a stable machine-readable code (e.g. "NotNormalizable")
/// alongside the human-readable message.
class Error : public std::runtime_error {
public:
    Error(std::string code, std::string msg)
        : std::runtime_error(code + ": " + msg), code_(std::move(code)),
          message_(std::move(msg)) {}

    const std::string& code() const { return code_; }
    const std::string& message() const { return message_; }

private:
    std::string code_;
    std::string message_;
};

[[noreturn]] inline void raise(const std::string& code, const std::string& msg) {
    throw Error(code, msg);
}

} // namespace mka
