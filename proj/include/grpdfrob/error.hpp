#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace grpdfrob {

// Every throwing failure carries a stable code (e.g. "NoSolution",
// "InvalidGroupoid", "ParseError") so callers and the CLI can branch on it
// without parsing messages.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

}  // namespace grpdfrob
