#pragma once

#include <stdexcept>
#include <string>

namespace cae {

/* Domain errors carry a short stable code ("InvalidArc", "NoExtension", ...)
 * so the CLI can report them in machine mode. */
class DomainError : public std::runtime_error {
public:
    DomainError(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void throw_domain(const char* code, const std::string& msg)
{
    throw DomainError(code, msg);
}

}  // namespace cae
