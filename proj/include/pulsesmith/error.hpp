#pragma once

#include <stdexcept>
#include <string>

namespace pulsesmith {

enum class ErrorKind {
    Domain,      // input outside the region where a closed form is defined
    Validation,  // malformed request (empty sequence, bad axis, bad flag combination)
    Io,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void throw_domain(const std::string& what) { throw Error(ErrorKind::Domain, what); }
[[noreturn]] inline void throw_validation(const std::string& what) { throw Error(ErrorKind::Validation, what); }

}  // namespace pulsesmith
