#pragma once

#include <stdexcept>
#include <string>

namespace fointerp {

enum class ErrorKind {
    Structural,   // unknown symbol, arity mismatch, unbound variable, signature mismatch
    Parse,        // formula text
    Format,       // JSON files
    CapExceeded,  // enumeration slot cap
    Precondition  // operation called outside its domain
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

} // namespace fointerp
