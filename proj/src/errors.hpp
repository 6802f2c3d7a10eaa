#pragma once

#include <stdexcept>
#include <string>

namespace riordan {

// Input text could not be parsed; `index` is the offset of the first offender.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t index)
        : std::invalid_argument(what), index_(index) {}
    std::size_t index() const { return index_; }

private:
    std::size_t index_;
};

// An operation precondition was violated by the caller.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An internal consistency check failed (a bug, not a user error).
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline void internal_check(bool ok, const char* what) {
    if (!ok) throw InternalError(std::string("internal consistency failure: ") + what);
}

inline void require(bool ok, const std::string& what) {
    if (!ok) throw PreconditionError(what);
}

}  // namespace riordan
