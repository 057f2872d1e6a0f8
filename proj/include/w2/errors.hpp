#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace w2 {

// Input outside the mathematical domain of an operation (zero denominator,
// constant function where a non-constant one is required, dependent pair
// where independence is required, ...).
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Text that does not match the expression grammar.  Carries the byte offset
// of the first offending character.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// A structural guarantee of the library failed to hold.  Never swallowed:
// reaching this means a bug, not bad input.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

namespace detail {

inline void check(bool condition, const char* what) {
    if (!condition) throw internal_error(what);
}

}  // namespace detail

}  // namespace w2
