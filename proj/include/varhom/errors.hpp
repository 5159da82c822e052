#pragma once

#include <stdexcept>
#include <string>

namespace varhom {

// Malformed or inconsistent input: shape mismatches, invalid complexes,
// preconditions the caller is responsible for.
class StructuralError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An internal invariant failed. Seeing one of these means a bug in this
// library, never bad input.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Input document failed schema validation. `where` is a JSON pointer.
class InputError : public std::runtime_error {
public:
    InputError(std::string where, const std::string& what)
        : std::runtime_error(where.empty() ? what : where + ": " + what),
          where_(std::move(where))
    {}

    const std::string& where() const noexcept { return where_; }

private:
    std::string where_;
};

} // namespace varhom
