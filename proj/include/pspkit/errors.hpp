#pragma once

#include <stdexcept>
#include <string>

namespace pspkit {

// Malformed input text. line() is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

// A configured search budget (path count, core edges, width, n^k) was exceeded.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The requested algorithm does not apply to this input (e.g. tree solver on a cyclic graph).
class Inapplicable : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace pspkit
