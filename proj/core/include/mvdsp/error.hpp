#pragma once

#include <stdexcept>
#include <string>

namespace mvdsp {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed text input. `line` is 1-based, 0 when the error is not tied to a line.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& message)
        : Error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A solver parameter or resource bound rules out running the requested algorithm.
class LimitError : public Error {
public:
    using Error::Error;
};

/// A generator produced a gadget that fails its own structural self-check.
class GadgetError : public Error {
public:
    using Error::Error;
};

} // namespace mvdsp
