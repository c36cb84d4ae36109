#pragma once

#include <stdexcept>
#include <string>

namespace sgr {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input text could not be parsed; positions are 1-based.
struct ParseError : Error {
    int line;
    int col;
    ParseError(int line_, int col_, const std::string& what_)
        : Error("parse error at " + std::to_string(line_) + ":" + std::to_string(col_) + ": " + what_),
          line(line_),
          col(col_) {}
};

// A structural invariant of a presentation, module or morphism failed.
struct ValidationError : Error {
    using Error::Error;
};

// Raised by operations that require a confluent rewriting system.
struct NotConfluentError : Error {
    using Error::Error;
};

}  // namespace sgr
