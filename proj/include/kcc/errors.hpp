#pragma once

#include <stdexcept>
#include <string>

namespace kcc {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct IdNotPresent : Error {
    explicit IdNotPresent(const std::string& what) : Error(what) {}
};

struct IdAlreadyPresent : Error {
    explicit IdAlreadyPresent(const std::string& what) : Error(what) {}
};

struct TooFewPoints : Error {
    explicit TooFewPoints(const std::string& what) : Error(what) {}
};

struct EmptySolution : Error {
    explicit EmptySolution(const std::string& what) : Error(what) {}
};

struct OracleSizeExceeded : Error {
    explicit OracleSizeExceeded(const std::string& what) : Error(what) {}
};

struct IllegalState : Error {
    explicit IllegalState(const std::string& what) : Error(what) {}
};

struct UnsupportedOperation : Error {
    explicit UnsupportedOperation(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
    ParseError(const std::string& what, long line_no)
        : Error(line_no > 0 ? what + " (line " + std::to_string(line_no) + ")" : what),
          line(line_no) {}
    long line;
};

}  // namespace kcc
