#ifndef HSPLIT_ERRORS_HPP
#define HSPLIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hsplit {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input text (instance files, DIMACS, edge lists, ...).
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

// A brute-force fallback would exceed its configured limit.  Carries the
// offending quantity so callers can report or raise the limit.
class BoundExceeded : public Error {
public:
    BoundExceeded(const std::string& what, unsigned long long size,
                  unsigned long long limit)
        : Error(what + " (size " + std::to_string(size) + " exceeds limit " +
                std::to_string(limit) + ")"),
          size(size),
          limit(limit) {}

    unsigned long long size;
    unsigned long long limit;
};

}  // namespace hsplit

#endif
