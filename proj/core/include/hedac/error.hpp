#pragma once

#include <stdexcept>
#include <string>

namespace hedac {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// File could not be read or has invalid syntax; message carries file/line context.
struct ParseError : Error {
    ParseError(const std::string& file, long line, const std::string& what)
        : Error(file + ":" + std::to_string(line) + ": " + what), file(file), line(line) {}
    std::string file;
    long line;
};

/// A mesh, field or scenario violates a structural invariant.
struct ValidationError : Error {
    using Error::Error;
};

/// Query point lies outside the flight domain.
struct OutsideDomainError : Error {
    using Error::Error;
};

} // namespace hedac
