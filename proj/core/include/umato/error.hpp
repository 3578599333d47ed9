#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace umato {

/// A caller-supplied parameter is out of its valid range (k >= n, m > n, ...).
class InvalidParameter : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Input values violate a data invariant (non-finite entries, ragged labels).
class InvalidData : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed file contents. `location()` is a byte offset for binary formats
/// and a 1-based line number for text formats.
class FormatError : public std::runtime_error {
public:
    FormatError(const std::string& what, std::size_t location)
        : std::runtime_error(what), location_(location) {}

    std::size_t location() const noexcept { return location_; }

private:
    std::size_t location_;
};

/// A file could not be opened, read or written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A post-condition the algorithm guarantees was violated.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace umato
