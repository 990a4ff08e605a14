#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace progressio {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A size cap (group closure or subgroup enumeration) was exceeded.
class CapExceeded : public Error {
 public:
  CapExceeded(std::string const& what_exceeded, std::size_t cap)
      : Error(what_exceeded + " exceeds the configured cap of " +
              std::to_string(cap)),
        cap_(cap) {}

  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

/// Malformed textual input (cycle notation, group expressions, catalogs).
/// `position` is a 0-based column for expressions, a 1-based line for
/// catalogs; which one applies is stated in the message.
class ParseError : public Error {
 public:
  ParseError(std::string const& msg, std::size_t position)
      : Error(msg), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// An operation was called outside its domain (e.g. no nonabelian group of
/// order pq exists, even-order input to an odd-order verdict).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace progressio
