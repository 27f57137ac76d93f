#pragma once

#include <stdexcept>
#include <string>

namespace advmatch {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input data violates a documented precondition (size mismatch, NaN, n too
/// large for an exhaustive oracle, k out of range, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A malformed instance or report file.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Reading past the written end of a tape. The writer and the reader
/// disagree on the schedule, which is an encoder bug.
class TapeUnderflow : public Error {
 public:
  using Error::Error;
};

/// Decoded advice is inconsistent with the instance being served.
class AdviceError : public Error {
 public:
  using Error::Error;
};

/// An online subroutine broke its contract (returned a server it was not
/// offered, or received a request it cannot serve).
class SubroutineError : public Error {
 public:
  using Error::Error;
};

}  // namespace advmatch
