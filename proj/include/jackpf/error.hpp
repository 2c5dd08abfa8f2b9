#pragma once

#include <stdexcept>
#include <string>

namespace jackpf {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two algebraic scalars (or matrices) built over different quartic rings were combined.
class BaseMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// (t)_n vanishes, so the finite-n z-measure is undefined.
class SingularParameters : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

/// A size cap (partition enumeration, window size, ...) was exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace jackpf
