#pragma once

#include <stdexcept>
#include <string>

namespace cei {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Violated operation precondition: bad index, self-loop, empty selection.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Construction or verification parameters outside the feasible region.
// The message names the violated inequality.
class Infeasible : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class NotConnected : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

}  // namespace cei
