#pragma once

#include <stdexcept>
#include <string>

namespace plab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed ring/module specification or violated precondition.
class SpecError : public Error {
 public:
  using Error::Error;
};

/// A configured size or enumeration cap was exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Operands live over different rings or modules.
class MismatchError : public Error {
 public:
  using Error::Error;
};

/// A constructed table failed the axiom scan. Always a construction bug.
class AxiomError : public Error {
 public:
  using Error::Error;
};

}  // namespace plab
