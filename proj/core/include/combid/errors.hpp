#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace combid {

/// Base of every domain error raised by the library. `name()` is the stable
/// identifier printed by the CLI and stored in skipped records.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* name() const noexcept = 0;
};

#define COMBID_DEFINE_ERROR(Type)                                   \
  class Type : public Error {                                       \
   public:                                                          \
    using Error::Error;                                             \
    const char* name() const noexcept override { return #Type; }    \
  }

COMBID_DEFINE_ERROR(PoleError);
COMBID_DEFINE_ERROR(OverflowError);
COMBID_DEFINE_ERROR(IndeterminateError);
COMBID_DEFINE_ERROR(DomainError);
COMBID_DEFINE_ERROR(ZeroToNonpositivePowerError);
COMBID_DEFINE_ERROR(NotExactlyEvaluableError);
COMBID_DEFINE_ERROR(DivisionByZeroError);

#undef COMBID_DEFINE_ERROR

/// A term 1/(c+k)^m of a harmonic sum has a vanishing base.
class SingularTermError : public Error {
 public:
  SingularTermError(std::int64_t k, const std::string& what)
      : Error(what), k_(k) {}
  const char* name() const noexcept override { return "SingularTermError"; }
  std::int64_t offending_k() const noexcept { return k_; }

 private:
  std::int64_t k_;
};

}  // namespace combid
