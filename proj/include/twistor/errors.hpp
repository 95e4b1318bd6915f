#pragma once

#include <stdexcept>
#include <string>

namespace twistor {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define TWISTOR_DEFINE_ERROR(Name)          \
  class Name : public Error {               \
   public:                                  \
    using Error::Error;                     \
  }

TWISTOR_DEFINE_ERROR(InvalidArgument);
TWISTOR_DEFINE_ERROR(SingularMatrix);
TWISTOR_DEFINE_ERROR(NonTerminatingRewrite);
TWISTOR_DEFINE_ERROR(NonNilpotent);
TWISTOR_DEFINE_ERROR(UnknownMonomial);
TWISTOR_DEFINE_ERROR(NoRelation);
TWISTOR_DEFINE_ERROR(AmbiguousRelation);
TWISTOR_DEFINE_ERROR(RankMismatch);
TWISTOR_DEFINE_ERROR(VerificationFailure);
TWISTOR_DEFINE_ERROR(NonDominant);
TWISTOR_DEFINE_ERROR(NotInvertible);
TWISTOR_DEFINE_ERROR(NonIntegral);
TWISTOR_DEFINE_ERROR(FloatUnreliable);

#undef TWISTOR_DEFINE_ERROR

/// Two independent computations of the same index polynomial disagree.
class RouteMismatch : public Error {
 public:
  RouteMismatch(const std::string& what, std::string first, std::string second)
      : Error(what + ": " + first + " != " + second),
        first_(std::move(first)),
        second_(std::move(second)) {}

  const std::string& first() const noexcept { return first_; }
  const std::string& second() const noexcept { return second_; }

 private:
  std::string first_;
  std::string second_;
};

}  // namespace twistor
