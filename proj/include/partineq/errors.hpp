#pragma once

#include <stdexcept>
#include <string>

namespace partineq {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller-supplied argument violates an operation's precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Integer arithmetic left the 64-bit range used for parts and frequencies.
class Overflow : public Error {
 public:
  using Error::Error;
};

/// ax + by = n has no nonnegative solution and n is below (a-1)(b-1).
class BelowBound : public Error {
 public:
  using Error::Error;
};

/// gcd(a, b) does not divide n.
class NotDivisible : public Error {
 public:
  using Error::Error;
};

/// n <= s in the consecutive-parts solver.
class TooSmall : public Error {
 public:
  using Error::Error;
};

/// Series whose constant term is not a unit.
class NotInvertible : public Error {
 public:
  using Error::Error;
};

/// No subcase of an injection applies to the partition.
class NotApplicable : public Error {
 public:
  using Error::Error;
};

/// A linear-equation solve required by an injection case failed; the
/// partition sits below the weight regime the construction is valid for.
class SolverPrecondition : public Error {
 public:
  using Error::Error;
};

/// A frequency would drop below zero. Only raised on internal contract
/// violations; correct preconditions make it unreachable.
class NegativeFrequency : public Error {
 public:
  using Error::Error;
};

}  // namespace partineq
