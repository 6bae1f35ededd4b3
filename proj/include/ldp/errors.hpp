#pragma once

#include <stdexcept>
#include <string>

namespace ldp {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// 64-bit arithmetic would wrap. Results would be silently wrong, so fail hard.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Argument outside an operation's stated domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Input points do not span a 2-dimensional polygon.
class DegenerateHull : public Error {
 public:
  using Error::Error;
};

/// Origin is not strictly interior to the polygon.
class OriginNotInterior : public Error {
 public:
  using Error::Error;
};

/// A vertex has a nontrivial coordinate gcd.
class NonPrimitiveVertex : public Error {
 public:
  using Error::Error;
};

/// Operation requires an IP-polygon (origin strictly interior).
class NotIP : public Error {
 public:
  using Error::Error;
};

/// A stated precondition does not hold; the message names which one.
class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

/// Search exceeded its node budget.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// Brute-force box smaller than the guaranteed-complete region.
class BoxTooSmall : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (polygon JSON, catalog line, ...).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace ldp
