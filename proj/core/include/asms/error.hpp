#pragma once

#include <stdexcept>
#include <string>

namespace asms {

/// Base for every error the construction pipeline throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define ASMS_DEFINE_ERROR(Name)            \
  class Name : public Error {              \
   public:                                 \
    using Error::Error;                    \
  }

/// n is not of the form 18u +- 3 with n >= 21.
ASMS_DEFINE_ERROR(UnsupportedOrder);
/// Backtracking search ran out of nodes or time.
ASMS_DEFINE_ERROR(SearchExhausted);
/// A caller broke an operation's precondition (e.g. an inadmissible hole).
ASMS_DEFINE_ERROR(PreconditionViolated);
ASMS_DEFINE_ERROR(InvalidSequence);
ASMS_DEFINE_ERROR(NonZeroSumTriple);
ASMS_DEFINE_ERROR(CoverageViolation);
ASMS_DEFINE_ERROR(LayoutInconsistency);
ASMS_DEFINE_ERROR(OrderOutOfRange);
/// An exhaustive oracle was asked to run beyond its feasibility bound.
ASMS_DEFINE_ERROR(OracleScaleExceeded);
/// Malformed text input (sequence file, CSV, JSON).
ASMS_DEFINE_ERROR(ParseError);

#undef ASMS_DEFINE_ERROR

}  // namespace asms
