#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <utility>

namespace bihom {

struct Report;

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed document or scalar text.
class ParseError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A square matrix that was required to be invertible has determinant 0.
class SingularMap : public Error {
 public:
  using Error::Error;
};

class UnknownFixture : public Error {
 public:
  using Error::Error;
};

/// A suite was requested for a bundle (or bundle pairing) it cannot apply to.
class IncompatibleSuite : public Error {
 public:
  using Error::Error;
};

/// Base for failures that carry the exact violation report explaining them.
class ReportError : public Error {
 public:
  ReportError(const std::string& what, std::shared_ptr<const Report> report)
      : Error(what), report_(std::move(report)) {}

  [[nodiscard]] const Report& report() const { return *report_; }

 private:
  std::shared_ptr<const Report> report_;
};

#define BIHOM_REPORT_ERROR(Name)          \
  class Name : public ReportError {       \
   public:                                \
    using ReportError::ReportError;       \
  }

/// Structure maps fail to commute, are not multiplicative, or shapes disagree.
BIHOM_REPORT_ERROR(StructureError);
/// A construction's theorem hypotheses do not hold on the given inputs.
BIHOM_REPORT_ERROR(PreconditionError);
BIHOM_REPORT_ERROR(RotaBaxterError);
BIHOM_REPORT_ERROR(OOperatorError);
BIHOM_REPORT_ERROR(CocycleError);
BIHOM_REPORT_ERROR(DualConditionError);
BIHOM_REPORT_ERROR(NonCommutingPair);

#undef BIHOM_REPORT_ERROR

/// image_pre_alt refuses operators with a nontrivial kernel.
class NonInjectiveOperator : public Error {
 public:
  using Error::Error;
};

}  // namespace bihom
