#pragma once

#include <stdexcept>
#include <string>

namespace dgcy {

// Broad classes used to choose exit codes and C API status values.
enum class ErrorClass { Input = 1, Window = 2, Internal = 3 };

class Error : public std::runtime_error {
 public:
  Error(ErrorClass cls, std::string kind, const std::string& message)
      : std::runtime_error(message), cls_(cls), kind_(std::move(kind)) {}
  ErrorClass error_class() const { return cls_; }
  const std::string& kind() const { return kind_; }

 private:
  ErrorClass cls_;
  std::string kind_;
};

struct InputError : Error {
  InputError(std::string kind, const std::string& message) : Error(ErrorClass::Input, std::move(kind), message) {}
};

struct WindowError : Error {
  WindowError(std::string kind, const std::string& message) : Error(ErrorClass::Window, std::move(kind), message) {}
};

struct InternalError : Error {
  InternalError(std::string kind, const std::string& message)
      : Error(ErrorClass::Internal, std::move(kind), message) {}
};

// linalg
struct SingularMatrix : InputError {
  explicit SingularMatrix(const std::string& m) : InputError("SingularMatrix", m) {}
};
struct DimensionExceeded : InputError {
  explicit DimensionExceeded(const std::string& m) : InputError("DimensionExceeded", m) {}
};

// ncalg / parsing
struct ParseError : InputError {
  ParseError(const std::string& m, int line, int column)
      : InputError("ParseError", m + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
        detail(m),
        line(line),
        column(column) {}
  std::string detail;
  int line;
  int column;
};
struct SchemaError : InputError {
  explicit SchemaError(const std::string& m) : InputError("SchemaError", m) {}
};
struct HomogeneityError : InputError {
  explicit HomogeneityError(const std::string& m) : InputError("HomogeneityError", m) {}
};
struct DegreeMismatch : InputError {
  explicit DegreeMismatch(const std::string& m) : InputError("DegreeMismatch", m) {}
};
struct UnknownGenerator : InputError {
  explicit UnknownGenerator(const std::string& m) : InputError("UnknownGenerator", m) {}
};

// dgcore
struct IllDefinedDifferential : InputError {
  explicit IllDefinedDifferential(const std::string& m) : InputError("IllDefinedDifferential", m) {}
};

// semifree
struct NotTriangular : InputError {
  explicit NotTriangular(const std::string& m) : InputError("NotTriangular", m) {}
};
struct DifferentialNotSquareZero : InputError {
  explicit DifferentialNotSquareZero(const std::string& m) : InputError("DifferentialNotSquareZero", m) {}
};
struct NotMinimal : InputError {
  explicit NotMinimal(const std::string& m) : InputError("NotMinimal", m) {}
};
struct NotAResolution : InputError {
  explicit NotAResolution(const std::string& m) : InputError("NotAResolution", m) {}
};
struct NotACocycle : InputError {
  explicit NotACocycle(const std::string& m) : InputError("NotACocycle", m) {}
};
struct WindowExceeded : WindowError {
  explicit WindowExceeded(const std::string& m) : WindowError("WindowExceeded", m) {}
};
struct CutoffTooSmall : WindowError {
  explicit CutoffTooSmall(const std::string& m) : WindowError("CutoffTooSmall", m) {}
};

// frobenius
struct NotAssociative : InputError {
  explicit NotAssociative(const std::string& m) : InputError("NotAssociative", m) {}
};
struct GradingViolation : InputError {
  explicit GradingViolation(const std::string& m) : InputError("GradingViolation", m) {}
};
struct UnitViolation : InputError {
  explicit UnitViolation(const std::string& m) : InputError("UnitViolation", m) {}
};
struct NotAutomorphism : InternalError {
  explicit NotAutomorphism(const std::string& m) : InternalError("NotAutomorphism", m) {}
};

struct InvariantViolation : InternalError {
  explicit InvariantViolation(const std::string& m) : InternalError("InvariantViolation", m) {}
};

}  // namespace dgcy
