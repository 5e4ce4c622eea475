#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bbsuper {

enum class ErrorKind {
  BadDiagonal,
  PositiveOffDiagonal,
  NotSymmetrizable,
  OddReParity,
  ShapeMismatch,
  ImaginaryIndexReflection,
  HeightMismatch,
  NonUnitConstantTerm,
  InexactDivision,
  IncompleteRootTable,
  NotDominant,
  NegativeMultiplicity,
  BadGeneratorIndex,
  Unreachable,
  Parse,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for the library; `kind()` identifies the failed
/// condition, `what()` carries the diagnostic.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace bbsuper
