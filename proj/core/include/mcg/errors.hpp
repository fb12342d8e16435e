#pragma once

#include <stdexcept>
#include <string>

namespace mcg {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Dimension mismatch in a linear-algebra operation.
struct ShapeError : Error {
  using Error::Error;
};

struct SingularMatrixError : Error {
  using Error::Error;
};

/// Transvection requested about the zero homology class.
struct DegenerateClassError : Error {
  using Error::Error;
};

/// Curve or generator index invalid at the given genus.
struct UndefinedCurveError : Error {
  using Error::Error;
};

struct UndefinedWordError : Error {
  using Error::Error;
};

/// Genus outside a proof script's stated bound.
struct UnsupportedGenusError : Error {
  using Error::Error;
};

/// Permutation degree exceeds the memory guard.
struct ResourceGuardError : Error {
  using Error::Error;
};

struct OracleOverflowError : Error {
  using Error::Error;
};

struct ScriptParseError : Error {
  using Error::Error;
};

}  // namespace mcg
