#pragma once

#include <stdexcept>
#include <string>

namespace hextwist {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A point landed exactly on a cell boundary, where a piecewise map is
// undefined (all pieces are treated as open sets).
struct BoundaryHit : Error {
  explicit BoundaryHit(const std::string& what) : Error(what) {}
};

// An orbit exceeded the configured iteration budget before returning.
struct ReturnBoundExceeded : Error {
  explicit ReturnBoundExceeded(const std::string& what) : Error(what) {}
};

// Arithmetic between quadratic irrationals over different radicands.
struct MixedRadicand : Error {
  explicit MixedRadicand(const std::string& what) : Error(what) {}
};

// Degenerate or invalid geometric input (zero normal, too few points, ...).
struct GeometryError : Error {
  explicit GeometryError(const std::string& what) : Error(what) {}
};

// An orbit failed to close up within the configured period budget.
struct NotPeriodicWithin : Error {
  explicit NotPeriodicWithin(const std::string& what) : Error(what) {}
};

// Malformed textual input (rationals, certificates, CLI values).
struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(what) {}
};

// An argument outside an operation's documented domain.
struct InvalidArgument : Error {
  explicit InvalidArgument(const std::string& what) : Error(what) {}
};

}  // namespace hextwist
