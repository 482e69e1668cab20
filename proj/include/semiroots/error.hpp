#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace semiroots {

enum class ErrorKind {
  NoRoots,
  Convergence,
  DivisionByZeroSeries,
  InsufficientOrder,
  OnCut,
  Endpoint,
  PoleAt,
  RootOnCut,
  HigherOrderRealPole,
  Quadrature,
  Degenerate,
  NotReal,
  ZeroBeta,
  PoleNear,
  NotPositive,
  Singular,
  WrongFamily,
  NotAShift,
  Infeasible,
  RootInsideCut,
  EndpointHigherOrder,
  NotNormalizable,
  Inconsistent,
  BadAtomSite,
  OutOfRange,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

// All library failures are reported through this one type; `kind()` is what
// callers branch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace semiroots
