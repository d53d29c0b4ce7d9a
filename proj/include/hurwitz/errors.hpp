#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hurwitz {

enum class ErrorKind {
  InvalidInput,
  DivisionByZero,
  PoleAtOrigin,
  NonzeroConstantTerm,
  NearPole,
  LimitExceeded,
  FitResidualNonzero,
  InterpolationUnstable,
  NoConvergence,
  CollapsedToIdentity,
  Degenerate,
  PointsTooClose,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so that
/// callers (and the CLI exit-code mapping) can dispatch on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

inline void require(bool cond, const std::string& what) {
  if (!cond) fail(ErrorKind::InvalidInput, what);
}

}  // namespace hurwitz
