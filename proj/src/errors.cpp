#include "hurwitz/errors.hpp"

namespace hurwitz {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::PoleAtOrigin: return "PoleAtOrigin";
    case ErrorKind::NonzeroConstantTerm: return "NonzeroConstantTerm";
    case ErrorKind::NearPole: return "NearPole";
    case ErrorKind::LimitExceeded: return "LimitExceeded";
    case ErrorKind::FitResidualNonzero: return "FitResidualNonzero";
    case ErrorKind::InterpolationUnstable: return "InterpolationUnstable";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::CollapsedToIdentity: return "CollapsedToIdentity";
    case ErrorKind::Degenerate: return "Degenerate";
    case ErrorKind::PointsTooClose: return "PointsTooClose";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace hurwitz
