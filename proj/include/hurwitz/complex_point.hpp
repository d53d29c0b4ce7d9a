#pragma once

#include <cmath>
#include <complex>
#include <string>

#include "hurwitz/errors.hpp"

namespace hurwitz {

using ComplexPoint = std::complex<double>;

/// InvalidInput unless both parts are finite.
inline void require_finite(const ComplexPoint& p, const std::string& what) {
  require(std::isfinite(p.real()) && std::isfinite(p.imag()), what + " must be finite");
}

}  // namespace hurwitz
