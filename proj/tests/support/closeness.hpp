#pragma once

#include <cmath>
#include <complex>

namespace plasmon_test {

// Relative distance |got - want| / |want| (absolute when want == 0), for
// asserting complex results against pinned references.
inline double rel_gap(std::complex<double> got, std::complex<double> want) {
  const double scale = std::abs(want);
  return scale > 0.0 ? std::abs(got - want) / scale : std::abs(got - want);
}

}  // namespace plasmon_test
