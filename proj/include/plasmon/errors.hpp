#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

// Exception hierarchy. Everything the library throws derives from
// plasmon::error, so callers can distinguish "you asked for something
// invalid" (invalid_input) from "the numerics could not deliver"
// (numerical_error and its children).

namespace plasmon {

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Precondition violations: out-of-range parameters, malformed sweep specs.
class invalid_input : public error {
 public:
  using error::error;
};

// Base for failures of the numerical machinery itself.
class numerical_error : public error {
 public:
  using error::error;
};

// The size-effect integral has no finite value for the requested arguments
// (e.g. a collisionless film with diffuse scattering, where the integrand
// no longer decays).
class nonconvergent_integral : public numerical_error {
 public:
  using numerical_error::numerical_error;
};

// The evaluation converged too slowly to certify the requested tolerance.
// Carries the best value reached and its certified relative error so a
// caller may decide to accept it anyway.
class accuracy_error : public numerical_error {
 public:
  accuracy_error(const std::string& what, std::complex<double> best,
                 double achieved_rel_error)
      : numerical_error(what),
        best_estimate_(best),
        achieved_rel_error_(achieved_rel_error) {}

  std::complex<double> best_estimate() const { return best_estimate_; }
  double achieved_rel_error() const { return achieved_rel_error_; }

 private:
  std::complex<double> best_estimate_;
  double achieved_rel_error_;
};

// The dispersion relation degenerates (denominator of the film impedance
// vanishes), e.g. at the plasma resonance of a collisionless film.
class resonance_singularity : public numerical_error {
 public:
  using numerical_error::numerical_error;
};

// The existence-band scan found more sign changes than a single band can
// produce; carries the crossing locations for diagnosis.
class ambiguous_band : public numerical_error {
 public:
  ambiguous_band(const std::string& what, std::vector<double> crossings)
      : numerical_error(what), crossings_(std::move(crossings)) {}

  const std::vector<double>& crossings() const { return crossings_; }

 private:
  std::vector<double> crossings_;
};

}  // namespace plasmon
