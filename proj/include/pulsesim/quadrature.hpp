#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pulsesim {

struct QuadratureSpec {
  double rel_tol = 1e-8;
  double abs_tol = 1e-12;
  double omega_max = 40.0;  // exp(-omega_max) must be below abs_tol
  int max_panel_depth = 30;

  void validate() const;
};

// Thrown when a panel tree cannot reach the requested tolerance within
// max_panel_depth bisections; carries the best available error estimate.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double error_estimate)
      : std::runtime_error(what), error_estimate_(error_estimate) {}
  double error_estimate() const { return error_estimate_; }

 private:
  double error_estimate_ = 0.0;
};

struct QuadratureResult {
  std::vector<double> value;
  std::vector<double> error;  // accumulated per-component error estimates
  std::size_t evaluations = 0;
};

// Integrand fills out[0..n) with the component values at omega.
using VectorIntegrand = std::function<void(double omega, std::span<double> out)>;

// Adaptive Gauss-Kronrod (7,15) integration of a vector integrand over
// [0, spec.omega_max]. The initial uniform panel width is
// min(1, pi/max(oscillation_time, 1)) so the sinc-like kernels (omega-period
// 2*pi/t) are resolved before refinement starts; panels are then bisected,
// left to right, until every component meets its share of the tolerance.
// Deterministic: a fixed input always produces the same panel tree and the
// same left-to-right summation order.
QuadratureResult integrate_spectral(const VectorIntegrand& f,
                                    std::size_t n_components,
                                    double oscillation_time,
                                    const QuadratureSpec& spec);

}  // namespace pulsesim
