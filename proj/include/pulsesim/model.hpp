#pragma once

#include <stdexcept>
#include <vector>

namespace pulsesim {

// Everything is dimensionless: the bath cutoff frequency sets the unit
// (omega_c = 1) and hbar = k_B = 1. Times are in 1/omega_c.

struct PhysicalParams {
  double omega0 = 0.1;    // qubit level splitting
  double beta = 1000.0;   // inverse temperature
  double g_theta = 0.0;   // dephasing coupling constant
  double g_lambda = 0.0;  // decay coupling constant

  // Correlation times of the two couplings; infinite when the corresponding
  // coupling vanishes.
  double tau_c_theta() const;
  double tau_c_lambda() const;
  // Combined correlation time, 1/tau_c^2 = 1/tau_ctheta^2 + 1/tau_clambda^2.
  double tau_c() const;

  void validate() const;  // throws std::invalid_argument
};

// Ohmic spectral density with exponential cutoff, I(w) = g * w * exp(-w).
struct SpectralDensity {
  double g = 0.0;
  double operator()(double omega) const;
};

// I(w) * coth(beta*w/2). Finite at w = 0 (limit 2g/beta); a two-term series
// replaces the closed form for beta*w < 1e-4 to keep the product stable.
double thermal_weight(const SpectralDensity& spec, double beta, double omega);

enum class PulseAxis { X, Z };

struct PulseEvent {
  double time = 0.0;
  PulseAxis axis = PulseAxis::X;
};

// Ordered list of instantaneous pi-pulse events, strictly increasing
// positive times. Immutable after construction.
class PulseSchedule {
 public:
  PulseSchedule() = default;
  explicit PulseSchedule(std::vector<PulseEvent> events);

  const std::vector<PulseEvent>& events() const { return events_; }
  bool empty() const { return events_.empty(); }

 private:
  std::vector<PulseEvent> events_;
};

// Periodic bit-flips at t = j*dt for all j >= 1 with j*dt <= t_max.
PulseSchedule make_bb(double dt, double t_max);
// Bit-flips at (2j-1)*dt alternating with phase-flips at 2j*dt, up to t_max.
PulseSchedule make_bp(double dt, double t_max);

struct FlipCounters {
  int nx = 0;
  int nz = 0;
};

struct FlipSigns {
  int sx = 1;
  int sz = 1;
};

// Number of X/Z events with event time <= t. Right-continuous: an event at
// exactly t counts as already applied.
FlipCounters counters(const PulseSchedule& schedule, double t);

// ((-1)^Nx(t), (-1)^Nz(t)).
FlipSigns signs(const PulseSchedule& schedule, double t);

struct Segment {
  double begin = 0.0;
  double end = 0.0;
  int sx = 1;  // (-1)^Nx on the open segment
  int sz = 1;  // (-1)^Nz
};

// Partition of [0, t] at the event times strictly inside it. Parities are
// constant on each segment and flip across events of the matching axis.
struct SegmentDecomposition {
  double t = 0.0;
  std::vector<Segment> segments;
};

SegmentDecomposition decompose(const PulseSchedule& schedule, double t);

// Coupling constants reproducing a requested combined correlation time and
// ratio tau_c_lambda/tau_c_theta. An infinite ratio selects pure dephasing.
struct CouplingsFromTau {
  double g_theta = 0.0;
  double g_lambda = 0.0;
  double tau_c_theta = 0.0;
  double tau_c_lambda = 0.0;
};

CouplingsFromTau params_from_tau(double tau_c, double ratio);

}  // namespace pulsesim
