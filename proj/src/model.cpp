#include "pulsesim/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

namespace pulsesim {

double PhysicalParams::tau_c_theta() const {
  return g_theta > 0.0 ? std::sqrt(1.0 / (2.0 * g_theta))
                       : std::numeric_limits<double>::infinity();
}

double PhysicalParams::tau_c_lambda() const {
  return g_lambda > 0.0 ? std::sqrt(2.0 / g_lambda)
                        : std::numeric_limits<double>::infinity();
}

double PhysicalParams::tau_c() const {
  const double inv_sq = 2.0 * g_theta + 0.5 * g_lambda;
  return inv_sq > 0.0 ? std::sqrt(1.0 / inv_sq)
                      : std::numeric_limits<double>::infinity();
}

void PhysicalParams::validate() const {
  if (!(omega0 > 0.0)) throw std::invalid_argument("omega0 must be positive");
  if (!(beta > 0.0)) throw std::invalid_argument("beta must be positive");
  if (!(g_theta >= 0.0)) throw std::invalid_argument("g_theta must be non-negative");
  if (!(g_lambda >= 0.0)) throw std::invalid_argument("g_lambda must be non-negative");
}

double SpectralDensity::operator()(double omega) const {
  return g * omega * std::exp(-omega);
}

double thermal_weight(const SpectralDensity& spec, double beta, double omega) {
  if (!(beta > 0.0)) throw std::invalid_argument("thermal_weight: beta must be positive");
  if (omega < 0.0) throw std::invalid_argument("thermal_weight: omega must be non-negative");
  const double x = beta * omega;
  if (x < 1e-4) {
    // w*coth(beta*w/2) = 2/beta + beta*w^2/6 + O(w^4)
    return spec.g * std::exp(-omega) * (2.0 / beta + beta * omega * omega / 6.0);
  }
  return spec(omega) / std::tanh(0.5 * x);
}

PulseSchedule::PulseSchedule(std::vector<PulseEvent> events)
    : events_(std::move(events)) {
  double prev = 0.0;
  for (const auto& e : events_) {
    if (!(e.time > prev))
      throw std::invalid_argument(
          "pulse event times must be strictly increasing and positive");
    prev = e.time;
  }
}

namespace {

void check_periodic_args(const char* who, double dt, double t_max) {
  if (!(dt > 0.0) || !(t_max > 0.0))
    throw std::invalid_argument(std::string(who) + ": dt and t_max must be positive");
  if (t_max / dt > 5e7)
    throw std::invalid_argument(std::string(who) + ": pulse count too large");
}

}  // namespace

PulseSchedule make_bb(double dt, double t_max) {
  check_periodic_args("make_bb", dt, t_max);
  std::vector<PulseEvent> ev;
  for (long j = 1; static_cast<double>(j) * dt <= t_max; ++j)
    ev.push_back({static_cast<double>(j) * dt, PulseAxis::X});
  return PulseSchedule(std::move(ev));
}

PulseSchedule make_bp(double dt, double t_max) {
  check_periodic_args("make_bp", dt, t_max);
  std::vector<PulseEvent> ev;
  for (long k = 1; static_cast<double>(k) * dt <= t_max; ++k)
    ev.push_back({static_cast<double>(k) * dt,
                  (k % 2 == 1) ? PulseAxis::X : PulseAxis::Z});
  return PulseSchedule(std::move(ev));
}

FlipCounters counters(const PulseSchedule& schedule, double t) {
  if (t < 0.0) throw std::invalid_argument("counters: t must be non-negative");
  FlipCounters c;
  for (const auto& e : schedule.events()) {
    if (e.time > t) break;
    (e.axis == PulseAxis::X ? c.nx : c.nz) += 1;
  }
  return c;
}

FlipSigns signs(const PulseSchedule& schedule, double t) {
  const FlipCounters c = counters(schedule, t);
  return {c.nx % 2 == 0 ? 1 : -1, c.nz % 2 == 0 ? 1 : -1};
}

SegmentDecomposition decompose(const PulseSchedule& schedule, double t) {
  if (!(t > 0.0)) throw std::invalid_argument("decompose: t must be positive");
  SegmentDecomposition out;
  out.t = t;
  out.segments.reserve(schedule.events().size() + 1);
  double prev = 0.0;
  int sx = 1, sz = 1;
  for (const auto& e : schedule.events()) {
    if (!(e.time < t)) break;
    out.segments.push_back({prev, e.time, sx, sz});
    (e.axis == PulseAxis::X ? sx : sz) *= -1;
    prev = e.time;
  }
  out.segments.push_back({prev, t, sx, sz});
  return out;
}

CouplingsFromTau params_from_tau(double tau_c, double ratio) {
  if (!(tau_c > 0.0) || !(ratio > 0.0))
    throw std::invalid_argument("params_from_tau: tau_c and ratio must be positive");
  CouplingsFromTau out;
  if (std::isinf(ratio)) {
    out.tau_c_theta = tau_c;
    out.tau_c_lambda = std::numeric_limits<double>::infinity();
    out.g_theta = 1.0 / (2.0 * tau_c * tau_c);
    out.g_lambda = 0.0;
    return out;
  }
  out.tau_c_theta = tau_c * std::sqrt(1.0 + 1.0 / (ratio * ratio));
  out.tau_c_lambda = ratio * out.tau_c_theta;
  out.g_theta = 1.0 / (2.0 * out.tau_c_theta * out.tau_c_theta);
  out.g_lambda = 2.0 / (out.tau_c_lambda * out.tau_c_lambda);
  return out;
}

}  // namespace pulsesim
