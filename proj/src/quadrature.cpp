#include "pulsesim/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

namespace pulsesim {

void QuadratureSpec::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
    throw std::invalid_argument("quadrature tolerances must be positive");
  if (!(omega_max > 0.0) || std::exp(-omega_max) >= abs_tol)
    throw std::invalid_argument(
        "omega_max too small: spectral tail exceeds abs_tol");
  if (max_panel_depth < 1)
    throw std::invalid_argument("max_panel_depth must be at least 1");
}

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule (positive abscissae).
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

class PanelIntegrator {
 public:
  PanelIntegrator(const VectorIntegrand& f, std::size_t n,
                  const QuadratureSpec& spec)
      : f_(f), n_(n), spec_(spec) {
    fv_.resize(15 * n_);
    acc_val_.assign(n_, 0.0);
    acc_err_.assign(n_, 0.0);
    tol_per_width_.assign(n_, 0.0);
  }

  QuadratureResult run(double oscillation_time) {
    const double width_total = spec_.omega_max;
    const double w0 =
        std::min(1.0, std::numbers::pi / std::max(oscillation_time, 1.0));
    const int n_panels = static_cast<int>(std::ceil(width_total / w0));
    const double w = width_total / n_panels;

    // First pass: estimate each component's magnitude so relative tolerances
    // have a scale before refinement starts.
    std::vector<double> seed_val(n_panels * n_), seed_err(n_panels * n_);
    std::vector<double> scale(n_, 0.0);
    for (int p = 0; p < n_panels; ++p) {
      gk15(p * w, (p + 1) * w, &seed_val[p * n_], &seed_err[p * n_]);
      for (std::size_t c = 0; c < n_; ++c) scale[c] += std::abs(seed_val[p * n_ + c]);
    }
    for (std::size_t c = 0; c < n_; ++c)
      tol_per_width_[c] =
          std::max(spec_.abs_tol, spec_.rel_tol * scale[c]) / width_total;

    for (int p = 0; p < n_panels; ++p)
      refine(p * w, (p + 1) * w, &seed_val[p * n_], &seed_err[p * n_], 0);

    QuadratureResult out;
    out.value = std::move(acc_val_);
    out.error = std::move(acc_err_);
    out.evaluations = evals_;
    return out;
  }

 private:
  // Gauss-Kronrod (7,15) on [a,b]; fills integral[0..n) and error[0..n).
  void gk15(double a, double b, double* integral, double* error) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    // Node layout in fv_: pairs (c - h*x_i, c + h*x_i) for i = 0..6, center last.
    for (int i = 0; i < 7; ++i) {
      f_(c - h * kXgk[i], std::span<double>(&fv_[(2 * i) * n_], n_));
      f_(c + h * kXgk[i], std::span<double>(&fv_[(2 * i + 1) * n_], n_));
    }
    f_(c, std::span<double>(&fv_[14 * n_], n_));
    evals_ += 15;

    for (std::size_t k = 0; k < n_; ++k) {
      double resk = kWgk[7] * fv_[14 * n_ + k];
      double resg = kWg[3] * fv_[14 * n_ + k];
      for (int i = 0; i < 7; ++i) {
        const double pair = fv_[(2 * i) * n_ + k] + fv_[(2 * i + 1) * n_ + k];
        resk += kWgk[i] * pair;
        if (i % 2 == 1) resg += kWg[i / 2] * pair;  // Gauss nodes are x_1,x_3,x_5
      }
      const double mean = 0.5 * resk;
      double resasc = kWgk[7] * std::abs(fv_[14 * n_ + k] - mean);
      for (int i = 0; i < 7; ++i)
        resasc += kWgk[i] * (std::abs(fv_[(2 * i) * n_ + k] - mean) +
                             std::abs(fv_[(2 * i + 1) * n_ + k] - mean));
      resasc *= h;
      double err = std::abs(resk - resg) * h;
      if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
      integral[k] = resk * h;
      error[k] = err;
    }
  }

  void refine(double a, double b, const double* integral, const double* error,
              int depth) {
    bool ok = true;
    for (std::size_t c = 0; c < n_; ++c)
      if (error[c] > tol_per_width_[c] * (b - a)) { ok = false; break; }
    if (ok) {
      for (std::size_t c = 0; c < n_; ++c) {
        acc_val_[c] += integral[c];
        acc_err_[c] += error[c];
      }
      return;
    }
    if (depth >= spec_.max_panel_depth) {
      double worst = 0.0;
      for (std::size_t c = 0; c < n_; ++c) worst = std::max(worst, error[c]);
      throw QuadratureError(
          "quadrature failed to converge on panel [" + std::to_string(a) +
              ", " + std::to_string(b) + "] at depth " + std::to_string(depth),
          worst);
    }
    const double m = 0.5 * (a + b);
    std::vector<double> iv(2 * n_), ev(2 * n_);
    gk15(a, m, iv.data(), ev.data());
    gk15(m, b, &iv[n_], &ev[n_]);
    // Copy out before recursing: fv_ and the child buffers are reused below.
    std::vector<double> left_i(iv.begin(), iv.begin() + n_);
    std::vector<double> left_e(ev.begin(), ev.begin() + n_);
    refine(a, m, left_i.data(), left_e.data(), depth + 1);
    refine(m, b, &iv[n_], &ev[n_], depth + 1);
  }

  const VectorIntegrand& f_;
  std::size_t n_;
  QuadratureSpec spec_;
  std::vector<double> fv_;
  std::vector<double> acc_val_, acc_err_, tol_per_width_;
  std::size_t evals_ = 0;
};

}  // namespace

QuadratureResult integrate_spectral(const VectorIntegrand& f,
                                    std::size_t n_components,
                                    double oscillation_time,
                                    const QuadratureSpec& spec) {
  spec.validate();
  if (n_components == 0)
    throw std::invalid_argument("integrate_spectral: no components");
  PanelIntegrator integ(f, n_components, spec);
  return integ.run(oscillation_time);
}

}  // namespace pulsesim
