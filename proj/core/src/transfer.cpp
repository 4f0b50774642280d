#include "sympsum/transfer.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>
#include <vector>

#include "sympsum/numfmt.hpp"

namespace sympsum {

namespace {

constexpr double kPi = 3.14159265358979323846;

double simpson_estimate(double fa, double fm, double fb, double h) {
  return h / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_simpson_rec(const std::function<double(double)>& fn, double a, double b, double fa,
                            double fm, double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = fn(lm);
  const double frm = fn(rm);
  const double left = simpson_estimate(fa, flm, fm, m - a);
  const double right = simpson_estimate(fm, frm, fb, b - m);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return adaptive_simpson_rec(fn, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson_rec(fn, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

double adaptive_simpson(const std::function<double(double)>& fn, double a, double b, double tol,
                        int max_depth = 48) {
  if (b <= a) return 0.0;
  const double fa = fn(a);
  const double fb = fn(b);
  const double m = 0.5 * (a + b);
  const double fm = fn(m);
  return adaptive_simpson_rec(fn, a, b, fa, fm, fb, simpson_estimate(fa, fm, fb, b - a), tol,
                              max_depth);
}

// Cumulative integral of a profile with checkpoints on a uniform grid; each
// evaluation integrates only the residual sub-segment.
class Cumulative {
 public:
  Cumulative(std::function<double(double)> g, double a, int segments = 1024, double seg_tol = 1e-14)
      : g_(std::move(g)), a_(a), tol_(seg_tol), cum_(segments + 1, 0.0) {
    const double h = a_ / segments;
    for (int k = 1; k <= segments; ++k)
      cum_[k] = cum_[k - 1] + adaptive_simpson(g_, (k - 1) * h, k * h, tol_);
  }

  double total() const { return cum_.back(); }
  double endpoint() const { return a_; }
  const std::function<double(double)>& integrand() const { return g_; }

  double eval(double x) const {
    if (x <= 0.0) return 0.0;
    if (x >= a_) return total();
    const int n = static_cast<int>(cum_.size()) - 1;
    const double h = a_ / n;
    int k = std::min(static_cast<int>(x / h), n - 1);
    return cum_[k] + adaptive_simpson(g_, k * h, x, tol_);
  }

  // x with eval(x) = target, for target in [0, total]. The cumulative is
  // strictly increasing, so bisection is unconditionally safe; one Newton
  // step polishes the bisection result.
  double invert(double target) const {
    if (target <= 0.0) return 0.0;
    if (target >= total()) return a_;
    const int n = static_cast<int>(cum_.size()) - 1;
    const double h = a_ / n;
    const auto it = std::upper_bound(cum_.begin(), cum_.end(), target);
    int k = std::max(0, static_cast<int>(it - cum_.begin()) - 1);
    double lo = k * h, hi = std::min((k + 1) * h, a_);
    while (hi - lo > 1e-13) {
      const double mid = 0.5 * (lo + hi);
      (eval(mid) < target ? lo : hi) = mid;
    }
    double x = 0.5 * (lo + hi);
    const double slope = g_(x);
    if (slope > 1e-12) x = std::clamp(x - (eval(x) - target) / slope, lo, hi);
    return x;
  }

 private:
  std::function<double(double)> g_;
  double a_, tol_;
  std::vector<double> cum_;
};

void check_concave_on_grid(const TransferFunction& f) {
  // Central second difference of f computed from f', which is exact up to
  // the integrand evaluations and so not polluted by quadrature noise in f.
  constexpr double kStep = 1e-4;
  constexpr double kTol = 1e-6;
  constexpr int kGrid = 1000;
  const double lo = kStep, hi = f.a() - kStep;
  if (hi <= lo) return;
  for (int i = 0; i <= kGrid; ++i) {
    const double t = lo + (hi - lo) * i / kGrid;
    const double second = (f.derivative(t + kStep) - f.derivative(t - kStep)) / (2.0 * kStep);
    if (second > kTol)
      throw std::runtime_error("build_transfer: transfer is not concave at t = " +
                               format_shortest(t) + " (f'' ~ " + format_shortest(second) + ")");
    if (t < f.a() - 2.0 * kStep && !(f.derivative(t) > 0.0))
      throw std::runtime_error("build_transfer: f' is not positive at t = " + format_shortest(t));
  }
}

}  // namespace

Profile make_profile(double a, std::function<double(double)> g) {
  if (!(a > 0.0)) throw std::domain_error("make_profile: endpoint must be positive");
  constexpr int kGrid = 512;
  for (int i = 0; i < kGrid; ++i) {
    const double t = a * i / kGrid;
    const double v = g(t);
    if (!(v > 0.0) || !std::isfinite(v))
      throw std::domain_error("make_profile: profile must be positive on [0, a), g(" +
                              format_shortest(t) + ") = " + format_shortest(v));
  }
  if (g(a) < 0.0) throw std::domain_error("make_profile: negative value at the right endpoint");
  Profile p;
  p.a = a;
  p.g = std::move(g);
  p.total = adaptive_simpson(p.g, 0.0, a, 1e-13);
  if (!(p.total > 0.0) || !std::isfinite(p.total))
    throw std::domain_error("make_profile: integral is not positive and finite");
  return p;
}

Profile unit_profile(double b) {
  return make_profile(b, [](double) { return 1.0; });
}

Profile psum_profile(Exponent p, const RescaleConstants& constants, PsumProfileConstant variant) {
  if (p.is_inf())
    throw std::invalid_argument("psum_profile: p = inf is the identity case, no profile needed");
  const double pv = p.value();
  const double c = variant == PsumProfileConstant::kRescaled ? std::pow(constants.lambda, pv)
                                                             : 1.0 / constants.rho;
  const double a = std::pow(c, 1.0 / pv);
  return make_profile(
      a, [c, pv](double t) { return std::pow(std::max(c - std::pow(t, pv), 0.0), 1.0 / pv); });
}

std::string profile_table_csv(const Profile& profile, int rows) {
  if (rows < 2) throw std::invalid_argument("profile_table_csv: need at least 2 rows");
  std::string out = "t,g\n";
  for (int i = 0; i < rows; ++i) {
    const double t = profile.a * i / (rows - 1);
    out += format_sig17(t) + "," + format_sig17(profile.g(t)) + "\n";
  }
  return out;
}

TransferFunction::TransferFunction(double a, double b, std::function<double(double)> f,
                                   std::function<double(double)> fprime, double fprime0,
                                   bool concave)
    : a_(a), b_(b), fprime0_(fprime0), concave_(concave), f_(std::move(f)),
      fprime_(std::move(fprime)) {}

double TransferFunction::value(double t) const {
  if (t < 0.0 || t > a_ * (1.0 + 1e-12))
    throw std::domain_error("TransferFunction: argument " + format_shortest(t) +
                            " outside [0, " + format_shortest(a_) + "]");
  if (t < kNearZero) return fprime0_ * t;
  if (t >= a_ - kEndpointSnap) return b_;
  return f_(t);
}

double TransferFunction::derivative(double t) const {
  if (t < 0.0 || t > a_ * (1.0 + 1e-12))
    throw std::domain_error("TransferFunction: argument " + format_shortest(t) +
                            " outside [0, " + format_shortest(a_) + "]");
  if (t < kNearZero) return fprime0_;
  return fprime_(std::min(t, a_));
}

TransferFunction euclidean_disc_f() {
  const double a = 2.0 / std::sqrt(kPi);
  auto f = [](double t) {
    const double s = std::sqrt(std::max(4.0 / kPi - t * t, 0.0));
    const double u = std::clamp(std::sqrt(kPi) / 2.0 * t, -1.0, 1.0);
    return 2.0 / kPi * std::asin(u) + 0.5 * t * s;
  };
  auto fp = [](double t) { return std::sqrt(std::max(4.0 / kPi - t * t, 0.0)); };
  TransferFunction out(a, 1.0, f, fp, a, /*concave=*/true);
  check_concave_on_grid(out);
  return out;
}

TransferFunction build_transfer(const Profile& g, const Profile& h) {
  if (std::abs(g.total - h.total) > 1e-8 * g.total)
    throw std::invalid_argument(
        "build_transfer: profile integrals differ (" + format_shortest(g.total) + " vs " +
        format_shortest(h.total) + "); the construction requires equal totals");

  auto G = std::make_shared<Cumulative>(g.g, g.a);
  auto H = std::make_shared<Cumulative>(h.g, h.a);
  const double b = h.a;
  const double fprime0 = g.g(0.0) / h.g(0.0);

  auto f = [G, H](double t) { return H->invert(std::min(G->eval(t), H->total())); };
  auto fp = [G, H, gg = g.g, hh = h.g, b](double t) {
    const double ft = H->invert(std::min(G->eval(t), H->total()));
    const double hv = hh(std::min(ft, b));
    const double gv = gg(t);
    if (hv <= 1e-300) {
      if (gv <= 1e-300) return 0.0;  // both profiles vanish at the right edge
      throw std::runtime_error("build_transfer: derivative unbounded at t = " +
                               format_shortest(t));
    }
    return gv / hv;
  };

  TransferFunction out(g.a, b, std::move(f), std::move(fp), fprime0, /*concave=*/true);
  check_concave_on_grid(out);  // throws when f'' > tol anywhere on the grid
  return out;
}

}  // namespace sympsum
