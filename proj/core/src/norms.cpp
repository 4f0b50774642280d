#include "sympsum/norms.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "sympsum/numfmt.hpp"

namespace sympsum {

namespace {

struct LqParams {
  double q;
  Vec w;
};

double lq_eval(const LqParams& P, const Vec& x) {
  const double m = x.cwiseAbs().maxCoeff();
  if (m == 0.0) return 0.0;
  double s = 0.0;
  for (int i = 0; i < x.size(); ++i) s += P.w[i] * std::pow(std::abs(x[i]) / m, P.q);
  return m * std::pow(s, 1.0 / P.q);
}

Vec lq_grad(const LqParams& P, const Vec& x) {
  const double N = lq_eval(P, x);
  if (N == 0.0) throw std::domain_error("lq norm: gradient undefined at the origin");
  Vec g(x.size());
  for (int i = 0; i < x.size(); ++i) {
    const double r = std::abs(x[i]) / N;
    g[i] = (x[i] >= 0 ? 1.0 : -1.0) * P.w[i] * std::pow(r, P.q - 1.0);
  }
  return g;
}

void check_dim(const NormOracle& o, const Vec& v, const char* what) {
  if (v.size() != o.dim)
    throw std::invalid_argument(std::string(what) + ": dimension mismatch, expected " +
                                std::to_string(o.dim) + ", got " + std::to_string(v.size()));
}

std::string lq_spec_string(double q, const Vec& w) {
  std::string s = "lq:" + format_shortest(q);
  if (!(w.array() == 1.0).all()) {
    s += ':';
    for (int i = 0; i < w.size(); ++i) {
      if (i) s += ',';
      s += format_shortest(w[i]);
    }
  }
  return s;
}

}  // namespace

NormOracle make_lq_norm(int n, double q, const Vec& weights) {
  if (n < 1) throw std::domain_error("make_lq_norm: dimension must be >= 1");
  if (!(q > 1.0) || std::isinf(q))
    throw std::domain_error("make_lq_norm: q must lie strictly in (1, inf) for a C1 sphere");
  if (weights.size() != n) throw std::invalid_argument("make_lq_norm: weight count != n");
  if (!(weights.array() > 0.0).all())
    throw std::domain_error("make_lq_norm: weights must be strictly positive");

  const double qd = q / (q - 1.0);
  LqParams primal{q, weights};
  LqParams dual{qd, weights.array().pow(1.0 - qd).matrix()};

  NormOracle o;
  o.dim = n;
  o.smooth = true;
  o.spec = lq_spec_string(q, weights);
  o.eval = [primal](const Vec& x) { return lq_eval(primal, x); };
  o.grad = [primal](const Vec& x) { return lq_grad(primal, x); };
  o.dual_eval = [dual](const Vec& y) { return lq_eval(dual, y); };
  o.dual_grad = [dual](const Vec& y) { return lq_grad(dual, y); };
  return o;
}

NormOracle make_lq_norm(int n, double q) { return make_lq_norm(n, q, Vec::Ones(n)); }

NormOracle parse_norm_spec(const std::string& spec, int n) {
  std::istringstream in(spec);
  std::string family, qs, ws;
  std::getline(in, family, ':');
  if (family != "lq")
    throw std::invalid_argument("norm spec: unknown family \"" + family + "\" (expected lq:...)");
  if (!std::getline(in, qs, ':'))
    throw std::invalid_argument("norm spec: missing exponent in \"" + spec + "\"");
  const double q = std::stod(qs);
  if (!std::getline(in, ws)) return make_lq_norm(n, q);

  std::vector<double> w;
  std::istringstream wlist(ws);
  std::string item;
  while (std::getline(wlist, item, ',')) w.push_back(std::stod(item));
  if (static_cast<int>(w.size()) != n)
    throw std::invalid_argument("norm spec: " + std::to_string(w.size()) +
                                " weights for dimension " + std::to_string(n));
  return make_lq_norm(n, q, Eigen::Map<const Vec>(w.data(), n));
}

PSumDomain make_psum_domain(const NormOracle& oracle, Exponent p, double scale) {
  if (!(scale > 0.0)) throw std::domain_error("make_psum_domain: scale must be positive");
  return {oracle, p, scale, oracle.dim};
}

double psum_norm(const PSumDomain& domain, const Vec& x, const Vec& y) {
  check_dim(domain.oracle, x, "psum_norm(x)");
  check_dim(domain.oracle, y, "psum_norm(y)");
  const double ex = domain.oracle.eval(x);
  const double ey = domain.oracle.dual_eval(y);
  if (domain.p.is_inf()) return std::max(ex, ey);
  const double p = domain.p.value();
  const double m = std::max(ex, ey);
  if (m == 0.0) return 0.0;
  return m * std::pow(std::pow(ex / m, p) + std::pow(ey / m, p), 1.0 / p);
}

bool PSumDomain::contains(const Vec& x, const Vec& y) const {
  return psum_norm(*this, x, y) < scale;
}

DualNormResult dual_norm_numeric(const std::function<double(const Vec&)>& norm_eval,
                                 const Vec& target, int restarts, SampleStream& stream,
                                 const AscentOptions& opts) {
  if (restarts < 1) throw std::invalid_argument("dual_norm_numeric: restarts must be >= 1");
  const int dim = static_cast<int>(target.size());
  DualNormResult result;
  result.low_confidence = true;
  if (target.isZero()) {
    result.low_confidence = false;
    return result;
  }
  const double step0 = 1.0 / target.norm();

  for (int r = 0; r < restarts; ++r) {
    Vec u;
    if (r == 0) {
      u = target;  // the normalized target is optimal for Euclidean balls and a good start otherwise
    } else {
      u = Vec(dim);
      for (int i = 0; i < dim; ++i) u[i] = stream.next_gaussian();
    }
    const double nu = norm_eval(u);
    if (!(nu > 0.0)) continue;
    u /= nu;

    double best = u.dot(target);
    const double start_val = best;
    double step = step0;
    for (int it = 0; it < opts.max_iters; ++it) {
      Vec cand = u + step * target;
      const double nc = norm_eval(cand);
      if (!(nc > 0.0)) break;
      cand /= nc;
      const double val = cand.dot(target);
      if (val > best) {
        const double moved = (cand - u).norm();
        u = std::move(cand);
        best = val;
        step *= 1.5;
        if (moved < opts.move_tol) break;
      } else {
        step *= 0.5;
        if (step < 1e-14 * step0) break;
      }
    }
    if (best > start_val) result.low_confidence = false;
    result.value = std::max(result.value, best);
  }
  return result;
}

}  // namespace sympsum
