#include "sympsum/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

#include "sympsum/numfmt.hpp"

namespace sympsum {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string cell_params(const NormOracle& oracle, Exponent p, int n) {
  return "norm=" + oracle.spec + " p=" + p.str() + " n=" + std::to_string(n);
}

struct BlockStats {
  double max_residual = 0.0;
  double sum_residual = 0.0;
  long long residual_count = 0;
  long long violations = 0;
  long long hits = 0;
  std::string note;

  void merge(const BlockStats& o) {
    max_residual = std::max(max_residual, o.max_residual);
    sum_residual += o.sum_residual;
    residual_count += o.residual_count;
    violations += o.violations;
    hits += o.hits;
    if (note.empty()) note = o.note;
  }
};

constexpr long long kBlockSize = 4096;

// Runs fn(block_index, count, stats) over fixed-size blocks. Each block uses
// its own substream and results merge in block order, so the outcome does not
// depend on the worker count or thread scheduling.
template <class Fn>
BlockStats run_blocks(long long total, int workers, const Fn& fn) {
  const long long nblocks = total <= 0 ? 0 : (total + kBlockSize - 1) / kBlockSize;
  std::vector<BlockStats> parts(static_cast<std::size_t>(nblocks));
  std::exception_ptr error;
  if (workers <= 1) {
    for (long long b = 0; b < nblocks; ++b)
      fn(b, std::min(kBlockSize, total - b * kBlockSize), parts[static_cast<std::size_t>(b)]);
  } else {
    std::atomic<long long> next{0};
    std::atomic<bool> failed{false};
    std::mutex error_mutex;
    auto worker = [&] {
      for (;;) {
        const long long b = next.fetch_add(1);
        if (b >= nblocks || failed.load()) return;
        try {
          fn(b, std::min(kBlockSize, total - b * kBlockSize), parts[static_cast<std::size_t>(b)]);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
          failed.store(true);
          return;
        }
      }
    };
    std::vector<std::thread> pool;
    const int nthreads = static_cast<int>(std::min<long long>(workers, std::max<long long>(nblocks, 1)));
    pool.reserve(static_cast<std::size_t>(nthreads));
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
  }
  BlockStats out;
  for (const auto& p : parts) out.merge(p);
  return out;
}

Mat standard_omega(int n) {
  Mat omega = Mat::Zero(2 * n, 2 * n);
  omega.topRightCorner(n, n) = Mat::Identity(n, n);
  omega.bottomLeftCorner(n, n) = -Mat::Identity(n, n);
  return omega;
}

// Central-difference Jacobian of the lift; the realized step zp[j] - zm[j]
// is used as the divisor, which removes the rounding part of the stencil.
double symplectic_residual(const EmbeddingMap& map, const PhasePoint& z, const Mat& omega,
                           double step_scale) {
  const int n = map.n;
  const int dim = 2 * n;
  Vec zc(dim);
  zc << z.x, z.y;
  const double h = 1e-6 * (1.0 + zc.norm()) * step_scale;
  Mat jac(dim, dim);
  Vec zp = zc, zm = zc;
  for (int j = 0; j < dim; ++j) {
    zp[j] = zc[j] + h;
    zm[j] = zc[j] - h;
    const double realized = zp[j] - zm[j];
    const PhasePoint fp = lift(map, {zp.head(n), zp.tail(n)});
    const PhasePoint fm = lift(map, {zm.head(n), zm.tail(n)});
    jac.col(j).head(n) = (fp.x - fm.x) / realized;
    jac.col(j).tail(n) = (fp.y - fm.y) / realized;
    zp[j] = zc[j];
    zm[j] = zc[j];
  }
  return (jac.transpose() * omega * jac - omega).norm();
}

bool too_close_to_hyperplane(const Vec& x, const Vec& extents, double margin) {
  for (int i = 0; i < x.size(); ++i)
    if (std::abs(x[i]) < margin * extents[i]) return true;
  return false;
}

void require_consistent(const EmbeddingMap& map, const PSumDomain& domain, const char* who) {
  if (map.n != domain.n || map.oracle.spec != domain.oracle.spec)
    throw std::invalid_argument(std::string(who) + ": map and domain use different oracles");
}

}  // namespace

double j_pairing(const PhasePoint& u, const PhasePoint& v) {
  return u.x.dot(v.y) - u.y.dot(v.x);
}

VerificationReport check_symplectic(const EmbeddingMap& map, const PSumDomain& domain,
                                    long long samples, SampleStream stream,
                                    const SymplecticOptions& opts) {
  require_consistent(map, domain, "check_symplectic");
  const auto t0 = Clock::now();
  PSumDomain inner = domain;
  inner.scale *= (1.0 - opts.interior_margin);
  const Vec ext = axis_extents(domain.oracle, false);
  const Mat omega = standard_omega(map.n);
  const double axis_margin = opts.axis_margin * domain.scale;

  const BlockStats stats =
      run_blocks(samples, opts.workers, [&](long long b, long long count, BlockStats& st) {
        SampleStream sub = stream.substream(static_cast<std::uint64_t>(b));
        for (long long i = 0; i < count; ++i) {
          PhasePoint z = sample_in_psum(inner, sub);
          while (too_close_to_hyperplane(z.x, ext, axis_margin)) z = sample_in_psum(inner, sub);
          try {
            const double res = symplectic_residual(map, z, omega, opts.fd_step_scale);
            st.max_residual = std::max(st.max_residual, res);
            st.sum_residual += res;
            ++st.residual_count;
          } catch (const std::exception& e) {
            ++st.violations;
            if (st.note.empty()) st.note = std::string("sample failed: ") + e.what();
          }
        }
      });

  VerificationReport r;
  r.name = "symplectic";
  r.params = cell_params(domain.oracle, domain.p, domain.n) +
             " fd_step_scale=" + format_shortest(opts.fd_step_scale);
  r.seed = stream.seed;
  r.samples = samples;
  r.max_residual = stats.max_residual;
  r.mean_residual = stats.residual_count ? stats.sum_residual / stats.residual_count : 0.0;
  r.violations = stats.violations;
  r.note = stats.note;
  r.passed = stats.violations == 0 && stats.max_residual < 1e-6;
  r.elapsed_seconds = seconds_since(t0);
  return r;
}

VerificationReport check_containment(const EmbeddingMap& map, const PSumDomain& source,
                                     long long samples, SampleStream stream,
                                     const ContainmentOptions& opts) {
  require_consistent(map, source, "check_containment");
  if (std::abs(map.transfer.a() - source.scale) > 1e-9 * source.scale)
    throw std::invalid_argument("check_containment: source scale does not match the map domain");
  const auto t0 = Clock::now();
  PSumDomain inflated = source;
  inflated.scale *= opts.inflate;

  const BlockStats stats =
      run_blocks(samples, opts.workers, [&](long long b, long long count, BlockStats& st) {
        SampleStream sub = stream.substream(static_cast<std::uint64_t>(b));
        for (long long i = 0; i < count; ++i) {
          const PhasePoint z = sample_in_psum(inflated, sub);
          if (map.oracle.eval(z.x) > map.transfer.a()) {
            ++st.violations;  // radius beyond the transfer domain: not embeddable
            if (st.note.empty()) st.note = "source radius beyond transfer domain";
            continue;
          }
          double worst;
          try {
            const PhasePoint img = lift(map, z);
            worst = std::max(map.oracle.eval(img.x), map.oracle.dual_eval(img.y));
          } catch (const std::exception& e) {
            ++st.violations;
            if (st.note.empty()) st.note = std::string("lift failed: ") + e.what();
            continue;
          }
          st.max_residual = std::max(st.max_residual, worst);
          st.sum_residual += worst;
          ++st.residual_count;
          if (worst >= 1.0) {
            ++st.violations;
            if (st.note.empty()) st.note = "image gauge " + format_shortest(worst);
          }
        }
      });

  VerificationReport r;
  r.name = "containment";
  r.params = cell_params(source.oracle, source.p, source.n) +
             " inflate=" + format_shortest(opts.inflate);
  r.seed = stream.seed;
  r.samples = samples;
  r.max_residual = stats.max_residual;  // largest image gauge seen; must stay < 1
  r.mean_residual = stats.residual_count ? stats.sum_residual / stats.residual_count : 0.0;
  r.violations = stats.violations;
  r.note = stats.note;
  r.passed = stats.violations == 0;
  r.elapsed_seconds = seconds_since(t0);
  return r;
}

VerificationReport mc_volume(const PSumDomain& domain, long long samples, SampleStream stream,
                             int workers) {
  if (2 * domain.n > 12)
    throw std::domain_error("mc_volume: rejection sampling is limited to 2n <= 12");
  const auto t0 = Clock::now();
  const Vec ex = axis_extents(domain.oracle, false);
  const Vec ey = axis_extents(domain.oracle, true);

  const BlockStats stats =
      run_blocks(samples, workers, [&](long long b, long long count, BlockStats& st) {
        SampleStream sub = stream.substream(static_cast<std::uint64_t>(b));
        for (long long i = 0; i < count; ++i) {
          const Vec x = sample_in_norm_ball(domain.oracle.eval, ex, 1.0, sub);
          const Vec y = sample_in_norm_ball(domain.oracle.dual_eval, ey, 1.0, sub);
          if (psum_norm(domain, x, y) < 1.0) ++st.hits;
        }
      });

  const double est = static_cast<double>(stats.hits) / static_cast<double>(samples);
  const double se = std::sqrt(std::max(est * (1.0 - est), 0.0) / static_cast<double>(samples));
  const double expect = volume_ratio(domain.n, domain.p);

  VerificationReport r;
  r.name = "mc_volume";
  r.params = cell_params(domain.oracle, domain.p, domain.n);
  r.seed = stream.seed;
  r.samples = samples;
  r.estimate = est;
  r.std_error = se;
  r.expected = expect;
  r.passed = std::abs(est - expect) <= 3.0 * se;
  r.elapsed_seconds = seconds_since(t0);
  return r;
}

VerificationReport check_dual_gradient(const NormOracle& oracle, long long samples,
                                       SampleStream stream) {
  const auto t0 = Clock::now();
  double max_dev = 0.0, sum_dev = 0.0;
  for (long long i = 0; i < samples; ++i) {
    const Vec x = sample_on_norm_sphere(oracle, 1.0, stream);
    const double dev = std::abs(oracle.dual_eval(oracle.grad(x)) - 1.0);
    max_dev = std::max(max_dev, dev);
    sum_dev += dev;
  }
  VerificationReport r;
  r.name = "dual_gradient";
  r.params = "norm=" + oracle.spec + " n=" + std::to_string(oracle.dim);
  r.seed = stream.seed;
  r.samples = samples;
  r.max_residual = max_dev;
  r.mean_residual = samples ? sum_dev / static_cast<double>(samples) : 0.0;
  r.expected = 1.0;
  r.passed = max_dev < 1e-9;
  r.elapsed_seconds = seconds_since(t0);
  return r;
}

VerificationReport check_two_sum_duality(const NormOracle& oracle, long long targets,
                                         SampleStream stream, int restarts) {
  const auto t0 = Clock::now();
  const int n = oracle.dim;
  const auto gauge = [o = oracle, n](const Vec& u) {
    return std::hypot(o.eval(u.head(n)), o.dual_eval(u.tail(n)));
  };

  double max_rel = 0.0, max_abs_rel = 0.0, sum_abs_rel = 0.0;
  long long violations = 0;
  std::string note;
  for (long long i = 0; i < targets; ++i) {
    Vec target = gaussian_vector(2 * n, stream);
    while (target.norm() < 1e-9) target = gaussian_vector(2 * n, stream);
    const double closed = std::hypot(oracle.dual_eval(target.head(n)), oracle.eval(target.tail(n)));
    const DualNormResult numeric = dual_norm_numeric(gauge, target, restarts, stream);
    const double rel = (closed - numeric.value) / closed;
    max_rel = std::max(max_rel, rel);
    max_abs_rel = std::max(max_abs_rel, std::abs(rel));
    sum_abs_rel += std::abs(rel);
    if (rel < -1e-9) {
      ++violations;  // the ascent may undershoot but must never overshoot
      if (note.empty()) note = "ascent exceeded the closed form by " + format_shortest(-rel);
    }
    if (numeric.low_confidence) {
      ++violations;
      if (note.empty()) note = "low-confidence ascent";
    }
  }

  VerificationReport r;
  r.name = "two_sum_duality";
  r.params = "norm=" + oracle.spec + " n=" + std::to_string(n) +
             " restarts=" + std::to_string(restarts);
  r.seed = stream.seed;
  r.samples = targets;
  r.max_residual = max_abs_rel;
  r.mean_residual = targets ? sum_abs_rel / static_cast<double>(targets) : 0.0;
  r.violations = violations;
  r.note = note;
  r.passed = violations == 0 && max_rel <= 1e-5;
  r.elapsed_seconds = seconds_since(t0);
  return r;
}

VerificationReport j_norm(const NormOracle& oracle, int restarts, SampleStream stream) {
  const auto t0 = Clock::now();
  const int n = oracle.dim;
  // T° is the unit ball of sqrt(dual(x)^2 + eval(y)^2) (dual of the 2-sum).
  const auto polar_gauge = [o = oracle, n](const Vec& u) {
    return std::hypot(o.dual_eval(u.head(n)), o.eval(u.tail(n)));
  };
  const auto pair = [n](const Vec& u, const Vec& v) {
    return u.head(n).dot(v.tail(n)) - u.tail(n).dot(v.head(n));
  };

  // Analytic witness: u = (grad(u_y), 0), v = (0, u_y) with eval(u_y) = 1
  // are both on the boundary of T° and pair to eval(u_y) = 1 exactly.
  double witness_dev = 0.0;
  for (int i = 0; i < 16; ++i) {
    const Vec uy = sample_on_norm_sphere(oracle, 1.0, stream);
    PhasePoint u{oracle.grad(uy), Vec::Zero(n)};
    PhasePoint v{Vec::Zero(n), uy};
    witness_dev = std::max(witness_dev, std::abs(j_pairing(u, v) - 1.0));
  }

  const auto project = [&](Vec z) {
    const double m = polar_gauge(z);
    if (m > 1.0) z /= m;
    return z;
  };

  double best = 0.0;
  double best_gauge_u = 0.0, best_gauge_v = 0.0;
  for (int r = 0; r < restarts; ++r) {
    Vec u = gaussian_vector(2 * n, stream);
    Vec v = gaussian_vector(2 * n, stream);
    u /= polar_gauge(u);
    v /= polar_gauge(v);
    double obj = pair(u, v);
    double step = 0.5;
    for (int it = 0; it < 800; ++it) {
      // gradient of <Ju, v>: in u it is J^T v = (v_y, -v_x), in v it is Ju
      Vec gu(2 * n), gv(2 * n);
      gu << v.tail(n), -v.head(n);
      gv << -u.tail(n), u.head(n);
      Vec cu = project(u + step * gu);
      Vec cv = project(v + step * gv);
      const double cand = pair(cu, cv);
      if (cand > obj) {
        const double moved = (cu - u).norm() + (cv - v).norm();
        u = std::move(cu);
        v = std::move(cv);
        obj = cand;
        step *= 1.3;
        if (moved < 1e-9) break;
      } else {
        step *= 0.5;
        if (step < 1e-12) break;
      }
    }
    if (obj > best) {
      best = obj;
      best_gauge_u = polar_gauge(u);
      best_gauge_v = polar_gauge(v);
    }
  }

  VerificationReport r;
  r.name = "j_norm";
  r.params = "norm=" + oracle.spec + " n=" + std::to_string(n) +
             " restarts=" + std::to_string(restarts);
  r.seed = stream.seed;
  r.samples = restarts;
  r.max_residual = witness_dev;
  r.estimate = best;
  r.expected = 1.0;
  // At the maximizer both gauge constraints are active; kept as a diagnostic.
  r.note = "active_gauges=" + format_shortest(best_gauge_u) + "," + format_shortest(best_gauge_v);
  r.passed = witness_dev <= 1e-9 && best <= 1.0 + 1e-6 && best >= 1.0 - 1e-4;
  r.elapsed_seconds = seconds_since(t0);
  return r;
}

BoundsReport report_bounds(const std::string& norm_name, Exponent p, int n) {
  if (n < 1) throw std::domain_error("report_bounds: dimension must be >= 1");
  const RescaleConstants c = rescale_constants(p);
  BoundsReport b;
  b.norm_name = norm_name;
  b.p = p;
  b.n = n;
  b.rho = c.rho;
  b.lambda = c.lambda;
  b.capacity_upper = capacity_upper_bound(p);
  b.volume_ratio_value = volume_ratio(n, p);
  if (!p.is_inf() && p.value() == 2.0) b.ehz = ehz_bounds(n);
  if (p.is_inf() || p.value() >= 2.0) b.gromov_width = b.capacity_upper;
  return b;
}

std::string BoundsReport::to_json() const {
  std::string j = "{";
  j += "\"norm\":\"" + norm_name + "\"";
  j += ",\"p\":\"" + p.str() + "\"";
  j += ",\"n\":" + std::to_string(n);
  j += ",\"rho\":" + format_sig17(rho);
  j += ",\"lambda\":" + format_sig17(lambda);
  j += ",\"capacity_upper_bound\":" + format_sig17(capacity_upper);
  j += ",\"volume_ratio\":" + format_sig17(volume_ratio_value);
  j += ",\"ehz_lower\":" + (ehz ? format_sig17(ehz->lower) : std::string("null"));
  j += ",\"ehz_upper\":" + (ehz ? format_sig17(ehz->upper) : std::string("null"));
  j += ",\"gromov_width\":" + (gromov_width ? format_sig17(*gromov_width) : std::string("null"));
  j += "}";
  return j;
}

std::string BoundsReport::to_text() const {
  std::string t = "norm=" + norm_name + " p=" + p.str() + " n=" + std::to_string(n);
  t += "\n  rho(p)                 = " + format_sig17(rho);
  t += "\n  lambda(p)              = " + format_sig17(lambda);
  t += "\n  capacity upper bound   = " + format_sig17(capacity_upper);
  t += "\n  volume ratio           = " + format_sig17(volume_ratio_value);
  if (ehz)
    t += "\n  EHZ interval           = [" + format_sig17(ehz->lower) + ", " +
         format_sig17(ehz->upper) + "]";
  if (gromov_width) t += "\n  Gromov width (disc)    = " + format_sig17(*gromov_width);
  return t;
}

}  // namespace sympsum
