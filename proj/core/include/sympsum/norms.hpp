#pragma once

#include <Eigen/Dense>
#include <functional>
#include <string>

#include "sympsum/exponent.hpp"
#include "sympsum/stream.hpp"

namespace sympsum {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// A centrally symmetric norm that is C1 away from the origin, together with
/// its gradient, dual norm and dual gradient. All callables are pure;
/// the oracle is immutable after construction.
///
/// Conventions: eval is positively homogeneous and even; grad is defined for
/// x != 0 and satisfies <grad(x), x> = eval(x); dual_eval(y) is
/// sup {<y,x> : eval(x) <= 1}.
struct NormOracle {
  int dim = 0;
  bool smooth = true;
  std::string spec;  // canonical "lq:q[:w1,...]" form, round-trips through parse_norm_spec

  std::function<double(const Vec&)> eval;
  std::function<Vec(const Vec&)> grad;
  std::function<double(const Vec&)> dual_eval;
  std::function<Vec(const Vec&)> dual_grad;
};

/// Weighted l_q norm (sum_i w_i |x_i|^q)^(1/q). Requires q strictly inside
/// (1, inf) so the unit sphere is C1, and strictly positive weights.
/// The dual is the weighted l_q' norm with q' = q/(q-1) and weights w^(1-q').
NormOracle make_lq_norm(int n, double q, const Vec& weights);
NormOracle make_lq_norm(int n, double q);

/// Parse "lq:<q>[:w1,w2,...]" into an oracle of dimension n.
NormOracle parse_norm_spec(const std::string& spec, int n);

/// The domain scale*(K (+)_p K°) where K is the oracle's unit ball.
/// Membership is strict: (x, y) lies inside iff the p-sum gauge is < scale.
struct PSumDomain {
  NormOracle oracle;
  Exponent p = Exponent(2);
  double scale = 1.0;
  int n = 0;

  bool contains(const Vec& x, const Vec& y) const;
};

PSumDomain make_psum_domain(const NormOracle& oracle, Exponent p, double scale = 1.0);

/// The gauge (eval(x)^p + dual_eval(y)^p)^(1/p); max of the two at p = inf.
/// Scale-free: the domain's scale field is not applied.
double psum_norm(const PSumDomain& domain, const Vec& x, const Vec& y);

struct AscentOptions {
  int max_iters = 600;
  double move_tol = 1e-8;  // stop once an accepted move is this small
};

struct DualNormResult {
  double value = 0.0;         // best objective found; a lower bound on the dual norm
  bool low_confidence = false;  // no restart managed to improve on its start
};

/// sup {<u, target> : norm_eval(u) <= 1} by multi-start projected gradient
/// ascent, projecting by rescaling u -> u / norm_eval(u). Works for any
/// homogeneous convex norm_eval; the reported value never exceeds the true
/// supremum beyond rounding.
DualNormResult dual_norm_numeric(const std::function<double(const Vec&)>& norm_eval,
                                 const Vec& target, int restarts, SampleStream& stream,
                                 const AscentOptions& opts = {});

}  // namespace sympsum
