#pragma once

#include "sympsum/norms.hpp"
#include "sympsum/transfer.hpp"

namespace sympsum {

/// Point (x, y) of phase space R^n x R^n; x is position, y is momentum.
struct PhasePoint {
  Vec x;
  Vec y;
};

/// The cotangent lift e(x, y) = (phi(x), (Dphi(x)^-1)^T y) of the radial
/// diffeomorphism phi(x) = f(eval(x)) x / eval(x). Immutable once built.
/// momentum_scale multiplies the lifted momentum and is 1 for the genuine
/// embedding; diagnostics set it to another value as a negative control,
/// which destroys symplecticity.
struct EmbeddingMap {
  NormOracle oracle;
  TransferFunction transfer;
  int n = 0;
  double momentum_scale = 1.0;
};

/// Embedding of lambda(p) (K (+)_p K°) into K x K°: p-sum profile against the
/// unit profile, lifted through the resulting transfer.
EmbeddingMap make_psum_embedding(const NormOracle& oracle, Exponent p);

/// phi(x) = f(r) x / r with r = eval(x); near the origin the linearization
/// f'(0) x. Throws if r exceeds the transfer domain.
Vec radial_map(const EmbeddingMap& map, const Vec& x);

/// Dphi(x) = (f'(r) - f(r)/r) (x/r) grad(x)^T + (f(r)/r) I, invertible
/// whenever f'(r) > 0; near the origin f'(0) I.
Mat radial_jacobian(const EmbeddingMap& map, const Vec& x);

/// (phi(x), w) with Dphi(x)^T w = y. The rank-one structure of Dphi gives w
/// in closed form (Sherman-Morrison); a dense solve covers the near-singular
/// remainder.
PhasePoint lift(const EmbeddingMap& map, const PhasePoint& z);

/// One-shot convenience: build the p-sum embedding and lift z through it.
/// Requires the p-sum gauge of z to be strictly below lambda(p).
PhasePoint embed_psum(const NormOracle& oracle, Exponent p, const PhasePoint& z);

}  // namespace sympsum
