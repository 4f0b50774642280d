#pragma once

#include "sympsum/embedding.hpp"
#include "sympsum/norms.hpp"
#include "sympsum/stream.hpp"

namespace sympsum {

/// Per-axis extents of the oracle's unit ball: extent_i = 1/eval(e_i)
/// (dual ball when dual is true). For the unconditional bodies this library
/// instantiates, the ball lies inside the box of its axis extents, so the
/// box is a valid rejection envelope.
Vec axis_extents(const NormOracle& oracle, bool dual = false);

/// Vector of dim independent standard normals.
Vec gaussian_vector(int dim, SampleStream& stream);

/// Uniform draw from the open ball {norm_eval < radius} by rejection from
/// the box of radius * extents. Throws if 10^7 consecutive proposals reject.
Vec sample_in_norm_ball(const std::function<double(const Vec&)>& norm_eval, const Vec& extents,
                        double radius, SampleStream& stream);

/// Uniform draw from the open domain scale * (K (+)_p K°) by rejection from
/// the product box of the per-factor extents. Points closer than 1e-12 to the
/// boundary (in p-sum gauge) are rejected as well.
PhasePoint sample_in_psum(const PSumDomain& domain, SampleStream& stream);

/// Point with eval(u) == radius: a Gaussian direction rescaled by the norm.
/// Full support on the sphere; not uniform except in the Euclidean case.
Vec sample_on_norm_sphere(const NormOracle& oracle, double radius, SampleStream& stream);

}  // namespace sympsum
