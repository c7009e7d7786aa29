#pragma once

#include <Eigen/Dense>
#include <random>

#include "sopq/cartan_polar.hpp"
#include "sopq/quasisphere.hpp"

namespace sopq {

// Seeded random generators for the property suites. Everything here is a
// pure function of the passed-in engine state.

Eigen::VectorXd random_gaussian_vector(int dim, std::mt19937_64& rng);
Eigen::VectorXd random_unit_vector(int dim, std::mt19937_64& rng);
Eigen::MatrixXd random_antisymmetric(int dim, std::mt19937_64& rng);

// Element of the k part (block-diagonal antisymmetric).
AlgebraElement random_k_element(const Signature& sig, std::mt19937_64& rng, double scale = 1.0);

// Element of the p part (symmetric with zero diagonal blocks); when
// norm_cap > 0 the result is rescaled to a Frobenius norm drawn uniformly
// from (0, norm_cap].
AlgebraElement random_p_element(const Signature& sig, std::mt19937_64& rng,
                                double norm_cap = 0.0);

// General algebra element: k part plus p part.
AlgebraElement random_algebra_element(const Signature& sig, std::mt19937_64& rng,
                                      double scale = 1.0);

// exp(k) exp(p): a member of the identity component.
GroupElement random_so_plus(const Signature& sig, std::mt19937_64& rng, double scale = 0.7);

// Block-diagonal exp(k): a member of SO(p) x SO(q).
GroupElement random_max_compact(const Signature& sig, std::mt19937_64& rng);

// Random point of X+(p,q) built through the chart, so it is on the
// surface to rounding accuracy.
QuasiSpherePoint random_plus_point(const Signature& sig, std::mt19937_64& rng,
                                   double base_scale = 1.0);

}  // namespace sopq
