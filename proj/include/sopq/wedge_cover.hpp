#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>

#include "sopq/indefinite_group.hpp"

namespace sopq {

// The induced action of SL(4,R) on the 6-dimensional wedge square of R^4,
// the invariant symmetric bilinear form on it, and the numerical
// verification that the action is a 2-to-1 homomorphism onto SO+(3,3).

// Fixed ordered basis e_i ^ e_j with i < j (0-indexed pairs).
inline constexpr std::array<std::pair<int, int>, 6> kWedgeBasis = {
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

using Mat6d = Eigen::Matrix<double, 6, 6>;
using Mat6i = Eigen::Matrix<std::int64_t, 6, 6>;

// Matrix of v ^ w -> gv ^ gw in the fixed basis. Functorial in g.
Mat6d wedge_squared(const Eigen::Matrix4d& g);

// Gram matrix of the pairing (a, b) = coefficient of e1^e2^e3^e4 in a ^ b;
// entries are permutation signs, so the matrix is exact.
Mat6i wedge_form();

// The six vectors e1^e2 +- e3^e4, e1^e3 -+ e2^e4, e1^e4 +- e2^e3 ordered
// so the first three have squared norm +2 and the last three -2; integer
// coordinates in the fixed basis (columns).
Mat6i wedge_diagonalizing_vectors();

// Signature of the form computed exactly from the diagonalizing vectors;
// returns (3, 3).
std::pair<int, int> form_signature();

// Columns of the diagonalizing vectors scaled by 1/sqrt(2): an orthogonal
// change of basis P with P^T F P = diag(1,1,1,-1,-1,-1) up to rounding.
Mat6d wedge_basis_change();

// Seeded random determinant-one 4x4 matrix: Gaussian entries, rejection
// below |det| = 0.1, renormalized, and one column negated when det < 0.
Eigen::Matrix4d random_sl4(std::mt19937_64& rng);

struct CoverReport {
    int samples = 0;
    std::uint64_t seed = 0;
    double tol = 0.0;
    int form_failures = 0;
    int det_failures = 0;
    int member_failures = 0;
    int component_failures = 0;
    int mult_failures = 0;
    int kernel_failures = 0;
    double worst_form_residual = 0.0;
    double worst_det_residual = 0.0;
    double worst_member_residual = 0.0;
    double worst_mult_residual = 0.0;
    bool pass = false;
    std::optional<Eigen::Matrix4d> counterexample;
};

// For `samples` random determinant-one matrices g: the image preserves
// the form, has determinant one, lands in the identity component of
// SO(3,3) after the diagonalizing change of basis, is multiplicative on
// consecutive pairs, and is close to the identity only when g is close
// to +-identity.
CoverReport verify_cover(int samples, std::uint64_t seed, double tol = 1e-8);

}  // namespace sopq
