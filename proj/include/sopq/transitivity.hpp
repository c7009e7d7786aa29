#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "sopq/quasisphere.hpp"

namespace sopq {

// Constructive transitivity: complete any point of X+(p,q) to a matrix in
// SO(p,q) having that point as its first column, via Gram-Schmidt for the
// indefinite form.

struct GramSchmidtOptions {
    // A candidate whose form magnitude after projection falls below this
    // is treated as numerically null and skipped.
    double pivot_threshold = 1e-6;
    // Completion falls back to seeded random candidates; this many draws
    // per stage before a hard degeneracy error.
    int retry_budget = 8;
    std::uint64_t seed = 42;
};

struct QOrthonormalVector {
    Eigen::VectorXd v;
    int q_sign;  // sign of <v,v>, so Q(v) = q_sign within tolerance
};

// Orthogonalizes the given linearly independent vectors against the
// signature form. Pivoting picks, at each stage, the remaining candidate
// with the largest |Q| after projection. Throws DegeneracyError naming
// the stage when every remaining candidate is numerically null.
std::vector<QOrthonormalVector> indefinite_gram_schmidt(
    const Signature& sig, const std::vector<Eigen::VectorXd>& vectors,
    double tol = kDefaultTol, const GramSchmidtOptions& opts = {});

struct CompletionResult {
    GroupElement element;
    double column_residual;  // max-abs of (element * e1 - x)
    int swaps_applied;       // 1 when the adjacent-column determinant fix fired
    bool negated_column;     // fallback fix for signatures with p <= 2 and q <= 1
};

// Lemma-style completion: element is in SO(p,q) and its first column is
// exactly the given point. A determinant of -1 is repaired by swapping two
// adjacent same-magnitude columns away from column 1 when such a pair
// exists, and by negating the last column otherwise. The first column is
// never touched.
CompletionResult complete_to_group(const Signature& sig, const QuasiSpherePoint& x,
                                   double tol = kDefaultTol,
                                   const GramSchmidtOptions& opts = {});

// A_x * F for F in the stabilizer of e1; realizes the bijection between
// the fiber over e1 and the fiber over x. F must fix e1 within tol.
GroupElement fiber_map(const Signature& sig, const QuasiSpherePoint& x,
                       const GroupElement& stabilizer, double tol = kDefaultTol,
                       const GramSchmidtOptions& opts = {});

}  // namespace sopq
