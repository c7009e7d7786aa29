#pragma once

#include <Eigen/Dense>
#include <cstdint>

#include "sopq/indefinite_group.hpp"

namespace sopq {

// The Lie algebra so(p,q) = { X : X^T I_{p,q} + I_{p,q} X = 0 }, its
// Cartan split into antisymmetric and symmetric parts, and the polar
// decomposition of group elements onto SO(p) x SO(q).

class AlgebraElement {
  public:
    static AlgebraElement make(const Signature& sig, Eigen::MatrixXd entries,
                               double tol = kDefaultTol);

    const Signature& sig() const { return sig_; }
    const Eigen::MatrixXd& entries() const { return entries_; }
    double algebra_residual() const { return algebra_residual_; }

  private:
    AlgebraElement(Signature sig, Eigen::MatrixXd entries, double residual)
        : sig_(sig), entries_(std::move(entries)), algebra_residual_(residual) {}

    Signature sig_;
    Eigen::MatrixXd entries_;
    double algebra_residual_ = 0.0;
};

struct AlgebraCheck {
    bool in_algebra = false;
    double residual = 0.0;
};

AlgebraCheck in_algebra(const Signature& sig, const Eigen::MatrixXd& x,
                        double tol = kDefaultTol);

// Eigenspace split of the involution X -> -X^T: the antisymmetric part
// spans the +1 eigenspace, the symmetric part the -1 eigenspace, and
// k_part + p_part reconstructs the input (to the last bit when the
// input's block symmetries are exact).
struct CartanSplit {
    AlgebraElement k_part;
    AlgebraElement p_part;
};

CartanSplit cartan_split(const AlgebraElement& x);

AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y);

// Randomized verification of [k,k] in k, [k,p] in p, [p,p] in k, plus a
// witness that [p,p] escapes p whenever both blocks are nontrivial.
struct BracketReport {
    int samples = 0;
    int kk_failures = 0;
    int kp_failures = 0;
    int pp_failures = 0;
    double worst_kk = 0.0;
    double worst_kp = 0.0;
    double worst_pp = 0.0;
    bool pp_escape_witness = false;  // some [p,p] bracket has a k part of real size
    double witness_norm = 0.0;
    bool pass(double tol) const {
        return kk_failures == 0 && kp_failures == 0 && pp_failures == 0 && worst_kk <= tol &&
               worst_kp <= tol && worst_pp <= tol;
    }
};

BracketReport bracket_relation_check(const Signature& sig, int samples, std::uint64_t seed,
                                     double tol = 1e-10);

// Diagonal blocks of a k-part element, which are elements of so(p) and
// so(q); the off-diagonal blocks must vanish.
struct KBlocks {
    Eigen::MatrixXd so_p;
    Eigen::MatrixXd so_q;
};

KBlocks k_block_iso(const AlgebraElement& k_part, double tol = kDefaultTol);
AlgebraElement assemble_k(const Signature& sig, const Eigen::MatrixXd& a,
                          const Eigen::MatrixXd& d);

// Scaling-and-squaring matrix exponential (series evaluation after
// norm reduction).
Eigen::MatrixXd matrix_exp(const Eigen::MatrixXd& x);

// Logarithm and square root of a symmetric positive-definite matrix via
// eigendecomposition. Throws SpectralError on a nonpositive eigenvalue.
Eigen::MatrixXd matrix_log_spd(const Eigen::MatrixXd& s);
Eigen::MatrixXd sqrt_spd(const Eigen::MatrixXd& s);

// Membership in the maximal compact subgroup SO(p) x SO(q): block
// diagonal with both blocks orthogonal of determinant +1.
bool in_max_compact(const Signature& sig, const Eigen::MatrixXd& a, double tol = kDefaultTol);

struct PolarResult {
    GroupElement compact_factor;        // in SO(p) x SO(q)
    Eigen::MatrixXd symmetric_factor;   // symmetric positive definite
    AlgebraElement log_symmetric;       // in the p part of the algebra
    double reconstruction_residual;     // max-norm of compact * symmetric - A
};

// A = Q exp(P): symmetric factor (A^T A)^{1/2} by eigendecomposition,
// compact factor A (A^T A)^{-1/2}. Requires A in the identity component;
// otherwise the compact factor falls outside SO(p) x SO(q) and a
// ComponentError is raised.
PolarResult polar_decompose(const GroupElement& a, double tol = 1e-8);

// Dimension of so(p,q) computed as the nullity of the linearized
// membership condition X -> X^T I + I X.
int so_algebra_dimension(const Signature& sig);

}  // namespace sopq
