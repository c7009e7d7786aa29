#pragma once

#include <Eigen/Dense>

#include "sopq/signature.hpp"

namespace sopq {

// Default tolerance for membership and orthogonality checks on
// unit-scale matrices.
inline constexpr double kDefaultTol = 1e-9;

// The diagonal Gram matrix I_{p,q} = diag(+1 x p, -1 x q).
Eigen::MatrixXd form_matrix(const Signature& sig);

// The indefinite inner product  <x,y> = sum_{i<=p} x_i y_i - sum_{j>p} x_j y_j.
double inner(const Signature& sig, const Eigen::VectorXd& x, const Eigen::VectorXd& y);

struct MembershipReport {
    bool in_O = false;
    bool in_SO = false;
    double form_residual = 0.0;  // max-norm of M I M^T - I
    double det_residual = 0.0;   // det(M) - 1
};

// Checks M I_{p,q} M^T = I_{p,q} (O membership) and additionally
// det M = 1 (SO membership), both within tol.
MembershipReport is_member(const Signature& sig, const Eigen::MatrixXd& m,
                           double tol = kDefaultTol);

// A validated element of O(p,q) with det = 1, i.e. SO(p,q).
class GroupElement {
  public:
    static GroupElement make(const Signature& sig, Eigen::MatrixXd entries,
                             double tol = kDefaultTol);
    static GroupElement identity(const Signature& sig);

    const Signature& sig() const { return sig_; }
    const Eigen::MatrixXd& entries() const { return entries_; }
    double membership_residual() const { return membership_residual_; }
    double det_residual() const { return det_residual_; }

    // Blocks of the matrix written as [[B, C], [D, E]] with B of size p x p.
    Eigen::MatrixXd block_b() const;
    Eigen::MatrixXd block_c() const;
    Eigen::MatrixXd block_d() const;
    Eigen::MatrixXd block_e() const;

    Eigen::VectorXd first_column() const;

  private:
    GroupElement(Signature sig, Eigen::MatrixXd entries, double mres, double dres)
        : sig_(sig), entries_(std::move(entries)),
          membership_residual_(mres), det_residual_(dres) {}

    Signature sig_;
    Eigen::MatrixXd entries_;
    double membership_residual_ = 0.0;
    double det_residual_ = 0.0;
};

// Product of two members. The construction tolerance is widened to
// 3 * max(residuals, kDefaultTol), the numerical closure contract.
GroupElement multiply(const GroupElement& a, const GroupElement& b);
inline GroupElement operator*(const GroupElement& a, const GroupElement& b) {
    return multiply(a, b);
}

// Inverse by the defining identity: A^{-1} = I_{p,q} A^T I_{p,q}.
GroupElement form_inverse(const GroupElement& a);

// Orthochronous test: det of the upper-left p x p block is positive.
// Always true for definite signatures.
bool is_identity_component(const GroupElement& a);

// diag(1, A): embeds SO(p-1, q) into SO(p, q).
GroupElement embed_first(const Signature& target, const GroupElement& a);

// diag(A, 1): embeds SO(p, q-1) into SO(p, q).
GroupElement embed_last(const Signature& target, const GroupElement& a);

struct ColumnReport {
    bool orthogonal_pairs_ok = false;
    int plus_count = 0;   // columns with <c,c> within tol of +1
    int minus_count = 0;  // columns with <c,c> within tol of -1
    double worst_pair_inner = 0.0;
    double worst_magnitude_defect = 0.0;

    bool matches(const Signature& sig) const {
        return orthogonal_pairs_ok && plus_count == sig.p && minus_count == sig.q;
    }
};

// Column-wise characterization of O(p,q) membership: all distinct column
// pairs orthogonal for the form, p columns of magnitude +1 and q of -1.
// The counts are position-insensitive; strict membership additionally
// requires the +1 columns to sit in the first p positions.
ColumnReport column_orthogonality_report(const Signature& sig, const Eigen::MatrixXd& m,
                                         double tol = kDefaultTol);

}  // namespace sopq
