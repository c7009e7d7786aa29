#include "sopq/indefinite_group.hpp"

#include <algorithm>
#include <cmath>

namespace sopq {

Eigen::MatrixXd form_matrix(const Signature& sig) {
    Eigen::MatrixXd f = Eigen::MatrixXd::Zero(sig.n(), sig.n());
    for (int i = 0; i < sig.p; ++i) f(i, i) = 1.0;
    for (int i = sig.p; i < sig.n(); ++i) f(i, i) = -1.0;
    return f;
}

double inner(const Signature& sig, const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
    if (x.size() != sig.n() || y.size() != sig.n())
        throw DimensionError("inner: vectors must have length " + std::to_string(sig.n()));
    double s = 0.0;
    for (int i = 0; i < sig.p; ++i) s += x(i) * y(i);
    for (int i = sig.p; i < sig.n(); ++i) s -= x(i) * y(i);
    return s;
}

MembershipReport is_member(const Signature& sig, const Eigen::MatrixXd& m, double tol) {
    if (m.rows() != m.cols() || m.rows() != sig.n())
        throw DimensionError("is_member: expected a " + std::to_string(sig.n()) + "x" +
                             std::to_string(sig.n()) + " matrix");
    MembershipReport r;
    const Eigen::MatrixXd f = form_matrix(sig);
    const Eigen::MatrixXd defect = m * f * m.transpose() - f;
    r.form_residual = sig.n() == 0 ? 0.0 : defect.cwiseAbs().maxCoeff();
    r.det_residual = m.determinant() - 1.0;
    r.in_O = r.form_residual <= tol;
    r.in_SO = r.in_O && std::abs(r.det_residual) <= tol;
    return r;
}

GroupElement GroupElement::make(const Signature& sig, Eigen::MatrixXd entries, double tol) {
    MembershipReport r = is_member(sig, entries, tol);
    if (!r.in_SO)
        throw MembershipError("matrix is not in SO" + sig.str() + " at tolerance " +
                                  std::to_string(tol) + " (form residual " +
                                  std::to_string(r.form_residual) + ", det residual " +
                                  std::to_string(r.det_residual) + ")",
                              r.form_residual, r.det_residual);
    return GroupElement(sig, std::move(entries), r.form_residual, r.det_residual);
}

GroupElement GroupElement::identity(const Signature& sig) {
    return GroupElement(sig, Eigen::MatrixXd::Identity(sig.n(), sig.n()), 0.0, 0.0);
}

Eigen::MatrixXd GroupElement::block_b() const { return entries_.topLeftCorner(sig_.p, sig_.p); }
Eigen::MatrixXd GroupElement::block_c() const { return entries_.topRightCorner(sig_.p, sig_.q); }
Eigen::MatrixXd GroupElement::block_d() const { return entries_.bottomLeftCorner(sig_.q, sig_.p); }
Eigen::MatrixXd GroupElement::block_e() const { return entries_.bottomRightCorner(sig_.q, sig_.q); }

Eigen::VectorXd GroupElement::first_column() const {
    if (sig_.n() == 0) throw DimensionError("first_column of the 0x0 element");
    return entries_.col(0);
}

GroupElement multiply(const GroupElement& a, const GroupElement& b) {
    if (a.sig() != b.sig())
        throw SignatureMismatchError("cannot multiply elements of signatures " + a.sig().str() +
                                     " and " + b.sig().str());
    const double tol = 3.0 * std::max({a.membership_residual(), b.membership_residual(),
                                       kDefaultTol});
    return GroupElement::make(a.sig(), a.entries() * b.entries(), tol);
}

GroupElement form_inverse(const GroupElement& a) {
    const Eigen::MatrixXd f = form_matrix(a.sig());
    const double tol = 3.0 * std::max(a.membership_residual(), kDefaultTol);
    return GroupElement::make(a.sig(), f * a.entries().transpose() * f, tol);
}

bool is_identity_component(const GroupElement& a) {
    return a.block_b().determinant() > 0.0;
}

GroupElement embed_first(const Signature& target, const GroupElement& a) {
    if (target.p < 1) throw DimensionError("embed_first needs p >= 1 in the target signature");
    if (a.sig() != Signature(target.p - 1, target.q))
        throw SignatureMismatchError("embed_first: argument must have signature (" +
                                     std::to_string(target.p - 1) + "," +
                                     std::to_string(target.q) + ")");
    const int n = target.n();
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    m(0, 0) = 1.0;
    m.bottomRightCorner(n - 1, n - 1) = a.entries();
    return GroupElement::make(target, std::move(m),
                              std::max(a.membership_residual(), kDefaultTol));
}

GroupElement embed_last(const Signature& target, const GroupElement& a) {
    if (target.q < 1) throw DimensionError("embed_last needs q >= 1 in the target signature");
    if (a.sig() != Signature(target.p, target.q - 1))
        throw SignatureMismatchError("embed_last: argument must have signature (" +
                                     std::to_string(target.p) + "," +
                                     std::to_string(target.q - 1) + ")");
    const int n = target.n();
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    m.topLeftCorner(n - 1, n - 1) = a.entries();
    m(n - 1, n - 1) = 1.0;
    return GroupElement::make(target, std::move(m),
                              std::max(a.membership_residual(), kDefaultTol));
}

ColumnReport column_orthogonality_report(const Signature& sig, const Eigen::MatrixXd& m,
                                         double tol) {
    if (m.rows() != m.cols() || m.rows() != sig.n())
        throw DimensionError("column_orthogonality_report: wrong matrix size");
    ColumnReport r;
    r.orthogonal_pairs_ok = true;
    const int n = sig.n();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double v = inner(sig, m.col(i), m.col(j));
            r.worst_pair_inner = std::max(r.worst_pair_inner, std::abs(v));
            if (std::abs(v) > tol) r.orthogonal_pairs_ok = false;
        }
        const double mag = inner(sig, m.col(i), m.col(i));
        const double defect = std::min(std::abs(mag - 1.0), std::abs(mag + 1.0));
        r.worst_magnitude_defect = std::max(r.worst_magnitude_defect, defect);
        if (std::abs(mag - 1.0) <= tol)
            ++r.plus_count;
        else if (std::abs(mag + 1.0) <= tol)
            ++r.minus_count;
    }
    return r;
}

}  // namespace sopq
