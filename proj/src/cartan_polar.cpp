#include "sopq/cartan_polar.hpp"

#include <cmath>
#include <random>

namespace sopq {

namespace {

double algebra_defect(const Signature& sig, const Eigen::MatrixXd& x) {
    if (sig.n() == 0) return 0.0;
    const Eigen::MatrixXd f = form_matrix(sig);
    return (x.transpose() * f + f * x).cwiseAbs().maxCoeff();
}

}  // namespace

AlgebraElement AlgebraElement::make(const Signature& sig, Eigen::MatrixXd entries, double tol) {
    if (entries.rows() != sig.n() || entries.cols() != sig.n())
        throw DimensionError("algebra element must be " + std::to_string(sig.n()) + "x" +
                             std::to_string(sig.n()));
    const double residual = algebra_defect(sig, entries);
    if (residual > tol)
        throw MembershipError("matrix is not in so" + sig.str() + ": residual " +
                                  std::to_string(residual),
                              residual, 0.0);
    return AlgebraElement(sig, std::move(entries), residual);
}

AlgebraCheck in_algebra(const Signature& sig, const Eigen::MatrixXd& x, double tol) {
    if (x.rows() != x.cols() || x.rows() != sig.n())
        throw DimensionError("in_algebra: wrong matrix size");
    AlgebraCheck c;
    c.residual = algebra_defect(sig, x);
    c.in_algebra = c.residual <= tol;
    return c;
}

CartanSplit cartan_split(const AlgebraElement& x) {
    const Eigen::MatrixXd& m = x.entries();
    const int n = static_cast<int>(m.rows());
    // k antisymmetric by assignment; p defined as the remainder so that
    // k + p gives back the input to the last bit whenever the input's
    // block symmetries are themselves exact.
    Eigen::MatrixXd k = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            k(i, j) = 0.5 * (m(i, j) - m(j, i));
            k(j, i) = -k(i, j);
        }
    Eigen::MatrixXd p = m - k;
    const double tol = std::max(4.0 * x.algebra_residual(), kDefaultTol);
    return CartanSplit{AlgebraElement::make(x.sig(), std::move(k), tol),
                       AlgebraElement::make(x.sig(), std::move(p), tol)};
}

AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y) {
    if (x.sig() != y.sig())
        throw SignatureMismatchError("bracket: signatures " + x.sig().str() + " and " +
                                     y.sig().str());
    Eigen::MatrixXd b = x.entries() * y.entries() - y.entries() * x.entries();
    const double scale =
        std::max(1.0, x.entries().cwiseAbs().maxCoeff() * y.entries().cwiseAbs().maxCoeff());
    const double tol =
        std::max({scale * 8.0 * (x.algebra_residual() + y.algebra_residual()), kDefaultTol});
    return AlgebraElement::make(x.sig(), std::move(b), tol);
}

BracketReport bracket_relation_check(const Signature& sig, int samples, std::uint64_t seed,
                                     double tol) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const int n = sig.n();

    auto random_element = [&]() {
        Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
        for (int i = 0; i < sig.p; ++i)
            for (int j = i + 1; j < sig.p; ++j) {
                m(i, j) = gauss(rng);
                m(j, i) = -m(i, j);
            }
        for (int i = sig.p; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                m(i, j) = gauss(rng);
                m(j, i) = -m(i, j);
            }
        for (int i = 0; i < sig.p; ++i)
            for (int j = sig.p; j < n; ++j) {
                m(i, j) = gauss(rng);
                m(j, i) = m(i, j);
            }
        return AlgebraElement::make(sig, std::move(m), kDefaultTol);
    };

    BracketReport r;
    r.samples = samples;
    auto sym_part_norm = [](const Eigen::MatrixXd& m) {
        return m.size() == 0 ? 0.0
                             : (0.5 * (m + m.transpose())).cwiseAbs().maxCoeff();
    };
    auto antisym_part_norm = [](const Eigen::MatrixXd& m) {
        return m.size() == 0 ? 0.0
                             : (0.5 * (m - m.transpose())).cwiseAbs().maxCoeff();
    };

    for (int s = 0; s < samples; ++s) {
        CartanSplit a = cartan_split(random_element());
        CartanSplit b = cartan_split(random_element());

        // [k,k] must stay antisymmetric, [k,p] symmetric, [p,p] antisymmetric.
        const double kk = sym_part_norm(bracket(a.k_part, b.k_part).entries());
        const double kp = antisym_part_norm(bracket(a.k_part, b.p_part).entries());
        const Eigen::MatrixXd pp = bracket(a.p_part, b.p_part).entries();
        const double pp_defect = sym_part_norm(pp);
        const double pp_k_size = antisym_part_norm(pp);

        r.worst_kk = std::max(r.worst_kk, kk);
        r.worst_kp = std::max(r.worst_kp, kp);
        r.worst_pp = std::max(r.worst_pp, pp_defect);
        if (kk > tol) ++r.kk_failures;
        if (kp > tol) ++r.kp_failures;
        if (pp_defect > tol) ++r.pp_failures;
        if (pp_k_size > 1e-3) {
            r.pp_escape_witness = true;
            r.witness_norm = std::max(r.witness_norm, pp_k_size);
        }
    }
    return r;
}

KBlocks k_block_iso(const AlgebraElement& k_part, double tol) {
    const Signature& sig = k_part.sig();
    const Eigen::MatrixXd& m = k_part.entries();
    const Eigen::MatrixXd off = m.topRightCorner(sig.p, sig.q);
    if (off.size() > 0 && off.cwiseAbs().maxCoeff() > tol)
        throw PreconditionError(
            "k_block_iso: nonzero off-diagonal block; element is not in the k part");
    return KBlocks{m.topLeftCorner(sig.p, sig.p), m.bottomRightCorner(sig.q, sig.q)};
}

AlgebraElement assemble_k(const Signature& sig, const Eigen::MatrixXd& a,
                          const Eigen::MatrixXd& d) {
    if (a.rows() != sig.p || a.cols() != sig.p || d.rows() != sig.q || d.cols() != sig.q)
        throw DimensionError("assemble_k: blocks must be p x p and q x q");
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(sig.n(), sig.n());
    m.topLeftCorner(sig.p, sig.p) = a;
    m.bottomRightCorner(sig.q, sig.q) = d;
    return AlgebraElement::make(sig, std::move(m));
}

Eigen::MatrixXd matrix_exp(const Eigen::MatrixXd& x) {
    if (x.rows() != x.cols()) throw DimensionError("matrix_exp: square matrix required");
    const int n = static_cast<int>(x.rows());
    if (n == 0) return x;

    int scaling = 0;
    double norm = x.cwiseAbs().rowwise().sum().maxCoeff();  // infinity norm
    while (norm > 0.5) {
        norm *= 0.5;
        ++scaling;
    }
    const Eigen::MatrixXd xs = x / std::ldexp(1.0, scaling);

    Eigen::MatrixXd sum = Eigen::MatrixXd::Identity(n, n);
    Eigen::MatrixXd term = Eigen::MatrixXd::Identity(n, n);
    for (int k = 1; k <= 40; ++k) {
        term = (term * xs) / static_cast<double>(k);
        sum += term;
        if (term.cwiseAbs().maxCoeff() < 1e-18) break;
    }
    for (int i = 0; i < scaling; ++i) sum = sum * sum;
    return sum;
}

Eigen::MatrixXd matrix_log_spd(const Eigen::MatrixXd& s) {
    if (s.rows() != s.cols()) throw DimensionError("matrix_log_spd: square matrix required");
    const double scale = s.size() == 0 ? 1.0 : std::max(1.0, s.cwiseAbs().maxCoeff());
    if (s.size() > 0 && (s - s.transpose()).cwiseAbs().maxCoeff() > 1e-9 * scale)
        throw DimensionError("matrix_log_spd: input is not symmetric");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(0.5 * (s + s.transpose()));
    Eigen::VectorXd lam = eig.eigenvalues();
    for (int i = 0; i < lam.size(); ++i) {
        if (lam(i) <= 0.0)
            throw SpectralError("matrix_log_spd: nonpositive eigenvalue " +
                                    std::to_string(lam(i)),
                                lam(i));
        lam(i) = std::log(lam(i));
    }
    return eig.eigenvectors() * lam.asDiagonal() * eig.eigenvectors().transpose();
}

Eigen::MatrixXd sqrt_spd(const Eigen::MatrixXd& s) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(0.5 * (s + s.transpose()));
    Eigen::VectorXd lam = eig.eigenvalues();
    for (int i = 0; i < lam.size(); ++i) {
        if (lam(i) <= 0.0)
            throw SpectralError("sqrt_spd: nonpositive eigenvalue " + std::to_string(lam(i)),
                                lam(i));
        lam(i) = std::sqrt(lam(i));
    }
    return eig.eigenvectors() * lam.asDiagonal() * eig.eigenvectors().transpose();
}

bool in_max_compact(const Signature& sig, const Eigen::MatrixXd& a, double tol) {
    if (a.rows() != a.cols() || a.rows() != sig.n())
        throw DimensionError("in_max_compact: wrong matrix size");
    const auto off_tl = a.topRightCorner(sig.p, sig.q);
    const auto off_bl = a.bottomLeftCorner(sig.q, sig.p);
    if (off_tl.size() > 0 && (off_tl.cwiseAbs().maxCoeff() > tol ||
                              off_bl.cwiseAbs().maxCoeff() > tol))
        return false;
    const Eigen::MatrixXd top = a.topLeftCorner(sig.p, sig.p);
    const Eigen::MatrixXd bot = a.bottomRightCorner(sig.q, sig.q);
    auto orthogonal_det_one = [tol](const Eigen::MatrixXd& b) {
        if (b.size() == 0) return true;
        const double ortho =
            (b.transpose() * b - Eigen::MatrixXd::Identity(b.rows(), b.cols()))
                .cwiseAbs()
                .maxCoeff();
        return ortho <= tol && std::abs(b.determinant() - 1.0) <= tol;
    };
    return orthogonal_det_one(top) && orthogonal_det_one(bot);
}

PolarResult polar_decompose(const GroupElement& a, double tol) {
    const Signature& sig = a.sig();
    const Eigen::MatrixXd& m = a.entries();
    const Eigen::MatrixXd ata = m.transpose() * m;
    const Eigen::MatrixXd gram = 0.5 * (ata + ata.transpose());

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(gram);
    Eigen::VectorXd lam = eig.eigenvalues();
    for (int i = 0; i < lam.size(); ++i)
        if (lam(i) < 1e-14)
            throw SpectralError("polar_decompose: A^T A has a vanishing eigenvalue " +
                                    std::to_string(lam(i)) + "; input is corrupted",
                                lam(i));

    Eigen::VectorXd sqrt_lam = lam.cwiseSqrt();
    Eigen::VectorXd inv_sqrt_lam = sqrt_lam.cwiseInverse();
    Eigen::VectorXd half_log_lam = lam.array().log().matrix() * 0.5;
    const Eigen::MatrixXd& vecs = eig.eigenvectors();

    Eigen::MatrixXd symmetric = vecs * sqrt_lam.asDiagonal() * vecs.transpose();
    Eigen::MatrixXd compact = m * (vecs * inv_sqrt_lam.asDiagonal() * vecs.transpose());
    Eigen::MatrixXd log_sym = vecs * half_log_lam.asDiagonal() * vecs.transpose();

    if (!in_max_compact(sig, compact, tol))
        throw ComponentError(
            "polar_decompose: compact factor is not in SO(p) x SO(q); the input is not in "
            "the identity component");

    GroupElement compact_el = GroupElement::make(sig, compact, tol);
    AlgebraElement log_el = AlgebraElement::make(sig, log_sym, tol);
    const double recon =
        sig.n() == 0 ? 0.0 : (compact * symmetric - m).cwiseAbs().maxCoeff();
    return PolarResult{std::move(compact_el), std::move(symmetric), std::move(log_el), recon};
}

int so_algebra_dimension(const Signature& sig) {
    const int n = sig.n();
    if (n == 0) return 0;
    const Eigen::MatrixXd f = form_matrix(sig);
    // Rows index the constraint matrix entries, columns the entries of X.
    Eigen::MatrixXd op(n * n, n * n);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
            Eigen::MatrixXd unit = Eigen::MatrixXd::Zero(n, n);
            unit(k, l) = 1.0;
            const Eigen::MatrixXd image = unit.transpose() * f + f * unit;
            op.col(k * n + l) = Eigen::Map<const Eigen::VectorXd>(image.data(), n * n);
        }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(op);
    lu.setThreshold(1e-10);
    return static_cast<int>(lu.dimensionOfKernel());
}

}  // namespace sopq
