#include "sopq/wedge_cover.hpp"

#include <cmath>

namespace sopq {

namespace {

// Sign of the permutation (i, j, k, l) of {0,1,2,3}, or 0 when the
// indices repeat.
int perm4_sign(int i, int j, int k, int l) {
    const int idx[4] = {i, j, k, l};
    int sign = 1;
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) {
            if (idx[a] == idx[b]) return 0;
            if (idx[a] > idx[b]) sign = -sign;
        }
    return sign;
}

}  // namespace

Mat6d wedge_squared(const Eigen::Matrix4d& g) {
    Mat6d w;
    for (int a = 0; a < 6; ++a) {
        const auto [i, j] = kWedgeBasis[a];
        for (int b = 0; b < 6; ++b) {
            const auto [k, l] = kWedgeBasis[b];
            w(a, b) = g(i, k) * g(j, l) - g(i, l) * g(j, k);
        }
    }
    return w;
}

Mat6i wedge_form() {
    Mat6i f;
    for (int a = 0; a < 6; ++a) {
        const auto [i, j] = kWedgeBasis[a];
        for (int b = 0; b < 6; ++b) {
            const auto [k, l] = kWedgeBasis[b];
            f(a, b) = perm4_sign(i, j, k, l);
        }
    }
    return f;
}

Mat6i wedge_diagonalizing_vectors() {
    Mat6i v = Mat6i::Zero();
    // Squared norms +2:  e1^e2 + e3^e4,  e1^e3 - e2^e4,  e1^e4 + e2^e3.
    v(0, 0) = 1; v(5, 0) = 1;
    v(1, 1) = 1; v(4, 1) = -1;
    v(2, 2) = 1; v(3, 2) = 1;
    // Squared norms -2:  e1^e2 - e3^e4,  e1^e3 + e2^e4,  e1^e4 - e2^e3.
    v(0, 3) = 1; v(5, 3) = -1;
    v(1, 4) = 1; v(4, 4) = 1;
    v(2, 5) = 1; v(3, 5) = -1;
    return v;
}

std::pair<int, int> form_signature() {
    const Mat6i f = wedge_form();
    const Mat6i v = wedge_diagonalizing_vectors();
    const Mat6i gram = v.transpose() * f * v;  // exact integer arithmetic
    int plus = 0, minus = 0;
    for (int i = 0; i < 6; ++i) {
        for (int j = 0; j < 6; ++j)
            if (i != j && gram(i, j) != 0)
                throw InternalConsistencyError(
                    "diagonalizing vectors are not orthogonal for the wedge form");
        if (gram(i, i) == 2)
            ++plus;
        else if (gram(i, i) == -2)
            ++minus;
        else
            throw InternalConsistencyError("diagonalizing vector has squared norm " +
                                           std::to_string(gram(i, i)) + ", expected +-2");
    }
    return {plus, minus};
}

Mat6d wedge_basis_change() {
    return wedge_diagonalizing_vectors().cast<double>() / std::sqrt(2.0);
}

Eigen::Matrix4d random_sl4(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (;;) {
        Eigen::Matrix4d g;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) g(i, j) = gauss(rng);
        const double det = g.determinant();
        if (std::abs(det) < 0.1) continue;
        g /= std::pow(std::abs(det), 0.25);
        if (g.determinant() < 0.0) g.col(0) = -g.col(0);
        return g;
    }
}

CoverReport verify_cover(int samples, std::uint64_t seed, double tol) {
    CoverReport r;
    r.samples = samples;
    r.seed = seed;
    r.tol = tol;

    const Mat6d f = wedge_form().cast<double>();
    const Mat6d p = wedge_basis_change();
    const Signature sig33(3, 3);
    std::mt19937_64 rng(seed);

    auto note_failure = [&](const Eigen::Matrix4d& g) {
        if (!r.counterexample) r.counterexample = g;
    };

    Eigen::Matrix4d prev;
    Mat6d prev_w;
    bool have_prev = false;

    for (int s = 0; s < samples; ++s) {
        const Eigen::Matrix4d g = random_sl4(rng);
        const Mat6d w = wedge_squared(g);

        const double form_res = (w.transpose() * f * w - f).cwiseAbs().maxCoeff();
        r.worst_form_residual = std::max(r.worst_form_residual, form_res);
        if (form_res > tol) {
            ++r.form_failures;
            note_failure(g);
        }

        const double det_res = std::abs(w.determinant() - 1.0);
        r.worst_det_residual = std::max(r.worst_det_residual, det_res);
        if (det_res > tol) {
            ++r.det_failures;
            note_failure(g);
        }

        // In the diagonalizing basis the image must be an orthochronous
        // member of the standard SO(3,3).
        const Eigen::MatrixXd m = p.transpose() * w * p;
        const MembershipReport mem = is_member(sig33, m, tol);
        r.worst_member_residual = std::max(r.worst_member_residual, mem.form_residual);
        if (!mem.in_SO) {
            ++r.member_failures;
            note_failure(g);
        } else if (!is_identity_component(GroupElement::make(sig33, m, tol))) {
            ++r.component_failures;
            note_failure(g);
        }

        // Only g near +-identity may map near the identity.
        const double dist_identity = (w - Mat6d::Identity()).cwiseAbs().maxCoeff();
        if (dist_identity < 1e-3) {
            const double gdist = std::min((g - Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff(),
                                          (g + Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff());
            if (gdist > 1e-2) {
                ++r.kernel_failures;
                note_failure(g);
            }
        }

        if (have_prev) {
            const double mult_res =
                (wedge_squared(prev * g) - prev_w * w).cwiseAbs().maxCoeff();
            r.worst_mult_residual = std::max(r.worst_mult_residual, mult_res);
            if (mult_res > tol) {
                ++r.mult_failures;
                note_failure(g);
            }
        }
        prev = g;
        prev_w = w;
        have_prev = true;
    }

    r.pass = r.form_failures == 0 && r.det_failures == 0 && r.member_failures == 0 &&
             r.component_failures == 0 && r.mult_failures == 0 && r.kernel_failures == 0;
    return r;
}

}  // namespace sopq
