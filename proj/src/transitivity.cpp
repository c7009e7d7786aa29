#include "sopq/transitivity.hpp"

#include <cmath>
#include <random>

namespace sopq {

namespace {

// Remove the Q-components along the accepted directions. Two sweeps; the
// second mops up first-order cancellation error.
Eigen::VectorXd project_out(const Signature& sig, Eigen::VectorXd v,
                            const std::vector<QOrthonormalVector>& accepted) {
    for (int sweep = 0; sweep < 2; ++sweep)
        for (const auto& u : accepted) {
            const double denom = inner(sig, u.v, u.v);
            v -= (inner(sig, u.v, v) / denom) * u.v;
        }
    return v;
}

struct Pivot {
    Eigen::VectorXd w;
    double q_value = 0.0;
    std::size_t source = 0;
};

// Best remaining candidate by |Q| after projection.
bool best_pivot(const Signature& sig, const std::vector<Eigen::VectorXd>& candidates,
                const std::vector<bool>& used, const std::vector<QOrthonormalVector>& accepted,
                Pivot& out) {
    bool found = false;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (used[i]) continue;
        Eigen::VectorXd w = project_out(sig, candidates[i], accepted);
        const double q = inner(sig, w, w);
        if (!found || std::abs(q) > std::abs(out.q_value)) {
            found = true;
            out = Pivot{std::move(w), q, i};
        }
    }
    return found;
}

QOrthonormalVector normalize(const Pivot& piv) {
    const double mag = std::sqrt(std::abs(piv.q_value));
    return QOrthonormalVector{piv.w / mag, piv.q_value > 0.0 ? 1 : -1};
}

}  // namespace

std::vector<QOrthonormalVector> indefinite_gram_schmidt(
    const Signature& sig, const std::vector<Eigen::VectorXd>& vectors, double tol,
    const GramSchmidtOptions& opts) {
    for (const auto& v : vectors)
        if (v.size() != sig.n())
            throw DimensionError("indefinite_gram_schmidt: vectors must have length " +
                                 std::to_string(sig.n()));
    std::vector<QOrthonormalVector> accepted;
    std::vector<bool> used(vectors.size(), false);
    while (accepted.size() < vectors.size()) {
        Pivot piv;
        if (!best_pivot(sig, vectors, used, accepted, piv) ||
            std::abs(piv.q_value) < opts.pivot_threshold)
            throw DegeneracyError(
                "no candidate of nonzero form magnitude at stage " +
                    std::to_string(accepted.size() + 1) +
                    "; the restricted form is degenerate or the vectors are dependent",
                static_cast<int>(accepted.size() + 1));
        used[piv.source] = true;
        accepted.push_back(normalize(piv));
    }
    for (std::size_t i = 0; i < accepted.size(); ++i)
        for (std::size_t j = i + 1; j < accepted.size(); ++j)
            if (std::abs(inner(sig, accepted[i].v, accepted[j].v)) > tol)
                throw DegeneracyError(
                    "orthogonalization missed the requested tolerance; input is too "
                    "ill-conditioned near the null cone",
                    static_cast<int>(j + 1));
    return accepted;
}

CompletionResult complete_to_group(const Signature& sig, const QuasiSpherePoint& x, double tol,
                                   const GramSchmidtOptions& opts) {
    if (x.sig() != sig)
        throw SignatureMismatchError("complete_to_group: point has signature " + x.sig().str());
    if (x.sign() != 1) throw PreconditionError("complete_to_group expects a point on X+");
    if (sig.p < 1) throw EmptySurfaceError("X+" + sig.str() + " is empty");

    const int n = sig.n();
    std::vector<QOrthonormalVector> accepted;
    // The first column is the point itself, kept unnormalized so the
    // column residual is exactly zero.
    accepted.push_back(QOrthonormalVector{x.coords(), 1});

    std::vector<Eigen::VectorXd> candidates;
    std::vector<bool> used;
    for (int i = 0; i < n; ++i) {
        candidates.emplace_back(Eigen::VectorXd::Unit(n, i));
        used.push_back(false);
    }
    std::mt19937_64 rng(opts.seed);
    std::normal_distribution<double> gauss(0.0, 1.0);

    while (static_cast<int>(accepted.size()) < n) {
        Pivot piv;
        bool ok = best_pivot(sig, candidates, used, accepted, piv) &&
                  std::abs(piv.q_value) >= opts.pivot_threshold;
        int attempt = 0;
        while (!ok && attempt < opts.retry_budget) {
            Eigen::VectorXd r(n);
            for (int i = 0; i < n; ++i) r(i) = gauss(rng);
            candidates.push_back(std::move(r));
            used.push_back(false);
            ++attempt;
            ok = best_pivot(sig, candidates, used, accepted, piv) &&
                 std::abs(piv.q_value) >= opts.pivot_threshold;
        }
        if (!ok)
            throw DegeneracyError("complement completion failed at stage " +
                                      std::to_string(accepted.size() + 1) + " after " +
                                      std::to_string(opts.retry_budget) + " reseeded draws",
                                  static_cast<int>(accepted.size() + 1));
        used[piv.source] = true;
        accepted.push_back(normalize(piv));
    }

    // Membership needs the +1-magnitude columns in positions 1..p and the
    // -1 columns after them; the point goes first.
    Eigen::MatrixXd a(n, n);
    int plus_at = 0, minus_at = sig.p;
    for (const auto& u : accepted) {
        if (u.q_sign > 0) {
            if (plus_at >= sig.p)
                throw DegeneracyError("completion produced more than p positive columns", 0);
            a.col(plus_at++) = u.v;
        } else {
            if (minus_at >= n)
                throw DegeneracyError("completion produced more than q negative columns", 0);
            a.col(minus_at++) = u.v;
        }
    }

    int swaps = 0;
    bool negated = false;
    if (a.determinant() < 0.0) {
        if (sig.p >= 3) {
            a.col(1).swap(a.col(2));
            swaps = 1;
        } else if (sig.q >= 2) {
            a.col(sig.p).swap(a.col(sig.p + 1));
            swaps = 1;
        } else {
            // No same-magnitude adjacent pair exists away from column 1;
            // flipping a column sign preserves orthogonality and magnitudes.
            a.col(n - 1) = -a.col(n - 1);
            negated = true;
        }
    }

    GroupElement element = GroupElement::make(sig, std::move(a), tol);
    const double column_residual =
        (element.first_column() - x.coords()).cwiseAbs().maxCoeff();
    return CompletionResult{std::move(element), column_residual, swaps, negated};
}

GroupElement fiber_map(const Signature& sig, const QuasiSpherePoint& x,
                       const GroupElement& stabilizer, double tol,
                       const GramSchmidtOptions& opts) {
    if (stabilizer.sig() != sig)
        throw SignatureMismatchError("fiber_map: stabilizer has signature " +
                                     stabilizer.sig().str());
    const Eigen::VectorXd defect =
        stabilizer.first_column() - Eigen::VectorXd::Unit(sig.n(), 0);
    if (defect.cwiseAbs().maxCoeff() > tol)
        throw PreconditionError("fiber_map: the element does not stabilize e1");
    CompletionResult base = complete_to_group(sig, x, tol, opts);
    return multiply(base.element, stabilizer);
}

}  // namespace sopq
