#include <doctest.h>

#include <cmath>
#include <random>

#include "sopq/sampling.hpp"
#include "sopq/transitivity.hpp"

using namespace sopq;

TEST_CASE("gram-schmidt on reference inputs") {
    SUBCASE("standard basis is already orthonormal") {
        const Signature sig(2, 1);
        std::vector<Eigen::VectorXd> basis;
        for (int i = 0; i < 3; ++i) basis.push_back(Eigen::VectorXd::Unit(3, i));
        const auto out = indefinite_gram_schmidt(sig, basis);
        REQUIRE(out.size() == 3);
        for (int i = 0; i < 3; ++i) {
            CHECK(out[static_cast<std::size_t>(i)].v == Eigen::VectorXd::Unit(3, i));
            CHECK(out[static_cast<std::size_t>(i)].q_sign == (i < 2 ? 1 : -1));
        }
    }
    SUBCASE("mixed pair in the hyperbolic plane") {
        const Signature sig(1, 1);
        const auto out = indefinite_gram_schmidt(
            sig, {Eigen::Vector2d(2, 1), Eigen::Vector2d(1, 2)});
        REQUIRE(out.size() == 2);
        CHECK(out[0].q_sign + out[1].q_sign == 0);
        for (const auto& u : out)
            CHECK(std::abs(inner(sig, u.v, u.v) - u.q_sign) < 1e-12);
        CHECK(std::abs(inner(sig, out[0].v, out[1].v)) < 1e-12);
    }
    SUBCASE("null pivot raises a degeneracy error naming the stage") {
        const Signature sig(1, 1);
        CHECK_THROWS_AS(indefinite_gram_schmidt(sig, {Eigen::Vector2d(1, 1)}),
                        DegeneracyError);
        try {
            indefinite_gram_schmidt(sig, {Eigen::Vector2d(2, 1), Eigen::Vector2d(4, 2)});
        } catch (const DegeneracyError& e) {
            CHECK(e.stage == 2);
        }
    }
    SUBCASE("random full bases give signature-correct orthonormal sets") {
        const Signature sig(2, 2);
        std::mt19937_64 rng(61);
        int done = 0;
        while (done < 500) {
            std::vector<Eigen::VectorXd> vecs;
            for (int i = 0; i < 4; ++i) vecs.push_back(random_gaussian_vector(4, rng));
            std::vector<QOrthonormalVector> out;
            try {
                out = indefinite_gram_schmidt(sig, vecs);
            } catch (const DegeneracyError&) {
                continue;  // a draw too close to the null cone; redraw
            }
            ++done;
            int plus = 0, minus = 0;
            for (const auto& u : out) (u.q_sign > 0 ? plus : minus)++;
            CHECK(plus == 2);
            CHECK(minus == 2);
            Eigen::MatrixXd m(4, 4);
            int at_plus = 0, at_minus = 2;
            for (const auto& u : out) m.col(u.q_sign > 0 ? at_plus++ : at_minus++) = u.v;
            CHECK(column_orthogonality_report(sig, m, 1e-8).matches(sig));
        }
    }
}

TEST_CASE("completion to a group element") {
    SUBCASE("base point e1") {
        const Signature sig(2, 1);
        const CompletionResult r =
            complete_to_group(sig, on_sphere(sig, 1, Eigen::Vector3d(1, 0, 0)));
        CHECK(r.column_residual == 0.0);
        CHECK(r.element.first_column() == Eigen::Vector3d(1, 0, 0));
    }
    SUBCASE("hyperbolic point") {
        const Signature sig(1, 1);
        const Eigen::Vector2d x(std::cosh(1.0), std::sinh(1.0));
        const CompletionResult r = complete_to_group(sig, on_sphere(sig, 1, x, 1e-12));
        CHECK(r.element.first_column() == x);
        CHECK(is_member(sig, r.element.entries(), 1e-12).in_SO);
    }
    SUBCASE("randomized completion across signatures") {
        std::mt19937_64 rng(71);
        for (const Signature sig :
             {Signature(1, 1), Signature(2, 1), Signature(2, 2), Signature(3, 2)}) {
            int det_fixes = 0;
            for (int i = 0; i < 1000; ++i) {
                const QuasiSpherePoint pt = random_plus_point(sig, rng);
                const CompletionResult r = complete_to_group(sig, pt);
                CHECK(r.column_residual <= 1e-9);
                CHECK(r.element.membership_residual() <= 1e-9);
                CHECK(std::abs(r.element.entries().determinant() - 1.0) < 1e-9);
                const ColumnReport col =
                    column_orthogonality_report(sig, r.element.entries(), 1e-8);
                CHECK(col.matches(sig));
                det_fixes += (r.swaps_applied > 0 || r.negated_column) ? 1 : 0;
            }
            // Orientation comes out both ways over this many samples.
            CHECK(det_fixes > 0);
            CHECK(det_fixes < 1000);
        }
    }
    SUBCASE("adjacent swap is used when a same-magnitude pair exists") {
        std::mt19937_64 rng(73);
        const Signature sig(2, 2);
        bool saw_swap = false;
        for (int i = 0; i < 200 && !saw_swap; ++i) {
            const CompletionResult r = complete_to_group(sig, random_plus_point(sig, rng));
            CHECK_FALSE(r.negated_column);
            saw_swap = saw_swap || r.swaps_applied == 1;
        }
        CHECK(saw_swap);
    }
    SUBCASE("column negation fallback fires only for narrow signatures") {
        std::mt19937_64 rng(79);
        const Signature sig(1, 1);
        bool saw_negation = false;
        for (int i = 0; i < 200; ++i) {
            const CompletionResult r = complete_to_group(sig, random_plus_point(sig, rng));
            CHECK(r.swaps_applied == 0);
            saw_negation = saw_negation || r.negated_column;
        }
        CHECK(saw_negation);
    }
}

TEST_CASE("fiber maps") {
    const Signature sig(2, 1);
    std::mt19937_64 rng(83);
    const QuasiSpherePoint x = random_plus_point(sig, rng);
    const CompletionResult base = complete_to_group(sig, x);

    SUBCASE("identity stabilizer returns the completion itself") {
        const GroupElement mapped = fiber_map(sig, x, GroupElement::identity(sig));
        CHECK((mapped.entries() - base.element.entries()).cwiseAbs().maxCoeff() == 0.0);
    }
    SUBCASE("round trips and first columns") {
        for (int i = 0; i < 200; ++i) {
            const GroupElement f =
                embed_first(sig, random_so_plus(Signature(1, 1), rng, 0.6));
            const GroupElement mapped = fiber_map(sig, x, f, 1e-6);
            CHECK((mapped.first_column() - x.coords()).cwiseAbs().maxCoeff() <= 1e-9);
            const GroupElement back = multiply(form_inverse(base.element), mapped);
            CHECK((back.entries() - f.entries()).cwiseAbs().maxCoeff() <= 1e-9);
        }
    }
    SUBCASE("non-stabilizers are rejected") {
        Eigen::MatrixXd m = Eigen::MatrixXd::Identity(3, 3);
        const double t = 0.4;
        m(0, 0) = std::cosh(t);
        m(0, 2) = std::sinh(t);
        m(2, 0) = std::sinh(t);
        m(2, 2) = std::cosh(t);
        const GroupElement moving = GroupElement::make(sig, m);
        CHECK_THROWS_AS(fiber_map(sig, x, moving), PreconditionError);
    }
}

TEST_CASE("per-stage gram matrix is diagonal with unit entries") {
    const Signature sig(3, 2);
    std::mt19937_64 rng(89);
    for (int i = 0; i < 100; ++i) {
        const CompletionResult r = complete_to_group(sig, random_plus_point(sig, rng));
        const Eigen::MatrixXd a = r.element.entries();
        const Eigen::MatrixXd gram =
            a.transpose() * form_matrix(sig) * a;  // must be I_{p,q} itself
        CHECK((gram - form_matrix(sig)).cwiseAbs().maxCoeff() < 1e-9);
    }
}
