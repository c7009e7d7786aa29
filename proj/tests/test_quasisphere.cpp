#include <doctest.h>

#include <cmath>
#include <random>

#include "sopq/quasisphere.hpp"
#include "sopq/sampling.hpp"

using namespace sopq;

namespace {

// pi_k(S^n) for k <= 2, straight from the sphere table.
HomotopySetOrGroup sphere_pi(int n, int k) {
    if (k == 0) return HomotopySetOrGroup::set(n == 0 ? 2 : 1);
    if (k == 1)
        return HomotopySetOrGroup::of(n == 1 ? FgAbelianGroup::z() : FgAbelianGroup::trivial());
    return HomotopySetOrGroup::of(n == 2 ? FgAbelianGroup::z() : FgAbelianGroup::trivial());
}

}  // namespace

TEST_CASE("surface membership") {
    const Signature s21(2, 1);
    const QuasiSpherePoint e1 = on_sphere(s21, 1, Eigen::Vector3d(1, 0, 0));
    CHECK(e1.residual() == 0.0);

    CHECK_THROWS_AS(on_sphere(s21, 1, Eigen::Vector3d(0, 0, 1)), OffSurfaceError);
    try {
        on_sphere(s21, 1, Eigen::Vector3d(0, 0, 1));
    } catch (const OffSurfaceError& e) {
        CHECK(e.residual == doctest::Approx(2.0));
    }

    // X- of (1,1) carries to X+ of the swapped signature.
    const QuasiSpherePoint minus = on_sphere(Signature(1, 1), -1, Eigen::Vector2d(0, 1));
    const QuasiSpherePoint plus = minus_to_plus(minus);
    CHECK(plus.sig() == Signature(1, 1));
    CHECK(plus.sign() == 1);
    CHECK(plus.coords() == Eigen::Vector2d(1, 0));

    SUBCASE("empty surfaces reject") {
        CHECK_THROWS_AS(on_sphere(Signature(0, 2), 1, Eigen::Vector2d(1, 0)),
                        EmptySurfaceError);
        CHECK_THROWS_AS(on_sphere(Signature(2, 0), -1, Eigen::Vector2d(1, 0)),
                        EmptySurfaceError);
    }
}

TEST_CASE("projection and fiber radius") {
    const Signature s21(2, 1);
    CHECK(project(on_sphere(s21, 1, Eigen::Vector3d(1, 0, 0))) == Eigen::VectorXd::Zero(1));

    const double theta = 0.37;
    const Eigen::Vector3d x(std::sqrt(2.0) * std::cos(theta), std::sqrt(2.0) * std::sin(theta),
                            1.0);
    const QuasiSpherePoint pt = on_sphere(s21, 1, x, 1e-12);
    CHECK(project(pt)(0) == 1.0);
    CHECK(pt.coords().head(2).squaredNorm() == doctest::Approx(2.0).epsilon(1e-14));

    const Signature s12(1, 2);
    const double a = 0.8, b = -1.1;
    const Eigen::Vector3d y(std::sqrt(1 + a * a + b * b), a, b);
    CHECK(project(on_sphere(s12, 1, y, 1e-12)) == Eigen::Vector2d(a, b));

    CHECK(fiber_radius(Eigen::VectorXd::Zero(3)) == 1.0);
    CHECK(fiber_radius(Eigen::Vector2d(3, 4)) == doctest::Approx(std::sqrt(26.0)));
    Eigen::VectorXd one(1);
    one << 1.0;
    CHECK(fiber_radius(one) == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("chart and unchart") {
    const Signature s21(2, 1);

    const Eigen::Vector2d y(0.6, 0.8);
    const QuasiSpherePoint base = chart(s21, Eigen::VectorXd::Zero(1), y);
    CHECK(base.coords().head(2) == y);
    CHECK(base.coords()(2) == 0.0);

    const double t = 1.7;
    Eigen::VectorXd xs(1), ys(1);
    xs << std::sinh(t);
    ys << 1.0;
    const QuasiSpherePoint hyper = chart(Signature(1, 1), xs, ys);
    CHECK(hyper.coords()(0) == doctest::Approx(std::cosh(t)).epsilon(1e-15));
    CHECK(hyper.coords()(1) == std::sinh(t));

    CHECK_THROWS_AS(chart(Signature(0, 1), Eigen::VectorXd::Zero(1), Eigen::VectorXd(0)),
                    PreconditionError);
    CHECK_THROWS_AS(chart(s21, Eigen::VectorXd::Zero(1), Eigen::Vector2d(1, 1)),
                    PreconditionError);

    SUBCASE("round trip at 1e-12 over 1000 draws") {
        std::mt19937_64 rng(99);
        for (const Signature sig : {Signature(2, 1), Signature(3, 2)}) {
            for (int i = 0; i < 1000; ++i) {
                const Eigen::VectorXd x = random_gaussian_vector(sig.q, rng);
                const Eigen::VectorXd yv = random_unit_vector(sig.p, rng);
                const QuasiSpherePoint pt = chart(sig, x, yv);
                CHECK(pt.residual() <= 1e-12);
                const ChartCoords back = unchart(pt);
                CHECK((back.x - x).cwiseAbs().maxCoeff() <= 1e-12);
                CHECK((back.y - yv).cwiseAbs().maxCoeff() <= 1e-12);
                CHECK(std::abs(back.y.norm() - 1.0) <= 1e-12);
            }
        }
    }
}

TEST_CASE("group action on the quasi-sphere") {
    const Signature s11(1, 1);
    Eigen::Matrix2d b;
    const double t = 0.8;
    b << std::cosh(t), std::sinh(t), std::sinh(t), std::cosh(t);
    const GroupElement boost = GroupElement::make(s11, b);
    const QuasiSpherePoint e1 = on_sphere(s11, 1, Eigen::Vector2d(1, 0));

    CHECK(act(GroupElement::identity(s11), e1).coords() == e1.coords());
    const QuasiSpherePoint moved = act(boost, e1);
    CHECK(moved.coords()(0) == std::cosh(t));
    CHECK(moved.coords()(1) == std::sinh(t));

    CHECK_THROWS_AS(act(GroupElement::identity(Signature(2, 1)), e1),
                    SignatureMismatchError);

    SUBCASE("action is compatible with multiplication") {
        std::mt19937_64 rng(41);
        const Signature sig(2, 2);
        for (int i = 0; i < 300; ++i) {
            const GroupElement a = random_so_plus(sig, rng, 0.5);
            const GroupElement c = random_so_plus(sig, rng, 0.5);
            const QuasiSpherePoint pt = random_plus_point(sig, rng);
            const Eigen::VectorXd lhs = act(multiply(a, c), pt).coords();
            const Eigen::VectorXd rhs = act(a, act(c, pt)).coords();
            CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-9);
        }
    }
}

TEST_CASE("sheet swap is involutive") {
    std::mt19937_64 rng(55);
    const Signature sig(2, 3);
    for (int i = 0; i < 200; ++i) {
        const QuasiSpherePoint pt = random_plus_point(sig, rng);
        const QuasiSpherePoint once = minus_to_plus(pt);
        CHECK(once.sig() == sig.swapped());
        CHECK(once.sign() == -1);
        const QuasiSpherePoint twice = minus_to_plus(once);
        CHECK(twice.coords() == pt.coords());
        CHECK(twice.sign() == 1);
    }
}

TEST_CASE("low-degree homotopy of X+") {
    CHECK(pi_k(Signature(2, 5), 1) == HomotopySetOrGroup::of(FgAbelianGroup::z()));
    CHECK(pi_k(Signature(3, 1), 2) == HomotopySetOrGroup::of(FgAbelianGroup::z()));
    CHECK(pi_k(Signature(1, 4), 0) == HomotopySetOrGroup::set(2));

    CHECK_THROWS_AS(pi_k(Signature(0, 3), 1), EmptySurfaceError);
    CHECK_THROWS_AS(pi_k(Signature(2, 1), 3), OutOfScopeError);

    SUBCASE("matches the sphere factor for 1 <= p <= 6, 0 <= q <= 6") {
        for (int p = 1; p <= 6; ++p)
            for (int q = 0; q <= 6; ++q)
                for (int k = 0; k <= 2; ++k) {
                    CAPTURE(p);
                    CAPTURE(q);
                    CAPTURE(k);
                    CHECK(pi_k(Signature(p, q), k) == sphere_pi(p - 1, k));
                }
    }
    SUBCASE("pi_0 is reported as a cardinality, never a group") {
        for (int p = 1; p <= 6; ++p)
            CHECK(pi_k(Signature(p, 2), 0).kind ==
                  HomotopySetOrGroup::Kind::set_cardinality);
    }
}
