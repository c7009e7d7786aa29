#include <doctest.h>

#include <cmath>
#include <random>

#include "sopq/cartan_polar.hpp"
#include "sopq/sampling.hpp"

using namespace sopq;

TEST_CASE("algebra membership") {
    const Signature s11(1, 1);
    CHECK(in_algebra(s11, Eigen::MatrixXd::Zero(2, 2)).in_algebra);

    Eigen::Matrix2d sym;
    sym << 0, 1, 1, 0;
    CHECK(in_algebra(s11, sym).in_algebra);
    CHECK(in_algebra(s11, sym).residual == 0.0);

    // For a definite signature the condition is plain antisymmetry.
    CHECK_FALSE(in_algebra(Signature(2, 0), sym).in_algebra);

    CHECK_THROWS_AS(AlgebraElement::make(Signature(2, 0), sym), MembershipError);
    CHECK_THROWS_AS(in_algebra(s11, Eigen::MatrixXd::Zero(3, 3)), DimensionError);
}

TEST_CASE("cartan split") {
    const Signature sig(2, 1);
    std::mt19937_64 rng(101);

    SUBCASE("pure parts split trivially") {
        const AlgebraElement k = random_k_element(sig, rng);
        const CartanSplit sk = cartan_split(k);
        CHECK((sk.k_part.entries() - k.entries()).cwiseAbs().maxCoeff() == 0.0);
        CHECK(sk.p_part.entries().cwiseAbs().maxCoeff() == 0.0);

        const AlgebraElement p = random_p_element(sig, rng);
        const CartanSplit sp = cartan_split(p);
        CHECK(sp.k_part.entries().cwiseAbs().maxCoeff() == 0.0);
        CHECK((sp.p_part.entries() - p.entries()).cwiseAbs().maxCoeff() == 0.0);
    }
    SUBCASE("random elements reconstruct exactly and stay in the algebra") {
        for (int i = 0; i < 500; ++i) {
            const AlgebraElement x = random_algebra_element(sig, rng);
            const CartanSplit s = cartan_split(x);
            CHECK((s.k_part.entries() + s.p_part.entries() - x.entries())
                      .cwiseAbs()
                      .maxCoeff() == 0.0);
            CHECK(s.k_part.algebra_residual() <= 1e-12);
            CHECK(s.p_part.algebra_residual() <= 1e-12);
            // theta eigenvalues: k is fixed, p is negated.
            CHECK((s.k_part.entries() + s.k_part.entries().transpose())
                      .cwiseAbs()
                      .maxCoeff() == 0.0);
            CHECK((s.p_part.entries() - s.p_part.entries().transpose())
                      .cwiseAbs()
                      .maxCoeff() <= 1e-15);
        }
    }
}

TEST_CASE("bracket") {
    const Signature sig(2, 1);
    std::mt19937_64 rng(103);
    const AlgebraElement x = random_algebra_element(sig, rng);
    CHECK(bracket(x, x).entries().cwiseAbs().maxCoeff() == 0.0);

    SUBCASE("bracket of symmetric generators is antisymmetric") {
        const Signature s11(1, 1);
        Eigen::Matrix2d gen;
        gen << 0, 1, 1, 0;
        const AlgebraElement a = AlgebraElement::make(s11, gen);
        const AlgebraElement b = AlgebraElement::make(s11, 0.5 * gen);
        const Eigen::MatrixXd br = bracket(a, b).entries();
        CHECK((br + br.transpose()).cwiseAbs().maxCoeff() == 0.0);

        const AlgebraElement p1 = random_p_element(sig, rng);
        const AlgebraElement p2 = random_p_element(sig, rng);
        const Eigen::MatrixXd br2 = bracket(p1, p2).entries();
        CHECK((br2 + br2.transpose()).cwiseAbs().maxCoeff() <= 1e-14);
    }
    SUBCASE("eigenspace inclusions at 1e-10 with an escape witness") {
        for (const Signature s : {Signature(2, 1), Signature(2, 2)}) {
            const BracketReport r = bracket_relation_check(s, 500, 2026, 1e-10);
            CHECK(r.pass(1e-10));
            CHECK(r.pp_escape_witness);
            CHECK(r.witness_norm > 1e-3);
        }
    }
    CHECK_THROWS_AS(bracket(x, random_algebra_element(Signature(1, 1), rng)),
                    SignatureMismatchError);
}

TEST_CASE("k block isomorphism") {
    const Signature sig(2, 1);
    CHECK(k_block_iso(AlgebraElement::make(sig, Eigen::MatrixXd::Zero(3, 3))).so_p ==
          Eigen::MatrixXd::Zero(2, 2));

    Eigen::MatrixXd rot = Eigen::MatrixXd::Zero(3, 3);
    rot(0, 1) = 1.0;
    rot(1, 0) = -1.0;
    const KBlocks kb = k_block_iso(AlgebraElement::make(sig, rot));
    CHECK(kb.so_p == rot.topLeftCorner(2, 2));
    CHECK(kb.so_q == Eigen::MatrixXd::Zero(1, 1));

    SUBCASE("round trip") {
        std::mt19937_64 rng(107);
        for (int i = 0; i < 300; ++i) {
            const AlgebraElement k = random_k_element(Signature(3, 2), rng);
            const KBlocks blocks = k_block_iso(k);
            const AlgebraElement back = assemble_k(Signature(3, 2), blocks.so_p, blocks.so_q);
            CHECK((back.entries() - k.entries()).cwiseAbs().maxCoeff() == 0.0);
        }
    }
    SUBCASE("p-part elements are rejected") {
        std::mt19937_64 rng(109);
        const AlgebraElement p = random_p_element(Signature(2, 1), rng);
        CHECK_THROWS_AS(k_block_iso(p), PreconditionError);
    }
}

TEST_CASE("matrix exponential and spd logarithm") {
    CHECK(matrix_exp(Eigen::MatrixXd::Zero(3, 3)) == Eigen::MatrixXd::Identity(3, 3));

    SUBCASE("hyperbolic rotation") {
        for (double t : {0.3, 1.0, 2.5, -1.7}) {
            Eigen::Matrix2d gen;
            gen << 0, t, t, 0;
            const Eigen::MatrixXd e = matrix_exp(gen);
            CHECK(e(0, 0) == doctest::Approx(std::cosh(t)).epsilon(1e-13));
            CHECK(e(0, 1) == doctest::Approx(std::sinh(t)).epsilon(1e-13));
            CHECK(e(1, 0) == doctest::Approx(std::sinh(t)).epsilon(1e-13));
        }
    }
    SUBCASE("exp/log round trip on random spd matrices") {
        std::mt19937_64 rng(113);
        std::normal_distribution<double> gauss(0.0, 1.0);
        for (int i = 0; i < 200; ++i) {
            Eigen::MatrixXd m(4, 4);
            for (int r = 0; r < 4; ++r)
                for (int c = 0; c < 4; ++c) m(r, c) = gauss(rng);
            const Eigen::MatrixXd spd =
                m.transpose() * m + 0.05 * Eigen::MatrixXd::Identity(4, 4);
            const Eigen::MatrixXd back = matrix_exp(matrix_log_spd(spd));
            CHECK((back - spd).cwiseAbs().maxCoeff() <= 1e-9 * spd.cwiseAbs().maxCoeff());
        }
    }
    SUBCASE("nonpositive spectrum is reported") {
        Eigen::Matrix2d indef;
        indef << 1, 0, 0, -2;
        CHECK_THROWS_AS(matrix_log_spd(indef), SpectralError);
        try {
            matrix_log_spd(indef);
        } catch (const SpectralError& e) {
            CHECK(e.eigenvalue == doctest::Approx(-2.0));
        }
    }
}

TEST_CASE("maximal compact membership") {
    const Signature sig(2, 1);
    CHECK(in_max_compact(sig, Eigen::MatrixXd::Identity(3, 3)));

    Eigen::MatrixXd rot = Eigen::MatrixXd::Identity(3, 3);
    const double th = 0.6;
    rot(0, 0) = std::cos(th);
    rot(0, 1) = -std::sin(th);
    rot(1, 0) = std::sin(th);
    rot(1, 1) = std::cos(th);
    CHECK(in_max_compact(sig, rot));

    Eigen::MatrixXd off = Eigen::MatrixXd::Identity(3, 3);
    off(0, 2) = 0.1;
    CHECK_FALSE(in_max_compact(sig, off));

    // Blocks orthogonal but with determinant -1 each: in the compact
    // group K but not in its identity component.
    Eigen::MatrixXd mirror = Eigen::MatrixXd::Identity(3, 3);
    mirror(0, 0) = -1.0;
    mirror(2, 2) = -1.0;
    CHECK_FALSE(in_max_compact(sig, mirror));
}

TEST_CASE("polar decomposition") {
    std::mt19937_64 rng(127);

    SUBCASE("block-diagonal input is its own compact factor") {
        const Signature sig(2, 2);
        const GroupElement k = random_max_compact(sig, rng);
        const PolarResult r = polar_decompose(k);
        CHECK((r.compact_factor.entries() - k.entries()).cwiseAbs().maxCoeff() <= 1e-12);
        CHECK((r.symmetric_factor - Eigen::MatrixXd::Identity(4, 4)).cwiseAbs().maxCoeff() <=
              1e-12);
    }
    SUBCASE("symmetric boost is its own symmetric factor") {
        const Signature sig(1, 1);
        Eigen::Matrix2d b;
        const double t = 1.2;
        b << std::cosh(t), std::sinh(t), std::sinh(t), std::cosh(t);
        const PolarResult r = polar_decompose(GroupElement::make(sig, b));
        CHECK((r.compact_factor.entries() - Eigen::MatrixXd::Identity(2, 2))
                  .cwiseAbs()
                  .maxCoeff() <= 1e-12);
        CHECK((r.symmetric_factor - b).cwiseAbs().maxCoeff() <= 1e-12);
    }
    SUBCASE("construct-then-decompose recovers both factors") {
        const Signature sig(2, 2);
        for (int i = 0; i < 500; ++i) {
            const GroupElement k = random_max_compact(sig, rng);
            const AlgebraElement p = random_p_element(sig, rng, 2.0);
            const GroupElement a =
                GroupElement::make(sig, k.entries() * matrix_exp(p.entries()), 1e-7);
            const PolarResult r = polar_decompose(a);
            CHECK(r.reconstruction_residual <= 1e-8);
            CHECK((r.compact_factor.entries() - k.entries()).cwiseAbs().maxCoeff() <= 1e-8);
            CHECK((r.log_symmetric.entries() - p.entries()).cwiseAbs().maxCoeff() <= 1e-8);
            CHECK(in_max_compact(sig, r.compact_factor.entries(), 1e-8));
            CHECK(r.log_symmetric.algebra_residual() <= 1e-8);

            // Uniqueness at test scale: decomposing the recomposition
            // reproduces identical factors.
            const GroupElement again = GroupElement::make(
                sig, r.compact_factor.entries() * r.symmetric_factor, 1e-7);
            const PolarResult r2 = polar_decompose(again);
            CHECK((r2.compact_factor.entries() - r.compact_factor.entries())
                      .cwiseAbs()
                      .maxCoeff() <= 1e-8);
            CHECK((r2.symmetric_factor - r.symmetric_factor).cwiseAbs().maxCoeff() <= 1e-8);
        }
    }
    SUBCASE("non-orthochronous input is reported as a component error") {
        const Signature sig(1, 1);
        Eigen::Matrix2d other;
        const double t = 0.7;
        other << -std::cosh(t), std::sinh(t), std::sinh(t), -std::cosh(t);
        const GroupElement g = GroupElement::make(sig, other);
        CHECK_THROWS_AS(polar_decompose(g), ComponentError);
    }
    SUBCASE("exp of a split element lands in the identity component") {
        for (const Signature sig : {Signature(2, 1), Signature(2, 2)}) {
            for (int i = 0; i < 100; ++i) {
                const CartanSplit s = cartan_split(random_algebra_element(sig, rng, 0.6));
                const Eigen::MatrixXd g =
                    matrix_exp(s.k_part.entries()) * matrix_exp(s.p_part.entries());
                const GroupElement el = GroupElement::make(sig, g, 1e-7);
                CHECK(is_identity_component(el));
                const PolarResult r = polar_decompose(
                    GroupElement::make(sig, matrix_exp(s.p_part.entries()), 1e-7));
                CHECK((r.compact_factor.entries() -
                       Eigen::MatrixXd::Identity(sig.n(), sig.n()))
                          .cwiseAbs()
                          .maxCoeff() <= 1e-8);
            }
        }
    }
}

TEST_CASE("algebra dimension by linearized membership") {
    CHECK(so_algebra_dimension(Signature(3, 3)) == 15);
    CHECK(so_algebra_dimension(Signature(2, 1)) == 3);
    CHECK(so_algebra_dimension(Signature(2, 2)) == 6);
    CHECK(so_algebra_dimension(Signature(3, 0)) == 3);
    CHECK(so_algebra_dimension(Signature(0, 0)) == 0);
}
