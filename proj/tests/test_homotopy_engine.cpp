#include <doctest.h>

#include "sopq/homotopy_engine.hpp"

using namespace sopq;

namespace {

FgAbelianGroup z() { return FgAbelianGroup::z(); }
FgAbelianGroup zn(long long n) { return FgAbelianGroup::cyclic(n); }
FgAbelianGroup klein() { return direct_product(zn(2), zn(2)); }

}  // namespace

TEST_CASE("pi1 of the definite groups") {
    CHECK(pi1_so(0) == FgAbelianGroup::trivial());
    CHECK(pi1_so(1) == FgAbelianGroup::trivial());
    CHECK(pi1_so(2) == z());
    CHECK(pi1_so(3) == zn(2));
    CHECK(pi1_so(5) == zn(2));
    CHECK_THROWS_AS(pi1_so(-1), DimensionError);
}

TEST_CASE("component counts") {
    CHECK(pi0_so(3, 1) == 2);
    CHECK(pi0_so(4, 0) == 1);
    CHECK(pi0_so(0, 0) == 1);
    CHECK(pi0_so(0, 5) == 1);
}

TEST_CASE("sequence inference rules") {
    SUBCASE("R1") {
        const SesConclusion c =
            ses_conclude({FgAbelianGroup::trivial(), {}, FgAbelianGroup::trivial(), ""});
        CHECK(c.rule == "R1");
        CHECK(c.middle == FgAbelianGroup::trivial());
    }
    SUBCASE("R2, trivial quotient") {
        const SesConclusion c = ses_conclude({zn(2), {}, FgAbelianGroup::trivial(), ""});
        CHECK(c.rule == "R2");
        CHECK(c.middle == zn(2));
    }
    SUBCASE("R2, trivial subgroup") {
        const SesConclusion c = ses_conclude({FgAbelianGroup::trivial(), {}, zn(2), ""});
        CHECK(c.rule == "R2");
        CHECK(c.middle == zn(2));
    }
    SUBCASE("R3, free quotient splits") {
        const SesConclusion c = ses_conclude({zn(2), {}, z(), ""});
        CHECK(c.rule == "R3");
        CHECK(c.middle == direct_product(z(), zn(2)));
        const SesConclusion c2 =
            ses_conclude({z(), {}, direct_product(z(), z()), ""});
        CHECK(c2.middle.rank() == 3);
    }
    SUBCASE("torsion quotients are refused") {
        CHECK_THROWS_AS(ses_conclude({z(), {}, zn(2), ""}), UnsupportedSequenceError);
    }
}

TEST_CASE("derived fundamental groups match the closed form") {
    DerivationEngine engine;

    CHECK(engine.pi1_so_plus(3, 1).group == zn(2));
    CHECK(engine.pi1_so_plus(2, 2).group == direct_product(z(), z()));
    CHECK(engine.pi1_so_plus(0, 0).group == FgAbelianGroup::trivial());
    CHECK(engine.pi1_so_plus(3, 3).group == klein());
    CHECK(engine.pi1_so_plus(1, 1).group == FgAbelianGroup::trivial());
    CHECK(engine.pi1_so_plus(2, 0).group == z());
    CHECK(engine.pi1_so_plus(2, 1).group == z());

    SUBCASE("grid up to 8 with symmetry and stabilization") {
        for (int p = 0; p <= 8; ++p)
            for (int q = 0; q <= 8; ++q) {
                CAPTURE(p);
                CAPTURE(q);
                const FgAbelianGroup derived = engine.pi1_so_plus(p, q).group;
                CHECK(derived == direct_product(pi1_so(p), pi1_so(q)));
                CHECK(derived == engine.pi1_so_plus(q, p).group);
                if (p >= 3 && q >= 3) CHECK(derived == klein());
            }
    }
}

TEST_CASE("derivation traces replay") {
    DerivationEngine engine;
    for (auto [p, q] : {std::pair{3, 1}, {2, 2}, {3, 3}, {6, 4}, {0, 2}, {1, 5}}) {
        const Derivation d = engine.pi1_so_plus(p, q);
        CAPTURE(p);
        CAPTURE(q);
        CHECK(replay_trace(d.trace));
        CHECK(!d.trace.empty());
        // Inference steps carry their inputs for the replay.
        for (const auto& st : d.trace)
            if (st.rule == "R1" || st.rule == "R2" || st.rule == "R3") {
                CHECK(st.left.has_value());
                CHECK(st.right.has_value());
                CHECK(st.result.has_value());
            }
    }
    SUBCASE("tampered traces fail to replay") {
        Derivation d = engine.pi1_so_plus(4, 1);
        for (auto& st : d.trace)
            if (st.rule == "R2" && st.result) st.result = zn(4);
        CHECK_FALSE(replay_trace(d.trace));
    }
}

TEST_CASE("the (3,3) case analysis") {
    DerivationEngine engine;
    const So33Analysis a = engine.so33_case_analysis();

    CHECK(a.middle == direct_product(z(), zn(2)));
    REQUIRE(a.candidate_quotients.size() == 3);
    CHECK(a.candidate_quotients[0] == klein());
    CHECK(a.candidate_quotients[1] == zn(2));
    CHECK(a.candidate_quotients[2] == zn(4));
    CHECK(a.group == klein());
    CHECK(a.survivors.size() == 1);

    SUBCASE("the order constraint alone leaves exactly two candidates") {
        int order_four = 0;
        for (const auto& g : a.candidate_quotients)
            if (g.order() && *g.order() == 4) ++order_four;
        CHECK(order_four == 2);
    }
    SUBCASE("fault injection: dropping either constraint breaks uniqueness") {
        CHECK_THROWS_AS(engine.so33_case_analysis({false, true}), InternalConsistencyError);
        CHECK_THROWS_AS(engine.so33_case_analysis({true, false}), InternalConsistencyError);
        CHECK_THROWS_AS(engine.so33_case_analysis({false, false}), InternalConsistencyError);
    }
}

TEST_CASE("the engine consumes the quasi-sphere table") {
    // A corrupted provider must change the outcome; this guards against
    // hardcoded conclusions.
    DerivationEngine corrupted([](const Signature& sig, int k) {
        if (k == 1) return HomotopySetOrGroup::of(FgAbelianGroup::z());
        return pi_k(sig, k);
    });
    DerivationEngine honest;
    const FgAbelianGroup good = honest.pi1_so_plus(4, 1).group;
    const FgAbelianGroup bad = corrupted.pi1_so_plus(4, 1).group;
    CHECK(good == zn(2));
    CHECK_FALSE(good == bad);

    // A provider with nontrivial pi2 invalidates the truncated sequences.
    DerivationEngine broken_pi2([](const Signature& sig, int k) {
        if (k == 2) return HomotopySetOrGroup::of(FgAbelianGroup::z());
        return pi_k(sig, k);
    });
    CHECK_THROWS_AS(broken_pi2.pi1_so_plus(4, 1), UnsupportedSequenceError);
}
