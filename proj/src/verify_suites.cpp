#include "sopq/verify_suites.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "sopq/cartan_polar.hpp"
#include "sopq/sampling.hpp"
#include "sopq/transitivity.hpp"

namespace sopq {

namespace {

std::vector<Signature> suite_signatures(const SuiteConfig& cfg) {
    if (cfg.sig) return {*cfg.sig};
    return {Signature(1, 1), Signature(2, 1), Signature(2, 2), Signature(3, 2)};
}

void finish(SuiteReport& r) {
    r.pass = std::all_of(r.checks.begin(), r.checks.end(),
                         [](const CheckResult& c) { return c.failures == 0; });
}

}  // namespace

SuiteReport run_fibration_suite(const SuiteConfig& cfg) {
    SuiteReport report;
    report.suite = "fibration";

    for (const Signature& sig : suite_signatures(cfg)) {
        std::mt19937_64 rng(cfg.seed);
        CheckResult completion{"completion " + sig.str(), cfg.samples, 0, 0.0, ""};
        CheckResult counts{"column signature bookkeeping " + sig.str(), cfg.samples, 0, 0.0, ""};
        CheckResult fiber{"fiber map round trip " + sig.str(), cfg.samples, 0, 0.0, ""};
        CheckResult stab{"stabilizer preserves group projection " + sig.str(), cfg.samples, 0,
                         0.0, ""};
        CheckResult lemma{"column report matches membership " + sig.str(), cfg.samples, 0, 0.0,
                          ""};

        GramSchmidtOptions gs;
        gs.seed = cfg.seed;
        for (int s = 0; s < cfg.samples; ++s) {
            const QuasiSpherePoint pt = random_plus_point(sig, rng);
            CompletionResult c = complete_to_group(sig, pt, cfg.tol, gs);
            const double res =
                std::max(c.column_residual, c.element.membership_residual());
            completion.worst_residual = std::max(completion.worst_residual, res);
            if (res > cfg.tol) ++completion.failures;

            const ColumnReport col =
                column_orthogonality_report(sig, c.element.entries(), cfg.tol);
            if (!col.matches(sig)) ++counts.failures;
            counts.worst_residual =
                std::max({counts.worst_residual, col.worst_pair_inner,
                          col.worst_magnitude_defect});

            // A random stabilizer element: embed a member of SO(p-1,q).
            if (sig.p >= 1) {
                const Signature sub(sig.p - 1, sig.q);
                const GroupElement f = embed_first(sig, random_so_plus(sub, rng, 0.5));
                const GroupElement moved = fiber_map(sig, pt, f, 1e-6, gs);
                const double col_res =
                    (moved.first_column() - pt.coords()).cwiseAbs().maxCoeff();
                const GroupElement back = multiply(form_inverse(c.element), moved);
                const double round =
                    (back.entries() - f.entries()).cwiseAbs().maxCoeff();
                fiber.worst_residual = std::max({fiber.worst_residual, col_res, round});
                if (col_res > 1e-7 || round > 1e-7) ++fiber.failures;

                // Right translation by a stabilizer element keeps the
                // first-column projection of any group element fixed.
                const GroupElement a = random_so_plus(sig, rng, 0.5);
                const double proj_res = (multiply(a, f).first_column() - a.first_column())
                                            .cwiseAbs()
                                            .maxCoeff();
                stab.worst_residual = std::max(stab.worst_residual, proj_res);
                if (proj_res > 1e-7) ++stab.failures;
            }

            // Column characterization agrees with the defining identity on
            // members and on perturbed non-members.
            const GroupElement g = random_so_plus(sig, rng, 0.5);
            const ColumnReport on_member =
                column_orthogonality_report(sig, g.entries(), cfg.tol);
            if (!on_member.matches(sig)) ++lemma.failures;
            Eigen::MatrixXd broken = g.entries();
            if (sig.n() > 0) {
                broken(0, sig.n() - 1) += 1e-3;
                const bool member_now = is_member(sig, broken, cfg.tol).in_O;
                const bool report_now =
                    column_orthogonality_report(sig, broken, cfg.tol).matches(sig);
                if (member_now != report_now) ++lemma.failures;
            }
        }
        report.checks.push_back(std::move(completion));
        report.checks.push_back(std::move(counts));
        report.checks.push_back(std::move(fiber));
        report.checks.push_back(std::move(stab));
        report.checks.push_back(std::move(lemma));
    }

    // Sphere-fiber rotations preserve the quasi-sphere projection.
    {
        CheckResult rot{"fiber rotations preserve projection", cfg.samples, 0, 0.0, ""};
        const Signature sig = cfg.sig.value_or(Signature(2, 1));
        std::mt19937_64 rng(cfg.seed + 1);
        for (int s = 0; s < cfg.samples; ++s) {
            const QuasiSpherePoint pt = random_plus_point(sig, rng);
            Eigen::MatrixXd m = Eigen::MatrixXd::Identity(sig.n(), sig.n());
            m.topLeftCorner(sig.p, sig.p) = matrix_exp(random_antisymmetric(sig.p, rng));
            const GroupElement rot_el = GroupElement::make(sig, m, 1e-8);
            const double res =
                (project(act(rot_el, pt)) - project(pt)).cwiseAbs().maxCoeff();
            rot.worst_residual = std::max(rot.worst_residual, res);
            if (res > 1e-8) ++rot.failures;
        }
        report.checks.push_back(std::move(rot));
    }

    finish(report);
    return report;
}

SuiteReport run_polar_suite(const SuiteConfig& cfg) {
    SuiteReport report;
    report.suite = "polar";

    std::vector<Signature> sigs =
        cfg.sig ? std::vector<Signature>{*cfg.sig}
                : std::vector<Signature>{Signature(1, 1), Signature(2, 1), Signature(2, 2)};
    for (const Signature& sig : sigs) {
        std::mt19937_64 rng(cfg.seed);
        CheckResult round{"polar round trip " + sig.str(), cfg.samples, 0, 0.0, ""};
        CheckResult compact{"compact factor in SO(p) x SO(q) " + sig.str(), cfg.samples, 0, 0.0,
                            ""};
        CheckResult logp{"log of symmetric factor in p " + sig.str(), cfg.samples, 0, 0.0, ""};
        CheckResult split{"cartan split reconstructs " + sig.str(), cfg.samples, 0, 0.0, ""};

        for (int s = 0; s < cfg.samples; ++s) {
            const GroupElement k = random_max_compact(sig, rng);
            const AlgebraElement x_p = random_p_element(sig, rng, 2.0);
            const Eigen::MatrixXd a = k.entries() * matrix_exp(x_p.entries());
            const GroupElement g = GroupElement::make(sig, a, 1e-7);

            PolarResult pr = polar_decompose(g, 1e-8);
            round.worst_residual = std::max(round.worst_residual, pr.reconstruction_residual);
            if (pr.reconstruction_residual > 1e-8) ++round.failures;

            if (!in_max_compact(sig, pr.compact_factor.entries(), 1e-8)) ++compact.failures;
            const double k_err =
                (pr.compact_factor.entries() - k.entries()).cwiseAbs().maxCoeff();
            compact.worst_residual = std::max(compact.worst_residual, k_err);
            if (k_err > 1e-7) ++compact.failures;

            const Eigen::MatrixXd& lp = pr.log_symmetric.entries();
            const double sym_defect =
                sig.n() == 0 ? 0.0 : (lp - lp.transpose()).cwiseAbs().maxCoeff();
            const double alg = in_algebra(sig, lp, 1.0).residual;
            const double rec_err = (lp - x_p.entries()).cwiseAbs().maxCoeff();
            logp.worst_residual = std::max({logp.worst_residual, sym_defect, alg, rec_err});
            if (sym_defect > 1e-8 || alg > 1e-8 || rec_err > 1e-7) ++logp.failures;

            const AlgebraElement x = random_algebra_element(sig, rng);
            const CartanSplit cs = cartan_split(x);
            const double rec =
                (cs.k_part.entries() + cs.p_part.entries() - x.entries()).cwiseAbs().maxCoeff();
            split.worst_residual = std::max(split.worst_residual, rec);
            if (rec > 0.0) ++split.failures;  // reconstruction is exact
        }
        report.checks.push_back(std::move(round));
        report.checks.push_back(std::move(compact));
        report.checks.push_back(std::move(logp));
        report.checks.push_back(std::move(split));

        BracketReport br = bracket_relation_check(sig, cfg.samples, cfg.seed, 1e-10);
        CheckResult brackets{"bracket eigenspace relations " + sig.str(), br.samples,
                             br.kk_failures + br.kp_failures + br.pp_failures,
                             std::max({br.worst_kk, br.worst_kp, br.worst_pp}), ""};
        // [p,p] can only escape p when k is nontrivial and p has at least
        // two directions; for (1,1) every such bracket is zero.
        if (sig.p >= 1 && sig.q >= 1 && sig.p * sig.q >= 2 && !br.pp_escape_witness) {
            ++brackets.failures;
            brackets.note = "no [p,p] bracket escaped p";
        }
        report.checks.push_back(std::move(brackets));
    }

    finish(report);
    return report;
}

SuiteReport run_homeo_suite(const SuiteConfig& cfg) {
    SuiteReport report;
    report.suite = "homeo";

    std::vector<Signature> sigs =
        cfg.sig ? std::vector<Signature>{*cfg.sig}
                : std::vector<Signature>{Signature(2, 1), Signature(3, 2)};
    for (const Signature& sig : sigs) {
        std::mt19937_64 rng(cfg.seed);
        CheckResult round{"chart round trip " + sig.str(), cfg.samples, 0, 0.0, ""};
        CheckResult surface{"chart image on surface " + sig.str(), cfg.samples, 0, 0.0, ""};
        CheckResult swap{"sheet swap involutive " + sig.str(), cfg.samples, 0, 0.0, ""};

        for (int s = 0; s < cfg.samples; ++s) {
            const Eigen::VectorXd x = random_gaussian_vector(sig.q, rng);
            const Eigen::VectorXd y = random_unit_vector(sig.p, rng);
            const QuasiSpherePoint pt = chart(sig, x, y);
            surface.worst_residual = std::max(surface.worst_residual, pt.residual());
            if (pt.residual() > 1e-12) ++surface.failures;

            const ChartCoords back = unchart(pt);
            const double err = std::max((back.x - x).cwiseAbs().maxCoeff(),
                                        (back.y - y).cwiseAbs().maxCoeff());
            round.worst_residual = std::max(round.worst_residual, err);
            if (err > 1e-12) ++round.failures;

            const QuasiSpherePoint twice = minus_to_plus(minus_to_plus(pt));
            const double inv_err = (twice.coords() - pt.coords()).cwiseAbs().maxCoeff();
            swap.worst_residual = std::max(swap.worst_residual, inv_err);
            if (inv_err > 0.0 || twice.sig() != sig || twice.sign() != 1) ++swap.failures;
        }
        report.checks.push_back(std::move(round));
        report.checks.push_back(std::move(surface));
        report.checks.push_back(std::move(swap));
    }

    finish(report);
    return report;
}

SuiteReport run_abelian_suite(const SuiteConfig& cfg) {
    SuiteReport report;
    report.suite = "abelian";
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<int> dim(1, 5);
    std::uniform_int_distribution<int> entry(-9, 9);

    CheckResult snf{"smith normal form U M V = S, unimodular", cfg.samples, 0, 0.0, ""};
    CheckResult canon{"presentation invariant under row operations", cfg.samples, 0, 0.0, ""};
    for (int s = 0; s < cfg.samples; ++s) {
        const int r = dim(rng), c = dim(rng);
        IntMatrix m(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) m(i, j) = entry(rng);

        SmithResult snf_res = smith_normal_form(m);
        bool ok = snf_res.u * m * snf_res.v == snf_res.s;
        const Int du = int_det(snf_res.u), dv = int_det(snf_res.v);
        ok = ok && (du == 1 || du == -1) && (dv == 1 || dv == -1);
        for (int i = 0; ok && i + 1 < std::min(r, c); ++i)
            if (snf_res.s(i, i) != 0 && snf_res.s(i + 1, i + 1) % snf_res.s(i, i) != 0)
                ok = false;
        if (!ok) ++snf.failures;

        // Shuffled and row-reduced relation matrices present the same group.
        const FgAbelianGroup g = from_presentation(c, m);
        IntMatrix shuffled = m;
        for (int i = r - 1; i > 0; --i) {
            std::uniform_int_distribution<int> pick(0, i);
            shuffled.swap_rows(i, pick(rng));
        }
        if (r >= 2) {
            std::uniform_int_distribution<int> pick(0, r - 1);
            std::uniform_int_distribution<int> factor(-3, 3);
            const int a = pick(rng);
            int b = pick(rng);
            if (a == b) b = (b + 1) % r;
            shuffled.add_row(a, b, factor(rng));
        }
        if (!(from_presentation(c, shuffled) == g)) ++canon.failures;
    }
    report.checks.push_back(std::move(snf));
    report.checks.push_back(std::move(canon));

    CheckResult quotients{"reference quotients of Z x Z/2", 3, 0, 0.0, ""};
    const FgAbelianGroup z_z2 =
        direct_product(FgAbelianGroup::z(), FgAbelianGroup::cyclic(2));
    if (!(quotient_by(z_z2, {{2, 0}}) ==
          direct_product(FgAbelianGroup::cyclic(2), FgAbelianGroup::cyclic(2))))
        ++quotients.failures;
    if (!(quotient_by(z_z2, {{1, 1}}) == FgAbelianGroup::cyclic(2))) ++quotients.failures;
    if (!(quotient_by(z_z2, {{2, 1}}) == FgAbelianGroup::cyclic(4))) ++quotients.failures;
    report.checks.push_back(std::move(quotients));

    CheckResult epi{"epimorphic images among small groups", 0, 0, 0.0, ""};
    const FgAbelianGroup klein =
        direct_product(FgAbelianGroup::cyclic(2), FgAbelianGroup::cyclic(2));
    if (is_epimorphic_image(klein, FgAbelianGroup::cyclic(4))) ++epi.failures;
    if (!is_epimorphic_image(klein, FgAbelianGroup::cyclic(2))) ++epi.failures;
    if (!is_epimorphic_image(FgAbelianGroup::cyclic(4), FgAbelianGroup::cyclic(2)))
        ++epi.failures;
    epi.samples = 3;
    report.checks.push_back(std::move(epi));

    finish(report);
    return report;
}

std::vector<SuiteReport> run_all_suites(const SuiteConfig& cfg) {
    return {run_fibration_suite(cfg), run_polar_suite(cfg), run_homeo_suite(cfg),
            run_abelian_suite(cfg)};
}

Json to_json(const SuiteReport& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json jc{{"name", c.name},
                {"samples", c.samples},
                {"failures", c.failures},
                {"worst_residual", c.worst_residual}};
        if (!c.note.empty()) jc["note"] = c.note;
        checks.push_back(std::move(jc));
    }
    return Json{{"schema", "1"}, {"suite", r.suite}, {"pass", r.pass}, {"checks", checks}};
}

}  // namespace sopq
