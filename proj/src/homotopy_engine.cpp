#include "sopq/homotopy_engine.hpp"

#include <algorithm>
#include <utility>

namespace sopq {

namespace {

// pi_1(SL(4,R)) has order 2; the cover SL(4,R) -> SO+(3,3) has kernel
// {+1, -1}, so the covered group has fundamental group of order 2 * 2.
constexpr long long kPi1Sl4Order = 2;
constexpr long long kCoverKernelOrder = 2;

std::string render_seq(const FgAbelianGroup& left, const FgAbelianGroup& right) {
    return "0 -> " + left.render() + " -> B -> " + right.render() + " -> 0";
}

}  // namespace

FgAbelianGroup pi1_so(int n) {
    if (n < 0) throw DimensionError("pi1_so: n must be nonnegative");
    if (n <= 1) return FgAbelianGroup::trivial();
    if (n == 2) return FgAbelianGroup::z();
    return FgAbelianGroup::cyclic(2);
}

int pi0_so(int p, int q) {
    if (p < 0 || q < 0) throw DimensionError("pi0_so: counts must be nonnegative");
    return (p >= 1 && q >= 1) ? 2 : 1;
}

SesConclusion ses_conclude(const SesInstance& s) {
    if (s.left.is_trivial() && s.right.is_trivial())
        return SesConclusion{FgAbelianGroup::trivial(), "R1"};
    if (s.right.is_trivial()) return SesConclusion{s.left, "R2"};
    if (s.left.is_trivial()) return SesConclusion{s.right, "R2"};
    if (s.right.is_free()) return SesConclusion{direct_product(s.left, s.right), "R3"};
    throw UnsupportedSequenceError(
        "sequence " + render_seq(s.left, s.right) +
        " is outside rules R1-R3; it needs the dedicated case analysis");
}

DerivationEngine::DerivationEngine()
    : pi_k_([](const Signature& sig, int k) { return pi_k(sig, k); }) {}

DerivationEngine::DerivationEngine(PiKFn provider) : pi_k_(std::move(provider)) {}

FgAbelianGroup DerivationEngine::conclude_and_record(SesInstance s, const std::string& target,
                                                     DerivationTrace& trace) const {
    SesConclusion c = ses_conclude(s);
    TraceStep st;
    st.rule = c.rule;
    st.seq = render_seq(s.left, s.right);
    st.from = std::move(s.provenance);
    st.conclusion = target + " = " + c.middle.render();
    st.left = std::move(s.left);
    st.right = std::move(s.right);
    st.result = c.middle;
    trace.push_back(std::move(st));
    return c.middle;
}

FgAbelianGroup DerivationEngine::derive(int p, int q, DerivationTrace& trace) const {
    if (p < 0 || q < 0) throw DimensionError("derive: counts must be nonnegative");

    if (p == 0 || q == 0) {
        const int n = p + q;
        FgAbelianGroup g = pi1_so(n);
        TraceStep st;
        st.rule = "table";
        st.seq = "pi1(SO(" + std::to_string(n) + "))";
        st.from = "definite case: pi1(SO(n)) is 0 for n <= 1, Z for n = 2, Z/2 for n >= 3";
        st.conclusion = "pi1(SO+(" + std::to_string(p) + "," + std::to_string(q) +
                        ")) = " + g.render();
        st.result = g;
        st.table_n = n;
        trace.push_back(std::move(st));
        return g;
    }

    const std::string target = "pi1(SO+(" + std::to_string(p) + "," + std::to_string(q) + "))";

    auto first_fibration = [&](int pp, int qq) {
        // SO+(pp-1,qq) -> SO+(pp,qq) -> X+(pp,qq), truncated in degrees 2..1.
        const Signature base(pp, qq);
        const HomotopySetOrGroup pi2 = pi_k_(base, 2);
        const HomotopySetOrGroup pi1 = pi_k_(base, 1);
        if (pi2.kind != HomotopySetOrGroup::Kind::fg_abelian_group || !pi2.group.is_trivial())
            throw UnsupportedSequenceError(
                "pi2 of the base X+" + base.str() +
                " is nontrivial; the truncated sequence is not exact on the left");
        SesInstance s;
        s.left = derive(pp - 1, qq, trace);
        s.right = pi1.group;
        s.provenance = "fibration SO+(" + std::to_string(pp - 1) + "," + std::to_string(qq) +
                       ") -> SO+(" + std::to_string(pp) + "," + std::to_string(qq) + ") -> X+" +
                       base.str() + "; pi2(X+) = 0 and the fiber group is connected";
        return conclude_and_record(std::move(s), target, trace);
    };

    auto second_fibration = [&](int pp, int qq) {
        // SO+(pp,qq-1) -> SO+(pp,qq) -> X-(pp,qq) = X+(qq,pp).
        const Signature base(qq, pp);
        const HomotopySetOrGroup pi2 = pi_k_(base, 2);
        const HomotopySetOrGroup pi1 = pi_k_(base, 1);
        if (pi2.kind != HomotopySetOrGroup::Kind::fg_abelian_group || !pi2.group.is_trivial())
            throw UnsupportedSequenceError(
                "pi2 of the base X+" + base.str() +
                " is nontrivial; the truncated sequence is not exact on the left");
        SesInstance s;
        s.left = derive(pp, qq - 1, trace);
        s.right = pi1.group;
        s.provenance = "fibration SO+(" + std::to_string(pp) + "," + std::to_string(qq - 1) +
                       ") -> SO+(" + std::to_string(pp) + "," + std::to_string(qq) +
                       ") -> X-" + Signature(pp, qq).str() + " = X+" + base.str() +
                       "; pi2(X+) = 0 and the fiber group is connected";
        return conclude_and_record(std::move(s), target, trace);
    };

    if (p == 1 || p == 2) return first_fibration(p, q);
    if (p == 3) {
        if (q == 3) {
            So33Analysis a = so33_case_analysis();
            trace.insert(trace.end(), a.trace.begin(), a.trace.end());
            return a.group;
        }
        // q in {1,2} directly, q > 3 stabilizes down to (3,3); both through
        // the second fibration, whose base X+(q,3) has trivial pi2 for q != 3.
        return second_fibration(p, q);
    }
    return first_fibration(p, q);
}

Derivation DerivationEngine::pi1_so_plus(int p, int q) const {
    Derivation d;
    int pp = p, qq = q;
    if (pp < qq) {
        std::swap(pp, qq);
        TraceStep st;
        st.rule = "swap";
        st.from = "SO+(p,q) and SO+(q,p) are isomorphic; reorder to p >= q";
        st.conclusion = "derive pi1(SO+(" + std::to_string(pp) + "," + std::to_string(qq) +
                        ")) instead of pi1(SO+(" + std::to_string(p) + "," +
                        std::to_string(q) + "))";
        d.trace.push_back(std::move(st));
    }
    d.group = derive(pp, qq, d.trace);
    return d;
}

So33Analysis DerivationEngine::so33_case_analysis(const So33Options& opts) const {
    So33Analysis out;
    out.middle = derive(3, 2, out.trace);

    // The sequence 0 -> Z -> pi1(SO+(3,2)) -> pi1(SO+(3,3)) -> 0 pins the
    // answer to a quotient of the middle group by an embedded copy of Z.
    if (out.middle.rank() != 1 || out.middle.torsion().size() != 1)
        throw InternalConsistencyError(
            "case analysis needs a middle group of shape Z x Z/k, got " + out.middle.render());

    const std::vector<std::vector<long long>> embeddings = {{2, 0}, {1, 1}, {2, 1}};
    for (const auto& image : embeddings)
        out.candidate_quotients.push_back(quotient_by(out.middle, {image}));

    std::vector<FgAbelianGroup> survivors = out.candidate_quotients;
    const long long target_order = kPi1Sl4Order * kCoverKernelOrder;
    if (opts.apply_order_constraint) {
        std::vector<FgAbelianGroup> kept;
        for (const auto& g : survivors) {
            auto o = g.order();
            if (o && *o == target_order) kept.push_back(g);
        }
        survivors = std::move(kept);
    }
    if (opts.apply_image_constraint) {
        const FgAbelianGroup klein = direct_product(FgAbelianGroup::cyclic(2),
                                                    FgAbelianGroup::cyclic(2));
        std::vector<FgAbelianGroup> kept;
        for (const auto& g : survivors) {
            if (g.order() && is_epimorphic_image(klein, g)) kept.push_back(g);
        }
        survivors = std::move(kept);
    }
    // Deduplicate by normal form.
    for (const auto& g : survivors)
        if (std::find(out.survivors.begin(), out.survivors.end(), g) == out.survivors.end())
            out.survivors.push_back(g);

    if (out.survivors.size() != 1)
        throw InternalConsistencyError(
            "case analysis did not isolate a unique group: " +
            std::to_string(out.survivors.size()) + " survivors remain");
    out.group = out.survivors.front();

    TraceStep st;
    st.rule = "R4";
    st.seq = render_seq(FgAbelianGroup::z(), out.group);
    st.from =
        "case analysis: quotients of " + out.middle.render() +
        " by the embeddings 1 -> (2,0), (1,1), (2,1); order-4 constraint from the double "
        "cover SL(4,R) -> SO+(3,3); surjective-image constraint from Z/2 x Z/2";
    st.conclusion = "pi1(SO+(3,3)) = " + out.group.render();
    st.left = out.middle;
    st.result = out.group;
    out.trace.push_back(std::move(st));
    return out;
}

bool replay_trace(const DerivationTrace& trace) {
    for (const TraceStep& st : trace) {
        if (st.rule == "R1" || st.rule == "R2" || st.rule == "R3") {
            if (!st.left || !st.right || !st.result) return false;
            SesInstance s;
            s.left = *st.left;
            s.right = *st.right;
            try {
                SesConclusion c = ses_conclude(s);
                if (c.rule != st.rule || !(c.middle == *st.result)) return false;
            } catch (const UnsupportedSequenceError&) {
                return false;
            }
        } else if (st.rule == "R4") {
            if (!st.result) return false;
            So33Analysis a = DerivationEngine().so33_case_analysis();
            if (!(a.group == *st.result)) return false;
            if (st.left && !(a.middle == *st.left)) return false;
        } else if (st.rule == "table") {
            if (!st.table_n || !st.result) return false;
            if (!(pi1_so(*st.table_n) == *st.result)) return false;
        } else if (st.rule == "swap") {
            // Pure bookkeeping; nothing to re-check.
        } else {
            return false;
        }
    }
    return true;
}

}  // namespace sopq
