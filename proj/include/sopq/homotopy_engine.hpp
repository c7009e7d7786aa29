#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sopq/fg_abelian.hpp"
#include "sopq/quasisphere.hpp"

namespace sopq {

// Derivation engine for pi_1(SO+(p,q)). It follows the fibration route:
// two fibrations with quasi-sphere bases feed short exact sequences, a
// small set of inference rules reads off the middle term, and the (3,3)
// endgame is settled by an explicit case analysis. Quasi-sphere homotopy
// is consumed through a pluggable provider so tests can corrupt it.

// pi_1(SO(n)): trivial for n <= 1, Z for n = 2, Z/2 for n >= 3.
FgAbelianGroup pi1_so(int n);

// Number of connected components: 2 when both p,q >= 1, else 1.
int pi0_so(int p, int q);

// A short exact sequence 0 -> left -> middle -> right -> 0 with the
// middle possibly unknown.
struct SesInstance {
    FgAbelianGroup left;
    std::optional<FgAbelianGroup> middle;
    FgAbelianGroup right;
    std::string provenance;
};

struct SesConclusion {
    FgAbelianGroup middle;
    std::string rule;  // "R1", "R2" or "R3"
};

// Inference rules:
//   R1: 0 -> B -> 0                    => B = 0
//   R2: 0 -> A -> B -> 0               => B = A   (and the mirrored form)
//   R3: 0 -> A -> B -> Z^r -> 0        => B = A x Z^r (free quotient splits)
// Any other shape throws UnsupportedSequenceError; the only such case on
// the derivation route is (3,3), handled by the case analysis below.
SesConclusion ses_conclude(const SesInstance& s);

struct TraceStep {
    std::string rule;  // R1/R2/R3/R4 for inferences; "table"/"swap" for bookkeeping
    std::string seq;
    std::string from;
    std::string conclusion;
    std::optional<FgAbelianGroup> left;
    std::optional<FgAbelianGroup> right;
    std::optional<FgAbelianGroup> result;
    std::optional<int> table_n;  // set on "table" steps
};

using DerivationTrace = std::vector<TraceStep>;

struct Derivation {
    FgAbelianGroup group;
    DerivationTrace trace;
};

struct So33Options {
    bool apply_order_constraint = true;  // |pi_1| = 4 from the double cover by SL(4,R)
    bool apply_image_constraint = true;  // surjective image of Z/2 x Z/2
};

struct So33Analysis {
    FgAbelianGroup group;
    FgAbelianGroup middle;                        // pi_1(SO+(3,2))
    std::vector<FgAbelianGroup> candidate_quotients;  // quotients by (2,0), (1,1), (2,1)
    std::vector<FgAbelianGroup> survivors;
    DerivationTrace trace;
};

class DerivationEngine {
  public:
    using PiKFn = std::function<HomotopySetOrGroup(const Signature&, int)>;

    // Wired to the quasi-sphere homotopy table.
    DerivationEngine();
    // Test hook: substitute homotopy provider.
    explicit DerivationEngine(PiKFn provider);

    // Derives pi_1(SO+(p,q)) along the fibration route, with the full trace.
    Derivation pi1_so_plus(int p, int q) const;

    // The (3,3) endgame: candidate quotients of Z x Z/2 by the three
    // index-classified embeddings of Z, filtered by the order-4 and
    // epimorphic-image constraints. Exactly one survivor must remain, or
    // InternalConsistencyError is thrown.
    So33Analysis so33_case_analysis(const So33Options& opts = {}) const;

  private:
    FgAbelianGroup derive(int p, int q, DerivationTrace& trace) const;
    FgAbelianGroup conclude_and_record(SesInstance s, const std::string& target,
                                       DerivationTrace& trace) const;

    PiKFn pi_k_;
};

// Re-checks every inference step against its stored inputs. Bookkeeping
// steps re-check their table values. Returns false on the first step that
// does not replay.
bool replay_trace(const DerivationTrace& trace);

}  // namespace sopq
