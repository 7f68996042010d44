#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "univoque/base_solver.hpp"
#include "univoque/dimension.hpp"
#include "univoque/expansion.hpp"
#include "univoque/precision_real.hpp"

namespace univoque {

enum class Regime { full_dim, positive_dim, countable, singleton };

struct MemberWitness {
    PrecisionReal base;
    EventuallyPeriodicWord expansion;
    int uniqueness_depth = 64;
};

struct RegimeClassification {
    PrecisionReal x;
    Regime regime = Regime::full_dim;
    std::vector<MemberWitness> witnesses; // exactly one for singleton
};

// Places x against the thresholds 1, M/(q_KL - 1) and M/(q_G - 1):
//   (0, 1]                -> full_dim
//   (1, x_KL)             -> positive_dim
//   [x_KL, x_G)           -> countable
//   [x_G, inf)            -> singleton (with witness (q_x, M^inf))
// Throws PrecisionError when x straddles a threshold at its current radius.
RegimeClassification classify(const PrecisionReal& x, Alphabet alphabet,
                              const CriticalConstants& constants);

// For x strictly between 1 and M/(q_G - 1): bases solving
// pi_p(M^k alpha(q_G)) = x. Every returned witness is base-inverted and
// uniqueness-verified; bases increase strictly toward q_x.
std::vector<MemberWitness> golden_tail_family(const PrecisionReal& x, Alphabet alphabet,
                                              int k_max, const Rational& tol,
                                              int uniqueness_depth = 64);

// For x in (0, 1): witnesses assembled from the quasi-greedy (M+1)-expansion
// prefix, a connector word (empty when that expansion ends in M^inf, "0M"
// otherwise), and sampled periodic tails avoiding runs of length N_j.
// Returns exactly `sample` distinct verified witnesses.
std::vector<MemberWitness> dense_family(const PrecisionReal& x, Alphabet alphabet,
                                        int j, int sample, std::uint64_t seed,
                                        const Rational& tol, int uniqueness_depth = 64);

enum class ScanVerdict { violated, candidate };

struct ScanRow {
    Rational q_lo;
    Rational q_hi;
    ScanVerdict verdict = ScanVerdict::candidate;
};

// Depth-bounded scan of the base interval (from, to] (default (1, q_x]):
// each midpoint's expansion prefix is tested against the window conditions.
// `violated` is permanent under deeper scans; `candidate` only means
// "not refuted at this depth".
std::vector<ScanRow> enumerate_Ux(const PrecisionReal& x, Alphabet alphabet,
                                  int grid_steps, int depth,
                                  std::optional<Rational> from = std::nullopt,
                                  std::optional<Rational> to = std::nullopt,
                                  int jobs = 1);

struct HolderPair {
    Rational p1, p2;
    double distance = 0;     // |p1 - p2|
    double rho = 0;          // sequence-space distance of the two expansions
    double lower_side = 0;   // C1 |p1-p2|^(1/log a)
    double upper_side = 0;   // C2 |p1-p2|^(1/log b)
    bool pass = false;
};

struct HolderReport {
    double c1 = 0, c2 = 0;
    int i0 = 0;
    std::vector<HolderPair> pairs;
    bool all_pass = true;
};

// Two-sided Hoelder inequality check with the explicit constants
//   C1 = ((a-1) x / (M b^2))^(1/log a),
//   C2 = (M b^{i0} / (a-1)^2)^(1/log b),
// i0 the first index where the expansion of 1 in base b drops below M^i0;
// logarithms base M+1. Pairs are drawn from the provided witnesses; each
// witness must verify as a unique expansion of x in its base.
HolderReport holder_check(const PrecisionReal& x, const PrecisionReal& a,
                          const PrecisionReal& b, Alphabet alphabet,
                          const std::vector<MemberWitness>& witnesses);

struct LocalDimRow {
    Rational delta;
    int scan_candidates = 0;
    int scan_steps = 0;
    double slice_lower = 0.0; // dimension bracket of the horizontal slice
    double slice_upper = 0.0; // restricted to (x - delta, x + delta)
};

// Exploratory comparison of the two local-dimension views at (x, q): base
// scan candidates near q versus a window-restricted dimension bracket of
// the univoque set at q. No pass/fail semantics.
std::vector<LocalDimRow> local_dim_experiment(const PrecisionReal& x, const PrecisionReal& q,
                                              Alphabet alphabet,
                                              const std::vector<Rational>& deltas,
                                              int N = 16, int n = 48);

// Re-runs the witness checks (base inversion round trip at doubled
// tolerance + uniqueness) for a stored witness of x.
bool witness_self_check(const MemberWitness& w, const PrecisionReal& x,
                        const Rational& tol);

} // namespace univoque
