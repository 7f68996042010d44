#pragma once

#include <optional>

#include "univoque/precision_real.hpp"
#include "univoque/words.hpp"

namespace univoque {

// Value of the series sum d_i q^-i (i from 1). For eventually periodic input
// this is the exact closed form preperiod polynomial + period polynomial
// divided by (1 - q^-L). Requires q > 1 (certified).
PrecisionReal pi_q(const EventuallyPeriodicWord& d, const PrecisionReal& q);

// Finite sum over the word's digits; exact.
PrecisionReal pi_q(const Word& prefix, const PrecisionReal& q);

// Truncated at `depth` digits with the geometric tail bound
// M q^-depth / (q - 1) folded into the radius.
PrecisionReal pi_q(const DigitStream& d, const PrecisionReal& q, std::uint64_t depth);

// Exact rational evaluation at an exact rational base q > 1.
Rational pi_q_exact(const EventuallyPeriodicWord& d, const Rational& q);
Rational pi_q_exact(const Word& prefix, const Rational& q);

// Integer core of the rational evaluation: sum d_i b^i a^(L-i), so that the
// finite sum of d_i q^-i at q = a/b equals the result divided by a^L.
BigInt pi_numerator(const Word& digits, const BigInt& a, const BigInt& b);

// Sign of pi_q(d) - x at an exact rational base, computed entirely with
// integer cross products (no normalization of huge rationals).
int compare_pi_exact(const EventuallyPeriodicWord& d, const Rational& q, const Rational& x);

enum class ExpansionKind { greedy, quasi_greedy };

struct ExpansionResult {
    Word digits;
    ExpansionKind kind = ExpansionKind::greedy;
    // x minus the emitted partial sum; lies in [0, M q^-n/(q-1)].
    PrecisionReal residual_bound;
    // Set when the digit recursion revisited an exact residual, which pins
    // the whole expansion as an eventually periodic word.
    std::optional<EventuallyPeriodicWord> periodic_form;
};

// Digit-by-digit expansions of x in base q over {0..M}. Digits are emitted
// only when the decision is certain (exact algebraic channel or an interval
// strictly inside one decision cell); otherwise precision is escalated by
// doubling, capped at PrecisionReal::kMaxBits, before PrecisionError.
//
// greedy:        d_k = min(M, floor(q r))
// quasi-greedy:  d_k = min(M, largest integer strictly below q r)
ExpansionResult greedy_expand(const PrecisionReal& x, const PrecisionReal& q,
                              int n, Alphabet alphabet);
ExpansionResult quasi_greedy_expand(const PrecisionReal& x, const PrecisionReal& q,
                                    int n, Alphabet alphabet);

// Quasi-greedy expansion of 1 in base q.
ExpansionResult alpha_expansion(const PrecisionReal& q, int n, Alphabet alphabet);

// Prefix of the quasi-greedy expansion of 1, stopping early (instead of
// throwing) if a digit cannot be decided at the available precision.
struct AlphaInfo {
    Word prefix;                                      // digits that were decided
    std::optional<EventuallyPeriodicWord> exact;      // full expansion when periodic
};
AlphaInfo alpha_info(const PrecisionReal& q, int depth, Alphabet alphabet);

enum class Uniqueness { unique, not_unique, undecided };

// Lexicographic uniqueness test for an eventually periodic candidate: for
// every tail position n with d_n < M the shifted tail must come strictly
// before the expansion of 1 in base q, and symmetrically (reflected) when
// d_n > 0. Exact when the expansion of 1 is pinned as a periodic word;
// otherwise compared against its first alpha_depth digits, with ties
// reported as undecided.
Uniqueness is_unique_expansion(const EventuallyPeriodicWord& d, const PrecisionReal& q,
                               int alpha_depth = 64);

// Semi-decision for streams: not_unique when a window condition certainly
// fails within `depth` shifted tails and digits, undecided otherwise (a
// stream can never be confirmed unique from finitely many digits).
Uniqueness is_unique_expansion(const DigitStream& d, const PrecisionReal& q, int depth = 64);

// Certain violation of the window conditions within the given prefix of an
// expansion, compared against `alpha`. Sound: once true, deeper prefixes
// stay violated. Ties through the known digits do not count as violations.
bool uniqueness_violation_to_depth(const Word& digits, const AlphaInfo& alpha);

} // namespace univoque
