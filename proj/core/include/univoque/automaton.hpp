#pragma once

#include <vector>

#include "univoque/rational.hpp"
#include "univoque/words.hpp"

namespace univoque {

enum class WindowStrictness { inner, outer };

// Finite-state acceptor for digit sequences whose length-N windows stay
// lexicographically between the reflection of alpha_prefix and alpha_prefix
// itself: strictly for `inner`, weakly for `outer`. States track the longest
// suffix matching a prefix of the bound word on each side plus a countdown
// for window violations that have been started but not yet completed, so
// finite-word counts agree exactly with a brute-force filter over the
// windows that fit fully inside the word.
class LexShiftAutomaton {
public:
    static LexShiftAutomaton build(const Word& alpha_prefix, WindowStrictness strictness);

    int state_count() const { return static_cast<int>(trans_.size()); }
    int window_length() const { return window_; }
    WindowStrictness strictness() const { return strictness_; }
    const Alphabet& alphabet() const { return alphabet_; }

    // Exact number of length-n words all of whose complete length-N windows
    // satisfy the constraint.
    BigInt count_words(int n) const;

    struct EntropyBounds {
        double lower = 0.0;
        double upper = 0.0;
        bool empty_language = false; // no infinite admissible sequence
    };

    // Certified bracket for the topological entropy in base-(M+1) logarithms:
    // eigenvalue ratio bounds (min/max of Av/v over each strongly connected
    // component) computed with exact big-integer vectors. Exact zeros stay
    // exactly zero.
    EntropyBounds entropy_bounds(int iterations = 48) const;

    // Finite difference (log C(n_hi) - log C(n_lo)) / (n_hi - n_lo) in
    // base-(M+1) logs, clamped to [0, 1]. 0 when the counts vanish.
    double entropy_estimate(int n_lo, int n_hi) const;

    // Transition target from `state` on `digit`, or -1 when rejected.
    int next(int state, int digit) const { return trans_[static_cast<std::size_t>(state)][static_cast<std::size_t>(digit)]; }
    int initial_state() const { return 0; }

    struct EntropyBoundsDetail {
        Rational lambda_lo{0};
        Rational lambda_hi{0};
        bool has_cycle = false;
    };
    // Raw eigenvalue bracket restricted to the part reachable from `starts`
    // (whole automaton when empty).
    EntropyBoundsDetail lambda_bounds(int iterations, const std::vector<int>& starts) const;

private:
    std::vector<std::vector<int>> trans_;
    Alphabet alphabet_{1};
    int window_ = 0;
    WindowStrictness strictness_ = WindowStrictness::inner;
};

} // namespace univoque
