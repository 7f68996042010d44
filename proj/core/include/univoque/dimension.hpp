#pragma once

#include <vector>

#include "univoque/automaton.hpp"
#include "univoque/base_solver.hpp"
#include "univoque/expansion.hpp"
#include "univoque/precision_real.hpp"

namespace univoque {

struct DimensionEstimate {
    double lower = 0.0;
    double upper = 0.0;
    int N = 0;          // alpha-prefix truncation
    int n = 0;          // iteration/length budget for the counting kernel
    PrecisionReal q;    // the base the estimate refers to
};

// Bracket for the Hausdorff dimension (base M+1 logs) of the set of unique
// expansions in base q: the strict-window automaton on the N-digit prefix of
// the expansion of 1 yields the lower bound, the weak-window automaton the
// upper bound.
DimensionEstimate dim_Uq(const PrecisionReal& q, Alphabet alphabet, int N = 16, int n = 48);

// Same bracket for the set of unique expansions of x across all bases:
// equal to dim_Uq at q_of_x(x) (the slice dimension identity).
DimensionEstimate dim_Ux(const PrecisionReal& x, Alphabet alphabet, int N = 16, int n = 48);

// Dimension of the univoque set on the real line: symbolic value divided by
// log_{M+1} q, with the division applied to the certified bracket ends.
DimensionEstimate dim_real_Uq(const PrecisionReal& q, Alphabet alphabet, int N = 16, int n = 48);

enum class StaircaseKind { psi, phi };

struct StaircaseRow {
    Rational abscissa;
    double lower = 0.0;
    double upper = 0.0;
};

// Sampled Devil's-staircase data: psi(q) over a base grid or phi(x) over a
// point grid. Rows come back sorted by abscissa regardless of worker order.
std::vector<StaircaseRow> staircase_samples(StaircaseKind kind, Alphabet alphabet,
                                            const std::vector<Rational>& grid,
                                            int N = 16, int n = 48, int jobs = 1);

} // namespace univoque
