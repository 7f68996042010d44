#pragma once

#include "univoque/expansion.hpp"
#include "univoque/precision_real.hpp"
#include "univoque/words.hpp"

namespace univoque {

// Largest base in (1, M+1] in which x has an expansion: min(1+M, 1+M/x).
PrecisionReal q_of_x(const PrecisionReal& x, Alphabet alphabet);

// Solves pi_q(d) = x for q by bisection, using that q -> pi_q(d) is strictly
// decreasing for d != 0^inf. The search interval is [1 + 1e-9, M+1]; the
// returned value has radius <= tol (plus propagated slack when x itself
// carries a radius). Throws DomainError when no root exists there.
PrecisionReal invert_base(const EventuallyPeriodicWord& d, const PrecisionReal& x,
                          const Rational& tol);

// Generalized golden ratio: k+1 for M = 2k, (k+1+sqrt(k^2+6k+5))/2 for M = 2k+1.
// Exact closed form (rational or quadratic), enclosed to `bits`.
PrecisionReal golden_ratio_base(Alphabet alphabet, unsigned bits = PrecisionReal::kDefaultBits);

struct KomornikLoretiBase {
    PrecisionReal value;
    // For M >= 2 the value comes from a grid-refinement oracle over
    // depth-bounded uniqueness tests rather than a series root.
    bool oracle = false;
};

// Smallest base in which 1 has a unique expansion. For M = 1 this is the
// root of sum tau_i q^-i = 1 over the Thue-Morse shift (tau_i from i = 1),
// bisected with a certified tail bound.
KomornikLoretiBase komornik_loreti_base(Alphabet alphabet, const Rational& tol);

struct CriticalConstants {
    Alphabet alphabet{1};
    PrecisionReal q_G;
    PrecisionReal q_KL;
    PrecisionReal x_G;   // M / (q_G - 1)
    PrecisionReal x_KL;  // M / (q_KL - 1)
    bool kl_oracle = false;
};

CriticalConstants critical_constants(Alphabet alphabet, const Rational& tol);

} // namespace univoque
