#include "univoque/base_solver.hpp"

#include "univoque/automaton.hpp"
#include "univoque/errors.hpp"
#include "univoque/thue_morse.hpp"

namespace univoque {

PrecisionReal q_of_x(const PrecisionReal& x, Alphabet alphabet) {
    if (!x.certainly_greater(Rational(0)))
        throw DomainError("q_of_x: x must be certainly > 0");
    Rational m(alphabet.max_digit);
    PrecisionReal cand = PrecisionReal::from_int(1) +
                         PrecisionReal::from_rational(m) / x;
    Rational cap = m + 1;
    if (cand.certainly_geq(cap)) return PrecisionReal::from_rational(cap, x.precision_bits());
    if (cand.certainly_leq(cap)) return cand;
    // interval straddles M+1: clamp the upper end
    return PrecisionReal::from_interval(cand.lo(), cap, x.precision_bits());
}

PrecisionReal invert_base(const EventuallyPeriodicWord& d, const PrecisionReal& x,
                          const Rational& tol) {
    if (d.is_zero()) throw DomainError("invert_base: sequence 0^inf has no base");
    if (tol <= 0) throw DomainError("invert_base: tol must be positive");
    Alphabet alphabet = d.alphabet();
    Rational lo = Rational(1) + Rational(1, 1000000000); // spec cutoff at 1 + 1e-9
    Rational hi = alphabet.max_digit + 1;

    // pi is decreasing in q; a root exists iff pi(hi) <= x <= pi(lo)
    if (compare_pi_exact(d, lo, x.lo()) < 0 || compare_pi_exact(d, hi, x.hi()) > 0)
        throw DomainError("invert_base: no base in (1, M+1] maps the sequence to x");

    Rational target = x.value();
    while (hi - lo > tol) {
        Rational mid = (lo + hi) / 2;
        int side = compare_pi_exact(d, mid, target);
        if (side == 0) {
            lo = hi = mid;
            break;
        }
        if (side > 0)
            lo = mid;
        else
            hi = mid;
    }

    if (x.radius() > 0) {
        // inflate by the bracket's secant slope to cover x's own uncertainty
        Rational flo = pi_q_exact(d, lo), fhi = pi_q_exact(d, hi);
        Rational slope = (flo - fhi) / (hi - lo);
        if (slope > 0) {
            Rational inflation = x.radius() / slope;
            return PrecisionReal::from_interval(lo - inflation, hi + inflation,
                                                x.precision_bits());
        }
    }
    return PrecisionReal::from_interval(lo, hi, x.precision_bits());
}

PrecisionReal golden_ratio_base(Alphabet alphabet, unsigned bits) {
    int m = alphabet.max_digit;
    if (m % 2 == 0) {
        long k = m / 2;
        return PrecisionReal::from_rational(Rational(k + 1), bits);
    }
    long k = (m - 1) / 2;
    // (k+1 + sqrt(k^2 + 6k + 5)) / 2
    BigInt disc = BigInt(k) * k + 6 * k + 5;
    QuadExt value{Rational(k + 1, 2), Rational(1, 2), disc};
    return PrecisionReal::from_quadratic(std::move(value), bits);
}

namespace {

// Certified sign of dim U_q: +1 when the strict-window automaton already has
// growth (so the dimension is positive), -1 when the weak-window automaton
// is certified flat (dimension zero), 0 when the truncations cannot tell.
int dimension_sign(const Rational& q, Alphabet alphabet) {
    PrecisionReal qq = PrecisionReal::from_rational(q);
    for (int N : {16, 22, 28}) {
        AlphaInfo a = alpha_info(qq, N, alphabet);
        if (static_cast<int>(a.prefix.size()) < N) break;
        auto inner =
            LexShiftAutomaton::build(a.prefix, WindowStrictness::inner).entropy_bounds(48);
        if (!inner.empty_language && inner.lower > 0) return 1;
        auto outer =
            LexShiftAutomaton::build(a.prefix, WindowStrictness::outer).entropy_bounds(48);
        if (outer.empty_language || outer.upper == 0.0) return -1;
    }
    return 0;
}

KomornikLoretiBase kl_thue_morse_root(const Rational& tol) {
    // root of sum_{i>=1} tau_i q^-i = 1 with certified truncation tail:
    // with q = a/b the partial sum is S/a^D and the tail is below
    // b^D a / (a^D (a - b)), so both sign tests stay in integers
    int depth = 96;
    Word prefix = thue_morse_prefix(depth);
    Rational lo(7, 4), hi(9, 5);
    auto partial_above_one = [&](const Rational& q) {
        BigInt a = boost::multiprecision::numerator(q);
        BigInt b = boost::multiprecision::denominator(q);
        return pi_numerator(prefix, a, b) > pow_big(a, static_cast<unsigned>(prefix.size()));
    };
    auto with_tail_below_one = [&](const Rational& q) {
        BigInt a = boost::multiprecision::numerator(q);
        BigInt b = boost::multiprecision::denominator(q);
        unsigned D = static_cast<unsigned>(prefix.size());
        BigInt s = pi_numerator(prefix, a, b);
        return s * (a - b) + pow_big(b, D) * a < pow_big(a, D) * (a - b);
    };
    if (!partial_above_one(lo))
        throw PrecisionError("komornik_loreti_base: lower bracket failed");
    if (!with_tail_below_one(hi))
        throw PrecisionError("komornik_loreti_base: upper bracket failed");
    while (hi - lo > tol) {
        Rational mid = (lo + hi) / 2;
        if (partial_above_one(mid)) {
            lo = mid;
        } else if (with_tail_below_one(mid)) {
            hi = mid;
        } else {
            depth *= 2;
            prefix = thue_morse_prefix(depth);
        }
    }
    return {PrecisionReal::from_interval(lo, hi), false};
}

KomornikLoretiBase kl_dimension_oracle(Alphabet alphabet, const Rational& tol) {
    // The dimension of the set of unique expansions is zero up to the
    // Komornik-Loreti base and positive beyond it, which makes the certified
    // sign a monotone bisection predicate. The bracket stalls (and is
    // reported as the radius) once the window truncations can no longer
    // separate the two sides.
    Rational lo = golden_ratio_base(alphabet).hi(); // dimension zero here
    Rational hi = alphabet.max_digit + 1;           // dimension one here
    while (hi - lo > tol) {
        Rational mid = (lo + hi) / 2;
        int sign = dimension_sign(mid, alphabet);
        if (sign > 0)
            hi = mid;
        else if (sign < 0)
            lo = mid;
        else
            break;
    }
    return {PrecisionReal::from_interval(lo, hi), true};
}

} // namespace

KomornikLoretiBase komornik_loreti_base(Alphabet alphabet, const Rational& tol) {
    if (tol <= 0) throw DomainError("komornik_loreti_base: tol must be positive");
    if (alphabet.max_digit == 1) return kl_thue_morse_root(tol);
    return kl_dimension_oracle(alphabet, tol);
}

CriticalConstants critical_constants(Alphabet alphabet, const Rational& tol) {
    CriticalConstants out;
    out.alphabet = alphabet;
    out.q_G = golden_ratio_base(alphabet);
    KomornikLoretiBase kl = komornik_loreti_base(alphabet, tol);
    out.q_KL = kl.value;
    out.kl_oracle = kl.oracle;
    PrecisionReal m = PrecisionReal::from_int(alphabet.max_digit);
    PrecisionReal one = PrecisionReal::from_int(1);
    out.x_G = m / (out.q_G - one);
    out.x_KL = m / (out.q_KL - one);

    Rational top = alphabet.max_digit + 1;
    if (!(out.q_G.certainly_greater(Rational(1)) && out.q_G.certainly_less(out.q_KL) &&
          out.q_KL.certainly_less(top)))
        throw PrecisionError("critical_constants: ordering 1 < q_G < q_KL < M+1 not certified");
    if (!(out.x_KL.certainly_greater(Rational(1)) && out.x_KL.certainly_less(out.x_G)))
        throw PrecisionError("critical_constants: ordering 1 < x_KL < x_G not certified");
    return out;
}

} // namespace univoque
