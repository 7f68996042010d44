#include "univoque/expansion.hpp"

#include <map>
#include <tuple>

#include "univoque/errors.hpp"

namespace univoque {

namespace {

void require_base(const PrecisionReal& q, const Alphabet& alphabet) {
    if (!q.certainly_greater(Rational(1)))
        throw DomainError("base must be certainly > 1");
    if (q.lo() > Rational(alphabet.size()))
        throw DomainError("base must be <= M + 1");
}

PrecisionReal horner(const Word& digits, const PrecisionReal& u) {
    // sum digits_i u^i (i from 1) = u (d_1 + u (d_2 + ...))
    PrecisionReal v = PrecisionReal::from_int(0, u.precision_bits());
    for (std::size_t i = digits.size(); i-- > 0;)
        v = (v + PrecisionReal::from_int(digits.at(i))) * u;
    return v;
}

} // namespace

PrecisionReal pi_q(const Word& prefix, const PrecisionReal& q) {
    if (!q.certainly_greater(Rational(1)))
        throw DomainError("pi_q: base must be certainly > 1");
    return horner(prefix, q.reciprocal());
}

PrecisionReal pi_q(const EventuallyPeriodicWord& d, const PrecisionReal& q) {
    if (!q.certainly_greater(Rational(1)))
        throw DomainError("pi_q: base must be certainly > 1");
    if (q.is_exact_rational())
        return PrecisionReal::from_rational(pi_q_exact(d, q.value()), q.precision_bits());
    if (!q.exact()) {
        // the series is non-increasing in q, so the endpoints bracket it
        return PrecisionReal::from_interval(pi_q_exact(d, q.hi()), pi_q_exact(d, q.lo()),
                                            q.precision_bits());
    }
    // quadratic base: interval Horner keeps the exact algebraic channel
    PrecisionReal u = q.reciprocal();
    PrecisionReal pre_val = horner(d.preperiod(), u);
    PrecisionReal per_val = horner(d.period(), u);
    PrecisionReal uL = u.pow_int(static_cast<long>(d.period().size()));
    PrecisionReal one = PrecisionReal::from_int(1);
    PrecisionReal scale = u.pow_int(static_cast<long>(d.preperiod().size()));
    return pre_val + scale * (per_val / (one - uL));
}

BigInt pi_numerator(const Word& digits, const BigInt& a, const BigInt& b) {
    // S_i = a S_{i-1} + d_i b^i, all integers; avoids rational gcd churn
    BigInt s = 0, bp = 1;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        bp *= b;
        s = s * a + digits.at(i) * bp;
    }
    return s;
}

namespace {

// numerator/denominator of pi_q(d) at q = a/b, unnormalized
std::pair<BigInt, BigInt> pi_fraction(const EventuallyPeriodicWord& d, const BigInt& a,
                                      const BigInt& b) {
    unsigned P = static_cast<unsigned>(d.preperiod().size());
    unsigned L = static_cast<unsigned>(d.period().size());
    BigInt s_pre = pi_numerator(d.preperiod(), a, b);
    BigInt s_per = pi_numerator(d.period(), a, b);
    BigInt aL = pow_big(a, L), bL = pow_big(b, L);
    BigInt aP = pow_big(a, P), bP = pow_big(b, P);
    BigInt gap = aL - bL; // positive since q > 1
    return {s_pre * gap + bP * s_per, aP * gap};
}

} // namespace

Rational pi_q_exact(const Word& prefix, const Rational& q) {
    if (q <= 1) throw DomainError("pi_q_exact: base must be > 1");
    BigInt a = boost::multiprecision::numerator(q);
    BigInt b = boost::multiprecision::denominator(q);
    return Rational(pi_numerator(prefix, a, b), pow_big(a, static_cast<unsigned>(prefix.size())));
}

Rational pi_q_exact(const EventuallyPeriodicWord& d, const Rational& q) {
    if (q <= 1) throw DomainError("pi_q_exact: base must be > 1");
    auto [num, den] = pi_fraction(d, boost::multiprecision::numerator(q),
                                  boost::multiprecision::denominator(q));
    return Rational(num, den);
}

int compare_pi_exact(const EventuallyPeriodicWord& d, const Rational& q, const Rational& x) {
    if (q <= 1) throw DomainError("compare_pi_exact: base must be > 1");
    auto [num, den] = pi_fraction(d, boost::multiprecision::numerator(q),
                                  boost::multiprecision::denominator(q));
    BigInt lhs = num * boost::multiprecision::denominator(x);
    BigInt rhs = boost::multiprecision::numerator(x) * den;
    if (lhs == rhs) return 0;
    return lhs < rhs ? -1 : 1;
}

PrecisionReal pi_q(const DigitStream& d, const PrecisionReal& q, std::uint64_t depth) {
    if (!q.certainly_greater(Rational(1)))
        throw DomainError("pi_q: base must be certainly > 1");
    PrecisionReal u = q.reciprocal();
    PrecisionReal partial = horner(d.prefix(static_cast<std::size_t>(depth)), u);
    // tail is within [0, M u^depth / (1 - u)]
    Rational m(d.alphabet().max_digit);
    Rational tail_hi = m * pow_rational(u.hi(), static_cast<long>(depth)) / (Rational(1) - u.hi());
    return partial + PrecisionReal::from_interval(0, tail_hi, q.precision_bits());
}

namespace {

struct DigitDecision {
    bool decided = false;
    int digit = 0;
};

DigitDecision greedy_digit(const PrecisionReal& t, int max_digit) {
    if (auto e = t.exact()) {
        BigInt f = e->floor();
        BigInt capped = f < 0 ? BigInt(0) : (f > max_digit ? BigInt(max_digit) : f);
        return {true, capped.convert_to<int>()};
    }
    if (t.certainly_geq(Rational(max_digit))) return {true, max_digit};
    BigInt f = floor_rational(t.lo());
    if (t.hi() < Rational(f + 1)) {
        BigInt capped = f < 0 ? BigInt(0) : f;
        return {true, capped.convert_to<int>()};
    }
    return {false, 0};
}

DigitDecision quasi_digit(const PrecisionReal& t, int max_digit) {
    if (auto e = t.exact()) {
        BigInt f = e->is_integer() ? e->floor() - 1 : e->floor();
        if (f < 0) return {false, 0}; // q r <= 0: residual invariant broken
        BigInt capped = f > max_digit ? BigInt(max_digit) : f;
        return {true, capped.convert_to<int>()};
    }
    if (t.certainly_greater(Rational(max_digit))) return {true, max_digit};
    // need the interval inside (f, f+1] for some integer f
    Rational lo = t.lo();
    BigInt f;
    if (is_integer(lo)) {
        if (t.hi() != lo) return {false, 0};
        f = floor_rational(lo) - 1;
    } else {
        f = floor_rational(lo);
    }
    if (t.hi() > Rational(f + 1)) return {false, 0};
    if (f < 0) return {false, 0};
    return {true, f.convert_to<int>()};
}

struct LoopOutcome {
    Word digits;
    PrecisionReal residual; // x minus the emitted partial sum when residual_scaled,
                            // otherwise the raw last residual r_n
    std::optional<EventuallyPeriodicWord> periodic;
    bool stopped_early = false; // digit could not be decided
    bool residual_scaled = false;
};

// Exact-rational fast path: the residual r_k is kept as an integer numerator
// over the known denominator den0 * bq^k, so no gcd normalization ever runs.
// Cycle detection strips bq factors to get a canonical key.
LoopOutcome expansion_loop_rational(const Rational& x, const Rational& q, int n,
                                    Alphabet alphabet, ExpansionKind kind, unsigned bits) {
    namespace mp = boost::multiprecision;
    const BigInt aq = mp::numerator(q), bq = mp::denominator(q);
    BigInt num = mp::numerator(x);
    BigInt den = mp::denominator(x);
    const int m = alphabet.max_digit;

    std::map<std::pair<BigInt, long>, std::size_t> seen;
    std::vector<int> digits;
    digits.reserve(static_cast<std::size_t>(n));
    std::optional<EventuallyPeriodicWord> periodic;

    for (int k = 0; k < n; ++k) {
        if (!periodic) {
            BigInt v = num;
            long e = 0;
            if (v != 0 && bq > 1) {
                while (v % bq == 0) {
                    v /= bq;
                    ++e;
                }
            }
            long phase = (v == 0 || bq == 1) ? 0 : static_cast<long>(k) - e;
            auto [it, inserted] = seen.emplace(std::make_pair(std::move(v), phase), digits.size());
            if (!inserted) {
                std::size_t start = it->second;
                Word pre(std::vector<int>(digits.begin(), digits.begin() + static_cast<long>(start)),
                         alphabet);
                Word per(std::vector<int>(digits.begin() + static_cast<long>(start), digits.end()),
                         alphabet);
                periodic = EventuallyPeriodicWord(std::move(pre), std::move(per));
            }
        }
        int d;
        if (periodic) {
            d = periodic->digit(digits.size());
        } else {
            BigInt tn = aq * num;
            BigInt td = bq * den;
            BigInt f, rem;
            mp::divide_qr(tn, td, f, rem);
            if (kind == ExpansionKind::quasi_greedy && rem == 0) f -= 1;
            if (f < 0) f = 0;
            d = f > m ? m : f.convert_to<int>();
        }
        digits.push_back(d);
        BigInt td = bq * den;
        num = aq * num - d * td;
        den = td;
    }
    // x - partial = r_n q^-n = num_n / (den_x aq^n), one normalization total
    PrecisionReal residual = PrecisionReal::from_rational(
        Rational(num, mp::denominator(x) * pow_big(aq, static_cast<unsigned>(n))), bits);
    return {Word(std::move(digits), alphabet), std::move(residual), std::move(periodic), false, true};
}

LoopOutcome expansion_loop(PrecisionReal x, PrecisionReal q, int n,
                           Alphabet alphabet, ExpansionKind kind) {
    if (x.is_exact_rational() && q.is_exact_rational())
        return expansion_loop_rational(x.value(), q.value(), n, alphabet, kind,
                                       std::max(x.precision_bits(), q.precision_bits()));
    using Key = std::tuple<Rational, Rational, BigInt>;
    std::map<Key, std::size_t> seen;
    std::vector<int> digits;
    digits.reserve(static_cast<std::size_t>(n));
    std::optional<EventuallyPeriodicWord> periodic;

    PrecisionReal r = x;
    for (int k = 0; k < n; ++k) {
        if (!periodic && r.exact()) {
            Key key{r.exact()->a, r.exact()->b, r.exact()->c};
            auto [it, inserted] = seen.emplace(key, digits.size());
            if (!inserted) {
                std::size_t start = it->second;
                Word pre(std::vector<int>(digits.begin(), digits.begin() + static_cast<long>(start)), alphabet);
                Word per(std::vector<int>(digits.begin() + static_cast<long>(start), digits.end()), alphabet);
                periodic = EventuallyPeriodicWord(std::move(pre), std::move(per));
            }
        }
        if (periodic) {
            digits.push_back(periodic->digit(digits.size()));
            continue;
        }
        PrecisionReal t = q * r;
        DigitDecision d = kind == ExpansionKind::greedy ? greedy_digit(t, alphabet.max_digit)
                                                        : quasi_digit(t, alphabet.max_digit);
        if (!d.decided)
            return {Word(std::move(digits), alphabet), r, periodic, true};
        digits.push_back(d.digit);
        r = (t - PrecisionReal::from_int(d.digit)).compressed();
    }
    if (periodic) // the tail of the pinned form is the residual, exactly
        r = pi_q(periodic->shifted(digits.size()), q);
    return {Word(std::move(digits), alphabet), std::move(r), std::move(periodic), false, false};
}

ExpansionResult expand_impl(const PrecisionReal& x_in, const PrecisionReal& q_in,
                            int n, Alphabet alphabet, ExpansionKind kind) {
    if (n < 0) throw DomainError("expansion length must be >= 0");
    require_base(q_in, alphabet);
    Rational m(alphabet.max_digit);
    if (kind == ExpansionKind::greedy) {
        if (x_in.certainly_less(Rational(0)))
            throw DomainError("greedy_expand: x must be >= 0");
    } else {
        if (!x_in.certainly_greater(Rational(0)))
            throw DomainError("quasi_greedy_expand: x must be certainly > 0");
    }
    // x <= M / (q - 1)
    PrecisionReal bound = PrecisionReal::from_rational(m) /
                          (q_in - PrecisionReal::from_int(1));
    if (x_in.certainly_greater(bound))
        throw DomainError("expand: x exceeds M/(q-1)");

    PrecisionReal x = x_in, q = q_in;
    for (;;) {
        LoopOutcome out = expansion_loop(x, q, n, alphabet, kind);
        if (!out.stopped_early) {
            PrecisionReal residual =
                out.residual_scaled
                    ? std::move(out.residual)
                    : out.residual *
                          q.reciprocal().pow_int(static_cast<long>(out.digits.size()));
            return {std::move(out.digits), kind, std::move(residual), std::move(out.periodic)};
        }
        unsigned bits = std::max(x.precision_bits(), q.precision_bits());
        if (bits >= PrecisionReal::kMaxBits)
            throw PrecisionError("expand: digit undecidable at precision cap; "
                                 "raise precision_bits or supply an exact base");
        unsigned next = std::min(bits * 2, PrecisionReal::kMaxBits);
        PrecisionReal x2 = x.refined(next), q2 = q.refined(next);
        if (x2.radius() == x.radius() && q2.radius() == q.radius() &&
            x2.precision_bits() == x.precision_bits() && q2.precision_bits() == q.precision_bits())
            throw PrecisionError("expand: digit undecidable and inputs cannot be refined");
        x = x2;
        q = q2;
    }
}

} // namespace

ExpansionResult greedy_expand(const PrecisionReal& x, const PrecisionReal& q,
                              int n, Alphabet alphabet) {
    return expand_impl(x, q, n, alphabet, ExpansionKind::greedy);
}

ExpansionResult quasi_greedy_expand(const PrecisionReal& x, const PrecisionReal& q,
                                    int n, Alphabet alphabet) {
    return expand_impl(x, q, n, alphabet, ExpansionKind::quasi_greedy);
}

ExpansionResult alpha_expansion(const PrecisionReal& q, int n, Alphabet alphabet) {
    return quasi_greedy_expand(PrecisionReal::from_int(1), q, n, alphabet);
}

AlphaInfo alpha_info(const PrecisionReal& q, int depth, Alphabet alphabet) {
    require_base(q, alphabet);
    LoopOutcome out = expansion_loop(PrecisionReal::from_int(1), q, depth, alphabet,
                                     ExpansionKind::quasi_greedy);
    return {std::move(out.digits), std::move(out.periodic)};
}

namespace {

enum class Check { holds, fails, unknown };

// tail < alpha, where alpha is known exactly or as a prefix
Check strictly_below_alpha(const EventuallyPeriodicWord& tail, const AlphaInfo& alpha) {
    if (alpha.exact) {
        return lex_compare(tail, *alpha.exact) == Ordering::less ? Check::holds : Check::fails;
    }
    const Word& p = alpha.prefix;
    for (std::size_t i = 0; i < p.size(); ++i) {
        int dt = tail.digit(i);
        if (dt != p.at(i)) return dt < p.at(i) ? Check::holds : Check::fails;
    }
    return Check::unknown; // tie through the known prefix
}

} // namespace

Uniqueness is_unique_expansion(const EventuallyPeriodicWord& d, const PrecisionReal& q,
                               int alpha_depth) {
    Alphabet alphabet = d.alphabet();
    AlphaInfo alpha = alpha_info(q, alpha_depth, alphabet);
    const int m = alphabet.max_digit;

    bool undecided = false;
    std::size_t tails = d.tail_count();
    for (std::size_t n = 1; n <= tails; ++n) {
        int dn = d.digit(n - 1);
        EventuallyPeriodicWord tail = d.shifted(n);
        if (dn < m) {
            Check c = strictly_below_alpha(tail, alpha);
            if (c == Check::fails) return Uniqueness::not_unique;
            if (c == Check::unknown) undecided = true;
        }
        if (dn > 0) {
            Check c = strictly_below_alpha(tail.reflected(), alpha);
            if (c == Check::fails) return Uniqueness::not_unique;
            if (c == Check::unknown) undecided = true;
        }
    }
    return undecided ? Uniqueness::undecided : Uniqueness::unique;
}

namespace {

// digits of `tail` against alpha: holds / fails / tie-within-known-digits
Check below_alpha_prefix(const DigitStream& tail, const AlphaInfo& alpha, std::uint64_t depth) {
    if (alpha.exact) {
        DigitStream a = DigitStream::from_word(*alpha.exact);
        DepthVerdict v = lex_compare_to_depth(tail, a, depth);
        if (!v.decided) return Check::unknown;
        return v.ordering == Ordering::less ? Check::holds : Check::fails;
    }
    std::uint64_t lim = std::min<std::uint64_t>(depth, alpha.prefix.size());
    for (std::uint64_t i = 0; i < lim; ++i) {
        int dt = tail.digit(i);
        int da = alpha.prefix.at(static_cast<std::size_t>(i));
        if (dt != da) return dt < da ? Check::holds : Check::fails;
    }
    return Check::unknown;
}

} // namespace

Uniqueness is_unique_expansion(const DigitStream& d, const PrecisionReal& q, int depth) {
    Alphabet alphabet = d.alphabet();
    AlphaInfo alpha = alpha_info(q, depth, alphabet);
    const int m = alphabet.max_digit;
    for (int n = 1; n <= depth; ++n) {
        int dn = d.digit(static_cast<std::uint64_t>(n) - 1);
        DigitStream tail = d.shifted(static_cast<std::uint64_t>(n));
        if (dn < m && below_alpha_prefix(tail, alpha, static_cast<std::uint64_t>(depth)) == Check::fails)
            return Uniqueness::not_unique;
        if (dn > 0 &&
            below_alpha_prefix(tail.reflected(), alpha, static_cast<std::uint64_t>(depth)) == Check::fails)
            return Uniqueness::not_unique;
    }
    return Uniqueness::undecided;
}

bool uniqueness_violation_to_depth(const Word& digits, const AlphaInfo& alpha) {
    const int m = digits.alphabet().max_digit;
    std::size_t len = digits.size();
    auto alpha_digit = [&](std::size_t i) -> int {
        if (alpha.exact) return alpha.exact->digit(i);
        if (i < alpha.prefix.size()) return alpha.prefix.at(i);
        return -1; // unknown beyond the prefix
    };
    for (std::size_t n = 1; n < len; ++n) {
        int dn = digits.at(n - 1);
        if (dn < m) {
            for (std::size_t j = 0; n + j < len; ++j) {
                int da = alpha_digit(j);
                if (da < 0) break;
                if (digits.at(n + j) > da) return true;
                if (digits.at(n + j) < da) break;
            }
        }
        if (dn > 0) {
            for (std::size_t j = 0; n + j < len; ++j) {
                int da = alpha_digit(j);
                if (da < 0) break;
                int refl = m - digits.at(n + j);
                if (refl > da) return true;
                if (refl < da) break;
            }
        }
    }
    return false;
}

} // namespace univoque
