#include "univoque/verify.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <sstream>

#include "univoque/automaton.hpp"
#include "univoque/base_solver.hpp"
#include "univoque/dimension.hpp"
#include "univoque/errors.hpp"
#include "univoque/expansion.hpp"
#include "univoque/thue_morse.hpp"
#include "univoque/univoque_x.hpp"

namespace univoque {

namespace {

struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed ^ 0x9e3779b97f4a7c15ULL) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d49b939133111eULL;
        return z ^ (z >> 31);
    }
    int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
};

Word random_word(SplitMix64& rng, Alphabet a, int min_len, int max_len) {
    int len = min_len + rng.below(max_len - min_len + 1);
    std::vector<int> digits(static_cast<std::size_t>(len));
    for (int& d : digits) d = rng.below(a.size());
    return Word(std::move(digits), a);
}

EventuallyPeriodicWord random_ep(SplitMix64& rng, Alphabet a, int max_pre = 6, int max_per = 6) {
    Word pre = random_word(rng, a, 0, max_pre);
    Word per = random_word(rng, a, 1, max_per);
    return EventuallyPeriodicWord(std::move(pre), std::move(per));
}

Rational random_rational(SplitMix64& rng, const Rational& lo, const Rational& hi, int grain = 1 << 20) {
    return lo + (hi - lo) * rng.below(grain) / grain;
}

class Suite {
public:
    explicit Suite(std::vector<CheckResult>& out) : out_(out) {}

    void check(const std::string& id, const std::function<bool(std::string&)>& body) {
        CheckResult r;
        r.id = id;
        try {
            r.pass = body(r.detail);
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = e.what();
        }
        out_.push_back(std::move(r));
    }

private:
    std::vector<CheckResult>& out_;
};

// ---------------------------------------------------------------- words

std::vector<CheckResult> suite_words(std::uint64_t seed) {
    std::vector<CheckResult> out;
    Suite s(out);

    s.check("words.canonical-idempotent", [&](std::string&) {
        SplitMix64 rng(seed + 1);
        for (int i = 0; i < 500; ++i) {
            Alphabet a(1 + rng.below(3));
            EventuallyPeriodicWord w = random_ep(rng, a);
            EventuallyPeriodicWord again(w.preperiod(), w.period());
            if (!(again == w)) return false;
        }
        return true;
    });

    s.check("words.reflect-involution", [&](std::string&) {
        SplitMix64 rng(seed + 2);
        for (int i = 0; i < 500; ++i) {
            Alphabet a(1 + rng.below(3));
            EventuallyPeriodicWord w = random_ep(rng, a);
            if (!(w.reflected().reflected() == w)) return false;
        }
        return true;
    });

    s.check("words.lex-total-order", [&](std::string&) {
        SplitMix64 rng(seed + 3);
        for (int i = 0; i < 500; ++i) {
            Alphabet a(1 + rng.below(2));
            EventuallyPeriodicWord u = random_ep(rng, a), v = random_ep(rng, a),
                                   w = random_ep(rng, a);
            Ordering uv = lex_compare(u, v), vu = lex_compare(v, u);
            if (uv == Ordering::less && vu != Ordering::greater) return false;
            if (uv == Ordering::equal && !(u == v)) return false;
            if (lex_compare(u, v) != Ordering::greater && lex_compare(v, w) != Ordering::greater &&
                lex_compare(u, w) == Ordering::greater)
                return false;
        }
        return true;
    });

    s.check("words.reflect-reverses-order", [&](std::string&) {
        for (int m = 1; m <= 2; ++m) {
            Alphabet a(m);
            std::vector<Word> words;
            std::function<void(std::vector<int>&)> gen = [&](std::vector<int>& cur) {
                if (!cur.empty()) words.push_back(Word(cur, a));
                if (cur.size() == 6) return;
                for (int d = 0; d <= m; ++d) {
                    cur.push_back(d);
                    gen(cur);
                    cur.pop_back();
                }
            };
            std::vector<int> cur;
            gen(cur);
            for (const Word& x : words)
                for (const Word& y : words) {
                    // equal-length comparison keeps the reflection duality exact
                    if (x.size() != y.size()) continue;
                    Ordering xy = lex_compare_equal_length(x, y);
                    Ordering ryx = lex_compare_equal_length(y.reflected(), x.reflected());
                    if (xy != ryx) return false;
                }
        }
        return true;
    });

    s.check("words.rho-ultrametric", [&](std::string&) {
        SplitMix64 rng(seed + 4);
        for (int i = 0; i < 500; ++i) {
            Alphabet a(1 + rng.below(2));
            EventuallyPeriodicWord u = random_ep(rng, a), v = random_ep(rng, a),
                                   w = random_ep(rng, a);
            Rational uv = metric_rho(u, v), vw = metric_rho(v, w), uw = metric_rho(u, w);
            if (uw > std::max(uv, vw)) return false;
        }
        return true;
    });

    s.check("words.shift-stream-compat", [&](std::string&) {
        SplitMix64 rng(seed + 5);
        for (int i = 0; i < 20; ++i) {
            Alphabet a(1 + rng.below(2));
            EventuallyPeriodicWord w = random_ep(rng, a);
            std::uint64_t n = static_cast<std::uint64_t>(rng.below(9));
            DigitStream shifted_stream = DigitStream::from_word(w).shifted(n);
            EventuallyPeriodicWord shifted_word = w.shifted(n);
            for (std::uint64_t idx = 0; idx < 10000; ++idx)
                if (shifted_stream.digit(idx) != shifted_word.digit(idx)) return false;
        }
        return true;
    });

    return out;
}

// ------------------------------------------------------------ expansion

std::vector<CheckResult> suite_expansion(std::uint64_t seed) {
    std::vector<CheckResult> out;
    Suite s(out);

    s.check("expansion.greedy-roundtrip", [&](std::string&) {
        SplitMix64 rng(seed + 11);
        for (int i = 0; i < 1000; ++i) {
            Alphabet a(1 + rng.below(3));
            Rational q = random_rational(rng, Rational(11, 10), Rational(a.size()));
            Rational top = Rational(a.max_digit) / (q - 1);
            Rational x = random_rational(rng, Rational(0), top);
            const int n = 24;
            ExpansionResult r = greedy_expand(PrecisionReal::from_rational(x),
                                              PrecisionReal::from_rational(q), n, a);
            Rational partial = pi_q_exact(r.digits, q);
            Rational bound = Rational(a.max_digit) * pow_rational(q, -n) / (q - 1);
            Rational err = x - partial;
            if (err < 0) err = -err;
            if (err > bound + r.residual_bound.radius()) return false;
        }
        return true;
    });

    s.check("expansion.quasi-below-greedy", [&](std::string&) {
        SplitMix64 rng(seed + 12);
        for (int i = 0; i < 300; ++i) {
            Alphabet a(1 + rng.below(2));
            Rational q = random_rational(rng, Rational(11, 10), Rational(a.size()));
            Rational top = Rational(a.max_digit) / (q - 1);
            Rational x = random_rational(rng, Rational(1, 100), top);
            const int n = 32;
            Word g = greedy_expand(PrecisionReal::from_rational(x),
                                   PrecisionReal::from_rational(q), n, a)
                         .digits;
            Word qg = quasi_greedy_expand(PrecisionReal::from_rational(x),
                                          PrecisionReal::from_rational(q), n, a)
                          .digits;
            Ordering ord = lex_compare_equal_length(qg, g);
            if (ord == Ordering::greater) return false;
            if (ord != Ordering::equal) {
                // they may only differ when the greedy expansion dies out in
                // zeros: the greedy word must end with a zero run after the
                // first difference
                if (g.at(g.size() - 1) != 0) return false;
            }
        }
        return true;
    });

    s.check("expansion.phi-monotone-in-q", [&](std::string&) {
        SplitMix64 rng(seed + 13);
        for (int i = 0; i < 1000; ++i) {
            Alphabet a(1 + rng.below(2));
            Rational x = random_rational(rng, Rational(1, 10), Rational(3, 2));
            Rational qx = std::min(Rational(a.size()), 1 + Rational(a.max_digit) / x);
            Rational q1 = random_rational(rng, Rational(105, 100), qx);
            Rational q2 = random_rational(rng, Rational(105, 100), qx);
            if (q1 == q2) continue;
            if (q1 > q2) std::swap(q1, q2);
            const int n = 24;
            Word w1 = quasi_greedy_expand(PrecisionReal::from_rational(x),
                                          PrecisionReal::from_rational(q1), n, a)
                          .digits;
            Word w2 = quasi_greedy_expand(PrecisionReal::from_rational(x),
                                          PrecisionReal::from_rational(q2), n, a)
                          .digits;
            if (lex_compare_equal_length(w1, w2) == Ordering::greater) return false;
        }
        return true;
    });

    s.check("expansion.quasi-tail-window", [&](std::string&) {
        SplitMix64 rng(seed + 14);
        for (int i = 0; i < 200; ++i) {
            Alphabet a(1 + rng.below(2));
            Rational q = random_rational(rng, Rational(11, 10), Rational(a.size()));
            Rational top = Rational(a.max_digit) / (q - 1);
            Rational x = random_rational(rng, Rational(1, 100), top);
            const int n = 32;
            Word w = quasi_greedy_expand(PrecisionReal::from_rational(x),
                                         PrecisionReal::from_rational(q), n, a)
                         .digits;
            AlphaInfo alpha = alpha_info(PrecisionReal::from_rational(q), n, a);
            // weak form of the window condition: the tail after a non-top
            // digit may not exceed the expansion of 1
            for (std::size_t p = 1; p < w.size(); ++p) {
                if (w.at(p - 1) >= a.max_digit) continue;
                for (std::size_t j = 0; p + j < w.size(); ++j) {
                    int ad = alpha.exact ? alpha.exact->digit(j)
                                         : (j < alpha.prefix.size() ? alpha.prefix.at(j) : -1);
                    if (ad < 0) break;
                    if (w.at(p + j) > ad) return false;
                    if (w.at(p + j) < ad) break;
                }
            }
        }
        return true;
    });

    s.check("expansion.unique-consistency", [&](std::string&) {
        SplitMix64 rng(seed + 15);
        int tested = 0;
        for (int i = 0; i < 400 && tested < 60; ++i) {
            Alphabet a(1 + rng.below(2));
            EventuallyPeriodicWord d = random_ep(rng, a, 4, 4);
            if (d.is_zero()) continue;
            Rational q = random_rational(rng, Rational(12, 10), Rational(a.size()));
            PrecisionReal qq = PrecisionReal::from_rational(q);
            if (is_unique_expansion(d, qq, 64) != Uniqueness::unique) continue;
            ++tested;
            Rational x = pi_q_exact(d, q);
            const int n = 24;
            Word g = greedy_expand(PrecisionReal::from_rational(x), qq, n, a).digits;
            Word qg = quasi_greedy_expand(PrecisionReal::from_rational(x), qq, n, a).digits;
            if (!(g == qg && g == d.prefix(n))) return false;
        }
        return tested > 0;
    });

    return out;
}

// --------------------------------------------------------------- solver

std::vector<CheckResult> suite_solver(std::uint64_t seed) {
    std::vector<CheckResult> out;
    Suite s(out);

    s.check("solver.invert-roundtrip", [&](std::string&) {
        SplitMix64 rng(seed + 21);
        Rational tol(1, pow_big(10, 12));
        for (int i = 0; i < 200; ++i) {
            Alphabet a(1 + rng.below(3));
            EventuallyPeriodicWord d = random_ep(rng, a);
            if (d.is_zero()) continue;
            Rational q = random_rational(rng, Rational(105, 100), Rational(a.size()));
            Rational x = pi_q_exact(d, q);
            PrecisionReal found = invert_base(d, PrecisionReal::from_rational(x), tol);
            Rational err = found.value() - q;
            if (err < 0) err = -err;
            if (err > 2 * tol) return false;
        }
        return true;
    });

    s.check("solver.pi-decreasing-in-q", [&](std::string&) {
        SplitMix64 rng(seed + 22);
        for (int i = 0; i < 50; ++i) {
            Alphabet a(1 + rng.below(2));
            EventuallyPeriodicWord d = random_ep(rng, a);
            if (d.is_zero()) continue;
            Rational prev(-1);
            for (int g = 20; g >= 1; --g) {
                Rational q = Rational(1) + Rational(g * g + 20, 40); // decreasing grid
                (void)q;
            }
            Rational last(0);
            bool first = true;
            for (int g = 1; g <= 12; ++g) {
                Rational q = Rational(105, 100) + Rational(g, 13) * (a.size() - 1);
                if (q > Rational(a.size())) break;
                Rational v = pi_q_exact(d, q);
                if (!first && !(v < last)) return false;
                last = v;
                first = false;
            }
        }
        return true;
    });

    s.check("solver.qx-monotone", [&](std::string&) {
        for (int m = 1; m <= 3; ++m) {
            Alphabet a(m);
            Rational prev(-1);
            for (int g = 1; g <= 60; ++g) {
                Rational x(g, 20); // 0.05 .. 3
                PrecisionReal q = q_of_x(PrecisionReal::from_rational(x), a);
                if (prev >= 0 && q.value() > prev) return false;
                prev = q.value();
                if (x <= 1 && q.value() != Rational(m + 1)) return false;
            }
        }
        return true;
    });

    s.check("solver.kl-in-univoque", [&](std::string&) {
        KomornikLoretiBase kl = komornik_loreti_base(Alphabet(1), Rational(1, pow_big(10, 30)));
        Uniqueness u = is_unique_expansion(thue_morse_stream(), kl.value, 64);
        return u != Uniqueness::not_unique; // no violation to depth 64
    });

    s.check("solver.constants-ordering", [&](std::string&) {
        for (int m = 1; m <= 6; ++m) {
            CriticalConstants cc = critical_constants(Alphabet(m), Rational(1, pow_big(10, 8)));
            if (!(cc.x_KL.certainly_greater(Rational(1)) && cc.x_KL.certainly_less(cc.x_G)))
                return false;
        }
        return true;
    });

    return out;
}

// ------------------------------------------------------------ dimension

// digit-by-digit enumeration with the last window checked on completion;
// deliberately independent of the automaton construction
void brute_force_counts(const Word& prefix, WindowStrictness strictness, int n_max,
                        std::vector<BigInt>& counts) {
    const Alphabet a = prefix.alphabet();
    const int N = static_cast<int>(prefix.size());
    Word lower = prefix.reflected();
    counts.assign(static_cast<std::size_t>(n_max) + 1, BigInt(0));
    counts[0] = 1;
    std::vector<int> word;
    std::function<void()> walk = [&]() {
        int len = static_cast<int>(word.size());
        if (len >= N) {
            Word window(std::vector<int>(word.end() - N, word.end()), a);
            Ordering up = lex_compare_equal_length(window, prefix);
            Ordering low = lex_compare_equal_length(window, lower);
            if (strictness == WindowStrictness::inner) {
                if (up != Ordering::less || low != Ordering::greater) return;
            } else {
                if (up == Ordering::greater || low == Ordering::less) return;
            }
        }
        counts[static_cast<std::size_t>(len)] += 1;
        if (len == n_max) return;
        for (int d = 0; d <= a.max_digit; ++d) {
            word.push_back(d);
            walk();
            word.pop_back();
        }
    };
    word.reserve(static_cast<std::size_t>(n_max));
    for (int d = 0; d <= a.max_digit; ++d) {
        word.push_back(d);
        walk();
        word.pop_back();
    }
}

std::vector<Word> all_admissible_prefixes(Alphabet a, int max_len) {
    std::vector<Word> out;
    std::vector<int> cur;
    std::function<void()> gen = [&]() {
        if (!cur.empty()) {
            Word w(cur, a);
            if (is_admissible_prefix(w)) out.push_back(w);
        }
        if (static_cast<int>(cur.size()) == max_len) return;
        for (int d = 0; d <= a.max_digit; ++d) {
            cur.push_back(d);
            gen();
            cur.pop_back();
        }
    };
    gen();
    return out;
}

std::vector<CheckResult> suite_dimension(std::uint64_t seed) {
    std::vector<CheckResult> out;
    Suite s(out);

    s.check("dimension.count-oracle", [&](std::string& detail) {
        for (int m = 1; m <= 2; ++m) {
            for (const Word& prefix : all_admissible_prefixes(Alphabet(m), 6)) {
                for (WindowStrictness st : {WindowStrictness::inner, WindowStrictness::outer}) {
                    LexShiftAutomaton auto_ = LexShiftAutomaton::build(prefix, st);
                    std::vector<BigInt> brute;
                    brute_force_counts(prefix, st, 12, brute);
                    for (int n = 0; n <= 12; ++n) {
                        if (auto_.count_words(n) != brute[static_cast<std::size_t>(n)]) {
                            std::ostringstream os;
                            os << "mismatch at M=" << m << " prefix=" << format_word(prefix)
                               << " n=" << n;
                            detail = os.str();
                            return false;
                        }
                    }
                }
            }
        }
        return true;
    });

    s.check("dimension.inner-within-outer", [&](std::string&) {
        SplitMix64 rng(seed + 31);
        for (int i = 0; i < 40; ++i) {
            Alphabet a(1 + rng.below(2));
            Rational q = random_rational(rng, Rational(12, 10), Rational(a.size()));
            AlphaInfo alpha = alpha_info(PrecisionReal::from_rational(q), 10, a);
            if (static_cast<int>(alpha.prefix.size()) < 10) continue;
            LexShiftAutomaton inner = LexShiftAutomaton::build(alpha.prefix, WindowStrictness::inner);
            LexShiftAutomaton outer = LexShiftAutomaton::build(alpha.prefix, WindowStrictness::outer);
            for (int n = 1; n <= 14; ++n)
                if (inner.count_words(n) > outer.count_words(n)) return false;
        }
        return true;
    });

    s.check("dimension.bracket-valid", [&](std::string&) {
        for (const char* qs : {"1.62", "1.71", "1.80", "1.85", "1.92", "1.99"}) {
            DimensionEstimate e = dim_Uq(PrecisionReal::from_decimal(qs), Alphabet(1), 14, 40);
            if (!(0 <= e.lower && e.lower <= e.upper && e.upper <= 1)) return false;
        }
        return true;
    });

    s.check("dimension.N-brackets-intersect", [&](std::string&) {
        for (const char* qs : {"1.85", "1.9", "1.95", "2.0"}) {
            DimensionEstimate small = dim_Uq(PrecisionReal::from_decimal(qs), Alphabet(1), 12, 40);
            DimensionEstimate big = dim_Uq(PrecisionReal::from_decimal(qs), Alphabet(1), 16, 48);
            if (big.lower > small.upper || small.lower > big.upper) return false;
        }
        return true;
    });

    s.check("dimension.psi-monotone-brackets", [&](std::string&) {
        std::vector<Rational> grid;
        for (int i = 0; i < 16; ++i) grid.push_back(Rational(16, 10) + Rational(4, 10) * i / 15);
        auto rows = staircase_samples(StaircaseKind::psi, Alphabet(1), grid, 14, 40, 2);
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = i + 1; j < rows.size(); ++j)
                if (rows[i].lower > rows[j].upper + 1e-12) return false;
        return true;
    });

    s.check("dimension.phi-delegates-to-psi", [&](std::string&) {
        for (const char* xs : {"0.7", "1.05", "1.2"}) {
            PrecisionReal x = PrecisionReal::from_decimal(xs);
            DimensionEstimate via_x = dim_Ux(x, Alphabet(1), 14, 40);
            DimensionEstimate via_q = dim_Uq(q_of_x(x, Alphabet(1)), Alphabet(1), 14, 40);
            if (via_x.lower != via_q.lower || via_x.upper != via_q.upper) return false;
        }
        return true;
    });

    return out;
}

// ------------------------------------------------------------- families

std::vector<CheckResult> suite_families(std::uint64_t seed) {
    std::vector<CheckResult> out;
    Suite s(out);
    Rational tol(1, pow_big(10, 12));

    s.check("families.witness-selfcheck", [&](std::string&) {
        PrecisionReal x = PrecisionReal::from_decimal("1.4");
        auto fam = golden_tail_family(x, Alphabet(1), 8, tol, 64);
        if (fam.size() < 3) return false;
        for (const auto& w : fam)
            if (!witness_self_check(w, x, tol)) return false;
        PrecisionReal y = PrecisionReal::from_decimal("0.5");
        auto dense = dense_family(y, Alphabet(1), 2, 5, seed, tol, 64);
        if (dense.size() != 5) return false;
        for (const auto& w : dense)
            if (!witness_self_check(w, y, tol)) return false;
        return true;
    });

    s.check("families.golden-bases-increasing", [&](std::string&) {
        PrecisionReal x = PrecisionReal::from_decimal("1.4");
        auto fam = golden_tail_family(x, Alphabet(1), 8, tol, 64);
        PrecisionReal q_g = golden_ratio_base(Alphabet(1));
        PrecisionReal q_x = q_of_x(x, Alphabet(1));
        for (std::size_t i = 0; i < fam.size(); ++i) {
            if (!(fam[i].base.lo() > q_g.hi() && fam[i].base.hi() < q_x.lo())) return false;
            if (i && !(fam[i].base.lo() > fam[i - 1].base.hi())) return false;
        }
        return true;
    });

    s.check("families.classify-thresholds", [&](std::string&) {
        CriticalConstants cc = critical_constants(Alphabet(1), tol);
        Regime prev = Regime::full_dim;
        for (int g = 10; g <= 200; ++g) {
            PrecisionReal x = PrecisionReal::from_rational(Rational(g, 100));
            RegimeClassification rc = classify(x, Alphabet(1), cc);
            // regimes may only march forward as x grows
            if (static_cast<int>(rc.regime) < static_cast<int>(prev)) return false;
            // and must agree with direct threshold comparison
            Regime expect;
            if (x.certified_compare(PrecisionReal::from_int(1)).value_or(1) <= 0)
                expect = Regime::full_dim;
            else if (x.hi() < cc.x_KL.lo())
                expect = Regime::positive_dim;
            else if (x.hi() < cc.x_G.lo())
                expect = Regime::countable;
            else
                expect = Regime::singleton;
            if (rc.regime != expect) return false;
            prev = rc.regime;
        }
        return true;
    });

    s.check("families.violated-is-permanent", [&](std::string&) {
        PrecisionReal x = PrecisionReal::from_int(2);
        auto shallow = enumerate_Ux(x, Alphabet(1), 48, 20);
        auto deep = enumerate_Ux(x, Alphabet(1), 48, 44);
        for (std::size_t i = 0; i < shallow.size(); ++i)
            if (shallow[i].verdict == ScanVerdict::violated &&
                deep[i].verdict != ScanVerdict::violated)
                return false;
        return true;
    });

    s.check("families.Ux-monotone-in-x", [&](std::string&) {
        PrecisionReal x = PrecisionReal::from_decimal("1.4");
        auto fam = golden_tail_family(x, Alphabet(1), 6, tol, 64);
        if (fam.empty()) return false;
        for (const char* ys : {"1.2", "1.05"}) {
            PrecisionReal y = PrecisionReal::from_decimal(ys);
            for (const auto& w : fam) {
                PrecisionReal beta = invert_base(w.expansion, y, tol);
                if (!(beta.certainly_greater(Rational(1)) && beta.certainly_less(Rational(2))))
                    return false;
                if (is_unique_expansion(w.expansion, beta, 64) != Uniqueness::unique) return false;
            }
        }
        return true;
    });

    return out;
}

// ------------------------------------------------------------ thue-morse

std::vector<CheckResult> suite_thue_morse(std::uint64_t) {
    std::vector<CheckResult> out;
    Suite s(out);

    s.check("tm.first-digits", [&](std::string&) {
        const int expect[8] = {0, 1, 1, 0, 1, 0, 0, 1};
        for (int i = 0; i < 8; ++i)
            if (tau(static_cast<std::uint64_t>(i)) != expect[i]) return false;
        return true;
    });

    s.check("tm.doubling-identity", [&](std::string&) {
        for (int n = 0; n <= 12; ++n) {
            int len = 1 << n;
            Word head = thue_morse_prefix(len);
            Word next_block = head.reflected().plus_one();
            for (int i = 0; i < len; ++i)
                if (tau(static_cast<std::uint64_t>(len + i + 1)) != next_block.at(static_cast<std::size_t>(i)))
                    return false;
        }
        return true;
    });

    s.check("tm.window-inequalities", [&](std::string&) {
        for (int n = 0; n <= 8; ++n) {
            int len = 1 << n;
            Word w = thue_morse_prefix(len);
            for (int i = 0; i < len; ++i) {
                Word mid = w.suffix_from(static_cast<std::size_t>(i)); // tau_{i+1}..tau_{2^n}
                Word ref = w.prefix(static_cast<std::size_t>(len - i)).reflected();
                Word upper = w.prefix(static_cast<std::size_t>(len - i));
                if (lex_compare_equal_length(ref, mid) != Ordering::less) return false;
                if (lex_compare_equal_length(mid, upper) == Ordering::greater) return false;
            }
        }
        return true;
    });

    return out;
}

// -------------------------------------------------------------- isolated

std::vector<CheckResult> suite_isolated(std::uint64_t) {
    std::vector<CheckResult> out;
    Suite s(out);
    Rational tol(1, pow_big(10, 12));

    s.check("iso.member-star-families", [&](std::string& detail) {
        for (int n = 1; n <= 5; ++n)
            for (int k = 1; k <= 5; ++k)
                if (!verify_member_star(c_family(n, k), n)) {
                    detail = "c(" + std::to_string(n) + "," + std::to_string(k) + ")";
                    return false;
                }
        for (int n = 2; n <= 5; ++n)
            for (int k = 1; k <= 5; ++k)
                if (!verify_member_star(d_family(n, k), n)) {
                    detail = "d(" + std::to_string(n) + "," + std::to_string(k) + ")";
                    return false;
                }
        Alphabet a(1);
        return !verify_member_star(EventuallyPeriodicWord::periodic(Word({1}, a)), 1);
    });

    s.check("iso.pi-chain", [&](std::string&) {
        for (int n = 1; n <= 4; ++n) {
            PrecisionReal qn = bifurcation_base(n, tol).q;
            PrecisionReal qn1 = bifurcation_base(n + 1, tol).q;
            PrecisionReal z = pi_q(c_family_limit(n), qn);
            PrecisionReal prev_hi;
            for (int k = 1; k <= 6; ++k) {
                EventuallyPeriodicWord w = c_family(n, k);
                PrecisionReal hi = pi_q(w, qn);
                PrecisionReal lo1 = pi_q(c_family(n, k + 1), qn1);
                if (!(lo1.hi() < hi.lo())) return false;   // overlap of consecutive covers
                if (!(hi.hi() < z.lo())) return false;      // increasing toward z_n
                if (k > 1 && !(hi.lo() > prev_hi.hi())) return false;
                prev_hi = hi;
            }
        }
        return true;
    });

    s.check("iso.z-endpoints", [&](std::string&) {
        PrecisionReal z1 = z_point(1, tol);
        PrecisionReal xg = golden_ratio_base(Alphabet(1)); // equals M/(q_G-1) for M=1
        Rational err = z1.value() - xg.value();
        if (err < 0) err = -err;
        if (err > Rational(1, pow_big(10, 8))) return false;
        PrecisionReal prev = z1;
        for (int n = 2; n <= 6; ++n) {
            PrecisionReal z = z_point(n, tol);
            if (!(z.hi() < prev.lo())) return false;
            prev = z;
        }
        if (!(prev.hi() < Rational(105, 100))) return false;
        for (int n = 1; n <= 6; ++n)
            if (!(c_family(n, 1) == c_family_limit(n + 1))) return false;
        return true;
    });

    s.check("iso.certificate-reverify", [&](std::string&) {
        auto cert = isolate(PrecisionReal::from_decimal("1.5"), 6, 8, tol);
        if (!cert || cert->family != CertificateFamily::c_family) return false;
        if (!certificate_self_check(*cert, tol)) return false;
        PrecisionReal z2 = z_point(2, tol);
        auto dcert = isolate(z2, 6, 10, tol);
        if (!dcert || dcert->family != CertificateFamily::d_family) return false;
        return certificate_self_check(*dcert, tol);
    });

    s.check("iso.neighborhood-scan", [&](std::string& detail) {
        PrecisionReal x = PrecisionReal::from_decimal("1.5");
        auto cert = isolate(x, 6, 8, tol);
        if (!cert) return false;
        // adjacent members of the same family bracket the certified base;
        // between them (minus a hole around p itself) everything must refute
        PrecisionReal p_next = invert_base(c_family(cert->n, cert->k + 1), x, tol);
        PrecisionReal qn = bifurcation_base(cert->n, tol).q;
        Rational left = std::max(Rational(qn.hi() + (cert->p.lo() - qn.hi()) / 2),
                                 Rational(cert->p.lo() - (p_next.lo() - cert->p.hi()) / 2));
        Rational right = cert->p.hi() + (p_next.lo() - cert->p.hi()) / 2;
        Rational hole = (right - left) / 16;
        int depth = cert->match_length + 16;
        auto left_rows = enumerate_Ux(x, Alphabet(1), 12, depth, left, cert->p.lo() - hole);
        auto right_rows = enumerate_Ux(x, Alphabet(1), 12, depth, cert->p.hi() + hole,
                                       right);
        int stray = 0;
        for (const auto& r : left_rows)
            if (r.verdict == ScanVerdict::candidate) ++stray;
        for (const auto& r : right_rows)
            if (r.verdict == ScanVerdict::candidate) ++stray;
        if (stray) detail = std::to_string(stray) + " unrefuted cells";
        return stray == 0;
    });

    return out;
}

} // namespace

std::vector<std::string> verify_suite_names() {
    return {"words", "expansion", "solver", "dimension", "families", "thue-morse", "isolated"};
}

std::vector<CheckResult> run_verify_suite(const std::string& name, std::uint64_t seed) {
    if (name == "words") return suite_words(seed);
    if (name == "expansion") return suite_expansion(seed);
    if (name == "solver") return suite_solver(seed);
    if (name == "dimension") return suite_dimension(seed);
    if (name == "families") return suite_families(seed);
    if (name == "thue-morse") return suite_thue_morse(seed);
    if (name == "isolated") return suite_isolated(seed);
    throw DomainError("unknown verify suite: " + name);
}

} // namespace univoque
