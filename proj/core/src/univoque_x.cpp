#include "univoque/univoque_x.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <set>
#include <thread>

#include "univoque/automaton.hpp"
#include "univoque/errors.hpp"

namespace univoque {

namespace {

Rational tight_tol(const Rational& tol) {
    Rational cap(1, pow_big(10, 40));
    return std::min(tol, cap);
}

// x - threshold as a certified sign; PrecisionError if not separable
int side_of(const PrecisionReal& x, const PrecisionReal& threshold, const char* name) {
    auto cmp = x.certified_compare(threshold);
    if (!cmp)
        throw PrecisionError(std::string("classify: x cannot be separated from ") + name +
                             " at the current precision");
    return *cmp;
}

} // namespace

RegimeClassification classify(const PrecisionReal& x, Alphabet alphabet,
                              const CriticalConstants& constants) {
    if (!x.certainly_greater(Rational(0)))
        throw DomainError("classify: x must be certainly > 0");
    RegimeClassification out;
    out.x = x;
    if (side_of(x, PrecisionReal::from_int(1), "1") <= 0) {
        out.regime = Regime::full_dim;
        return out;
    }
    if (side_of(x, constants.x_KL, "x_KL") < 0) {
        out.regime = Regime::positive_dim;
        return out;
    }
    if (side_of(x, constants.x_G, "x_G") < 0) {
        out.regime = Regime::countable;
        return out;
    }
    out.regime = Regime::singleton;
    PrecisionReal base = q_of_x(x, alphabet);
    EventuallyPeriodicWord top =
        EventuallyPeriodicWord::periodic(Word({alphabet.max_digit}, alphabet));
    out.witnesses.push_back({std::move(base), std::move(top), 64});
    return out;
}

std::vector<MemberWitness> golden_tail_family(const PrecisionReal& x, Alphabet alphabet,
                                              int k_max, const Rational& tol,
                                              int uniqueness_depth) {
    PrecisionReal q_g = golden_ratio_base(alphabet);
    PrecisionReal one = PrecisionReal::from_int(1);
    PrecisionReal x_g = PrecisionReal::from_int(alphabet.max_digit) / (q_g - one);
    if (!x.certainly_greater(Rational(1)))
        throw DomainError("golden_tail_family: x must be certainly > 1");
    auto cmp = x.certified_compare(x_g);
    if (!cmp || *cmp >= 0)
        throw DomainError("golden_tail_family: x must be certainly below M/(q_G - 1)");

    AlphaInfo golden_alpha = alpha_info(q_g, 64, alphabet);
    if (!golden_alpha.exact)
        throw PrecisionError("golden_tail_family: expansion of 1 at q_G did not close up");
    PrecisionReal q_x = q_of_x(x, alphabet);

    Rational t = tight_tol(tol);
    std::vector<MemberWitness> out;
    for (int k = 1; k <= k_max; ++k) {
        Word head = Word({alphabet.max_digit}, alphabet).repeated(k);
        EventuallyPeriodicWord w(head.concat(golden_alpha.exact->preperiod()),
                                 golden_alpha.exact->period());
        PrecisionReal p;
        try {
            p = invert_base(w, x, t);
        } catch (const DomainError&) {
            continue; // x outside the range of this family word
        }
        if (!(p.lo() > q_g.hi() && p.hi() < q_x.lo())) continue;
        if (is_unique_expansion(w, p, uniqueness_depth) != Uniqueness::unique) continue;
        out.push_back({std::move(p), std::move(w), uniqueness_depth});
    }
    return out;
}

namespace {

struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d49b939133111eULL;
        return z ^ (z >> 31);
    }
    int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
};

} // namespace

std::vector<MemberWitness> dense_family(const PrecisionReal& x, Alphabet alphabet,
                                        int j, int sample, std::uint64_t seed,
                                        const Rational& tol, int uniqueness_depth) {
    if (!(x.certainly_greater(Rational(0)) && x.certainly_less(Rational(1))))
        throw DomainError("dense_family: x must lie certainly inside (0, 1)");
    if (j < 1 || sample < 1) throw DomainError("dense_family: need j >= 1 and sample >= 1");

    const int m = alphabet.max_digit;
    PrecisionReal top_base = PrecisionReal::from_int(alphabet.size());
    ExpansionResult eps = quasi_greedy_expand(x, top_base, 4096, alphabet);
    if (!eps.periodic_form)
        throw PrecisionError("dense_family: quasi-greedy expansion of x in base M+1 "
                             "did not close up within the iteration cap");
    const EventuallyPeriodicWord& e = *eps.periodic_form;

    bool ends_in_tops = e.period().size() == 1 && e.period().at(0) == m;
    int N = 0, N_j = 0;
    Word connector({}, alphabet);
    if (ends_in_tops) {
        // expansion is e_1..e_N M^inf with e_N < M
        N = static_cast<int>(e.preperiod().size());
        if (N < 1) throw DomainError("dense_family: x has expansion M^inf");
        N_j = N + j;
    } else {
        connector = Word({0, m}, alphabet);
        // smallest N >= 3 with digit N-2 positive (1-based)
        N = 3;
        while (e.digit(static_cast<std::uint64_t>(N) - 3) == 0) ++N;
        // the j-th admissible N_j: positive digit right after the prefix and
        // enough positive / non-M digits in front
        int found = 0;
        for (int cand = N + 1; found < j; ++cand) {
            if (cand > 100000)
                throw PrecisionError("dense_family: no admissible window length found");
            if (e.digit(static_cast<std::uint64_t>(N + cand)) == 0) continue;
            int positive = 0, below_top = 0;
            for (int i = 0; i < cand; ++i) {
                int d = e.digit(static_cast<std::uint64_t>(i));
                if (d > 0) ++positive;
                if (d < m) ++below_top;
            }
            if (positive >= N + 1 && below_top >= N + 1) {
                ++found;
                N_j = cand;
            }
        }
    }

    Word prefix = e.prefix(static_cast<std::size_t>(N + N_j)).concat(connector);
    Rational t = tight_tol(tol);
    SplitMix64 rng(seed);
    std::vector<MemberWitness> out;
    std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
    int attempts = 0;
    while (static_cast<int>(out.size()) < sample) {
        if (++attempts > sample * 50 + 200)
            throw PrecisionError("dense_family: could not assemble enough verified witnesses");
        // periodic tail of alternating blocks M^u 0^v, every run strictly
        // below N_j (also across the wrap, since the tail starts with an
        // M-block and ends with a 0-block)
        Word tail_period({}, alphabet);
        int blocks = 1 + rng.below(3);
        for (int bi = 0; bi < blocks; ++bi) {
            int u = 1 + rng.below(std::max(1, N_j - 1));
            int v = 1 + rng.below(std::max(1, N_j - 1));
            tail_period = tail_period.concat(Word({m}, alphabet).repeated(u))
                              .concat(Word({0}, alphabet).repeated(v));
        }
        EventuallyPeriodicWord w(prefix, tail_period);
        auto key = std::make_pair(w.preperiod().digits(), w.period().digits());
        if (!seen.insert(key).second) continue;
        PrecisionReal p;
        try {
            p = invert_base(w, x, t);
        } catch (const DomainError&) {
            continue;
        }
        if (!(p.certainly_greater(Rational(1)) && p.certainly_less(Rational(m + 1)))) continue;
        if (is_unique_expansion(w, p, uniqueness_depth) != Uniqueness::unique) continue;
        out.push_back({std::move(p), std::move(w), uniqueness_depth});
    }
    return out;
}

std::vector<ScanRow> enumerate_Ux(const PrecisionReal& x, Alphabet alphabet,
                                  int grid_steps, int depth,
                                  std::optional<Rational> from, std::optional<Rational> to,
                                  int jobs) {
    if (!x.certainly_greater(Rational(0)))
        throw DomainError("enumerate_Ux: x must be certainly > 0");
    if (grid_steps < 1) throw DomainError("enumerate_Ux: need at least one step");
    PrecisionReal qx = q_of_x(x, alphabet);
    Rational lo = from ? *from : Rational(1);
    Rational hi = to ? *to : qx.value();
    if (!(hi > lo)) throw DomainError("enumerate_Ux: empty base range");

    Rational width = (hi - lo) / grid_steps;
    std::vector<ScanRow> rows(static_cast<std::size_t>(grid_steps));
    std::atomic<std::size_t> cursor{0};
    bool last_touches_qx = !to || *to >= qx.value();

    auto worker = [&]() {
        for (;;) {
            std::size_t i = cursor.fetch_add(1);
            if (i >= rows.size()) return;
            Rational a = lo + width * static_cast<long>(i);
            Rational b = (i + 1 == rows.size()) ? hi : lo + width * static_cast<long>(i + 1);
            rows[i].q_lo = a;
            rows[i].q_hi = b;
            if (last_touches_qx && i + 1 == rows.size()) {
                rows[i].verdict = ScanVerdict::candidate; // interval owning q_x
                continue;
            }
            Rational mid = (a + b) / 2;
            if (mid <= 1) {
                rows[i].verdict = ScanVerdict::candidate;
                continue;
            }
            PrecisionReal q = PrecisionReal::from_rational(mid);
            ScanVerdict verdict = ScanVerdict::candidate;
            try {
                ExpansionResult phi = quasi_greedy_expand(x, q, depth, alphabet);
                AlphaInfo alpha = alpha_info(q, depth, alphabet);
                if (uniqueness_violation_to_depth(phi.digits, alpha))
                    verdict = ScanVerdict::violated;
            } catch (const DomainError&) {
                // x has no expansion at this base: certainly not a member
                verdict = ScanVerdict::violated;
            } catch (const PrecisionError&) {
                verdict = ScanVerdict::candidate; // cannot refute here
            }
            rows[i].verdict = verdict;
        }
    };
    int thread_count = std::max(1, jobs);
    if (thread_count == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < thread_count; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return rows;
}

bool witness_self_check(const MemberWitness& w, const PrecisionReal& x, const Rational& tol) {
    Rational t = tight_tol(tol) / 2;
    PrecisionReal again;
    try {
        again = invert_base(w.expansion, x, t);
    } catch (const DomainError&) {
        return false;
    }
    if (!again.overlaps(w.base)) return false;
    if ((again.value() - w.base.value()) > 2 * tol || (w.base.value() - again.value()) > 2 * tol)
        return false;
    return is_unique_expansion(w.expansion, again, 2 * w.uniqueness_depth) == Uniqueness::unique;
}

HolderReport holder_check(const PrecisionReal& x, const PrecisionReal& a,
                          const PrecisionReal& b, Alphabet alphabet,
                          const std::vector<MemberWitness>& witnesses) {
    Rational top = alphabet.max_digit + 1;
    if (!(a.certainly_greater(Rational(1)) && a.certainly_less(b) && b.certainly_less(top)))
        throw DomainError("holder_check: need 1 < a < b < M+1");
    const int m = alphabet.max_digit;
    const double base = alphabet.size();

    // first index where the expansion of 1 in base b drops below M^i
    AlphaInfo ab = alpha_info(b, 256, alphabet);
    int i0 = 0;
    for (std::size_t i = 0; i < ab.prefix.size(); ++i) {
        if (ab.prefix.at(i) < m) {
            i0 = static_cast<int>(i) + 1;
            break;
        }
    }
    if (i0 == 0) throw PrecisionError("holder_check: could not locate i0 for base b");

    double av = to_double(a.value()), bv = to_double(b.value()), xv = to_double(x.value());
    double log_a = std::log(av) / std::log(base);
    double log_b = std::log(bv) / std::log(base);
    double c1 = std::pow((av - 1) * xv / (m * bv * bv), 1.0 / log_a);
    double c2 = std::pow(m * std::pow(bv, i0) / ((av - 1) * (av - 1)), 1.0 / log_b);

    HolderReport report;
    report.c1 = c1;
    report.c2 = c2;
    report.i0 = i0;

    std::vector<const MemberWitness*> in_range;
    for (const auto& w : witnesses) {
        if (!(w.base.certainly_greater(a.value()) && w.base.certainly_less(b.value()))) continue;
        if (is_unique_expansion(w.expansion, w.base, w.uniqueness_depth) != Uniqueness::unique)
            throw DomainError("holder_check: witness does not verify as a unique expansion");
        in_range.push_back(&w);
    }
    for (std::size_t i = 0; i < in_range.size(); ++i) {
        for (std::size_t jdx = i + 1; jdx < in_range.size(); ++jdx) {
            const MemberWitness& w1 = *in_range[i];
            const MemberWitness& w2 = *in_range[jdx];
            HolderPair pair;
            pair.p1 = w1.base.value();
            pair.p2 = w2.base.value();
            pair.distance = std::fabs(to_double(pair.p1 - pair.p2));
            pair.rho = to_double(metric_rho(w1.expansion, w2.expansion));
            pair.lower_side = c1 * std::pow(pair.distance, 1.0 / log_a);
            pair.upper_side = c2 * std::pow(pair.distance, 1.0 / log_b);
            pair.pass = pair.lower_side <= pair.rho && pair.rho <= pair.upper_side;
            report.all_pass = report.all_pass && pair.pass;
            report.pairs.push_back(pair);
        }
    }
    return report;
}

namespace {

// states of `automaton` reachable by length-L prefixes whose value cylinder
// meets (fully_inside: is contained in) the window
std::vector<int> window_survivors(const LexShiftAutomaton& automaton, const PrecisionReal& q,
                                  const Rational& wlo, const Rational& whi, int L,
                                  bool fully_inside) {
    struct Node {
        int state;
        Rational sum;   // value of the prefix read so far
        Rational scale; // q^-len
    };
    const int m = automaton.alphabet().max_digit;
    Rational qv = q.value();
    Rational u = Rational(1) / qv;
    Rational tail_factor = Rational(m) / (qv - 1);
    std::vector<Node> frontier{{automaton.initial_state(), Rational(0), Rational(1)}};
    const std::size_t cap = 20000;
    for (int step = 0; step < L; ++step) {
        std::vector<Node> next;
        for (const Node& node : frontier) {
            for (int c = 0; c <= m; ++c) {
                int t = automaton.next(node.state, c);
                if (t < 0) continue;
                Node child{t, node.sum + node.scale * u * c, node.scale * u};
                Rational cyl_lo = child.sum;
                Rational cyl_hi = child.sum + child.scale * tail_factor;
                if (fully_inside) {
                    if (cyl_lo > wlo && cyl_hi < whi) next.push_back(child);
                    else if (cyl_hi > wlo && cyl_lo < whi) next.push_back(child); // still refinable
                } else {
                    if (cyl_hi > wlo && cyl_lo < whi) next.push_back(child);
                }
                if (next.size() > cap) break;
            }
            if (next.size() > cap) break;
        }
        frontier.swap(next);
        if (frontier.empty()) break;
    }
    std::set<int> states;
    for (const Node& node : frontier) {
        if (fully_inside) {
            Rational cyl_lo = node.sum;
            Rational cyl_hi = node.sum + node.scale * tail_factor;
            if (!(cyl_lo > wlo && cyl_hi < whi)) continue;
        }
        states.insert(node.state);
    }
    return {states.begin(), states.end()};
}

} // namespace

std::vector<LocalDimRow> local_dim_experiment(const PrecisionReal& x, const PrecisionReal& q,
                                              Alphabet alphabet,
                                              const std::vector<Rational>& deltas,
                                              int N, int n) {
    PrecisionReal qx = q_of_x(x, alphabet);
    if (!(q.certainly_greater(Rational(1)) && q.lo() <= qx.hi()))
        throw DomainError("local_dim_experiment: q must lie in (1, q_x]");

    AlphaInfo info = alpha_info(q, N, alphabet);
    if (static_cast<int>(info.prefix.size()) < N)
        throw PrecisionError("local_dim_experiment: alpha prefix undecidable");
    LexShiftAutomaton inner = LexShiftAutomaton::build(info.prefix, WindowStrictness::inner);
    LexShiftAutomaton outer = LexShiftAutomaton::build(info.prefix, WindowStrictness::outer);

    double base = alphabet.size();
    double log_q = std::log(to_double(q.value())) / std::log(base);

    std::vector<LocalDimRow> rows;
    for (const Rational& delta : deltas) {
        if (delta <= 0) throw DomainError("local_dim_experiment: deltas must be positive");
        LocalDimRow row;
        row.delta = delta;

        // vertical side: scan candidates in (q - delta, q + delta)
        Rational scan_lo = std::max(Rational(q.lo() - delta), Rational(1) + Rational(1, 1000000));
        Rational scan_hi = std::min(Rational(q.hi() + delta), qx.value());
        row.scan_steps = 24;
        if (scan_hi > scan_lo) {
            auto scan = enumerate_Ux(x, alphabet, row.scan_steps, 40, scan_lo, scan_hi, 1);
            for (const auto& r : scan)
                if (r.verdict == ScanVerdict::candidate) ++row.scan_candidates;
        } else {
            row.scan_steps = 0;
        }

        // horizontal side: window-restricted dimension bracket around x
        Rational wlo = x.lo() - delta, whi = x.hi() + delta;
        double L_guess = to_double(Rational(1) / delta);
        int L = std::clamp(static_cast<int>(std::log(std::max(2.0, L_guess)) /
                                            std::log(to_double(q.value()))) + 2,
                           4, 40);
        std::vector<int> keep_lo = window_survivors(inner, q, wlo, whi, L, true);
        std::vector<int> keep_hi = window_survivors(outer, q, wlo, whi, L, false);
        auto lam_lo = inner.lambda_bounds(n, keep_lo);
        auto lam_hi = outer.lambda_bounds(n, keep_hi);
        auto to_dim = [&](const Rational& lambda, bool up) {
            if (lambda <= 1) return 0.0;
            double v = log_ratio(boost::multiprecision::numerator(lambda),
                                 boost::multiprecision::denominator(lambda), base);
            return std::clamp(v / log_q + (up ? 1e-12 : -1e-12), 0.0, 1.0);
        };
        row.slice_lower = keep_lo.empty() || !lam_lo.has_cycle ? 0.0 : to_dim(lam_lo.lambda_lo, false);
        row.slice_upper = keep_hi.empty() || !lam_hi.has_cycle ? 0.0 : to_dim(lam_hi.lambda_hi, true);
        if (row.slice_lower > row.slice_upper) row.slice_lower = row.slice_upper;
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace univoque
