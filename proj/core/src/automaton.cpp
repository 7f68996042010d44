#include "univoque/automaton.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>

#include "univoque/errors.hpp"

namespace univoque {

namespace {

// longest proper border of each prefix (1-based lengths), border[0] unused
std::vector<int> kmp_borders(const std::vector<int>& w) {
    std::vector<int> border(w.size() + 1, 0);
    for (std::size_t i = 1; i < w.size(); ++i) {
        int b = border[i];
        while (b > 0 && w[static_cast<std::size_t>(b)] != w[i]) b = border[static_cast<std::size_t>(b)];
        border[i + 1] = (w[static_cast<std::size_t>(b)] == w[i]) ? b + 1 : 0;
    }
    return border;
}

struct PatternTables {
    std::vector<int> word;              // the bound word
    std::vector<std::vector<int>> next; // next[j][c]: match length after digit c
    // viol[j][c]: largest j' on the border chain of j with c beyond the
    // pattern digit at j' (strictly above for the upper bound, strictly
    // below for the lower bound), or -1
    std::vector<std::vector<int>> viol;
};

PatternTables make_tables(const std::vector<int>& w, int digits, bool upper_side) {
    int n = static_cast<int>(w.size());
    std::vector<int> border = kmp_borders(w);
    PatternTables t;
    t.word = w;
    t.next.assign(static_cast<std::size_t>(n) + 1, std::vector<int>(static_cast<std::size_t>(digits), 0));
    t.viol.assign(static_cast<std::size_t>(n) + 1, std::vector<int>(static_cast<std::size_t>(digits), -1));
    for (int j = 0; j <= n; ++j) {
        for (int c = 0; c < digits; ++c) {
            // match extension
            if (j < n && w[static_cast<std::size_t>(j)] == c) {
                t.next[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)] = j + 1;
            } else if (j == 0) {
                t.next[0][static_cast<std::size_t>(c)] = 0;
            } else {
                t.next[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)] =
                    t.next[static_cast<std::size_t>(border[static_cast<std::size_t>(j)])][static_cast<std::size_t>(c)];
            }
            // violation on the border chain
            int v = -1;
            if (j < n) {
                bool beyond = upper_side ? (c > w[static_cast<std::size_t>(j)])
                                          : (c < w[static_cast<std::size_t>(j)]);
                if (beyond) v = j;
            }
            if (v < 0 && j > 0)
                v = t.viol[static_cast<std::size_t>(border[static_cast<std::size_t>(j)])][static_cast<std::size_t>(c)];
            t.viol[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)] = v;
        }
    }
    return t;
}

} // namespace

LexShiftAutomaton LexShiftAutomaton::build(const Word& alpha_prefix, WindowStrictness strictness) {
    if (alpha_prefix.empty())
        throw DomainError("build_automaton: empty alpha prefix");
    if (!is_admissible_prefix(alpha_prefix))
        throw DomainError("build_automaton: alpha prefix is not admissible");

    const Alphabet alphabet = alpha_prefix.alphabet();
    const int digits = alphabet.size();
    const int window = static_cast<int>(alpha_prefix.size());
    PatternTables up = make_tables(alpha_prefix.digits(), digits, true);
    PatternTables low = make_tables(alpha_prefix.reflected().digits(), digits, false);

    // state: (upper match, lower match, countdown), countdown 0 = no pending
    using Key = std::tuple<int, int, int>;
    std::map<Key, int> index;
    std::vector<Key> states;
    auto intern = [&](const Key& k) {
        auto [it, inserted] = index.emplace(k, static_cast<int>(states.size()));
        if (inserted) states.push_back(k);
        return it->second;
    };
    intern({0, 0, 0});

    LexShiftAutomaton a;
    a.alphabet_ = alphabet;
    a.window_ = window;
    a.strictness_ = strictness;

    for (std::size_t s = 0; s < states.size(); ++s) {
        a.trans_.emplace_back(static_cast<std::size_t>(digits), -1);
        auto [ma, mb, pending] = states[s];
        for (int c = 0; c < digits; ++c) {
            int maturity = -1; // steps until the earliest bad window completes
            auto fold = [&](int v) {
                if (v < 0) return;
                int m = window - 1 - v;
                if (maturity < 0 || m < maturity) maturity = m;
            };
            fold(up.viol[static_cast<std::size_t>(ma)][static_cast<std::size_t>(c)]);
            fold(low.viol[static_cast<std::size_t>(mb)][static_cast<std::size_t>(c)]);
            if (pending > 0 && (maturity < 0 || pending - 1 < maturity))
                maturity = pending - 1;
            if (maturity == 0) continue; // a complete window went out of bounds

            int na = up.next[static_cast<std::size_t>(ma)][static_cast<std::size_t>(c)];
            int nb = low.next[static_cast<std::size_t>(mb)][static_cast<std::size_t>(c)];
            if (strictness == WindowStrictness::inner && (na == window || nb == window))
                continue; // the window equals a bound, which strictness forbids

            int id = intern({na, nb, maturity < 0 ? 0 : maturity});
            a.trans_[s][static_cast<std::size_t>(c)] = id;
        }
    }
    return a;
}

BigInt LexShiftAutomaton::count_words(int n) const {
    if (n < 0) throw DomainError("count_words: negative length");
    std::vector<BigInt> cur(trans_.size(), BigInt(0));
    cur[0] = 1;
    for (int step = 0; step < n; ++step) {
        std::vector<BigInt> nxt(trans_.size(), BigInt(0));
        for (std::size_t s = 0; s < trans_.size(); ++s) {
            if (cur[s] == 0) continue;
            for (int t : trans_[s])
                if (t >= 0) nxt[static_cast<std::size_t>(t)] += cur[s];
        }
        cur.swap(nxt);
    }
    BigInt total = 0;
    for (const BigInt& v : cur) total += v;
    return total;
}

namespace {

// iterative Tarjan over the transition graph
std::vector<int> strongly_connected_components(const std::vector<std::vector<int>>& trans,
                                               int& scc_count) {
    int n = static_cast<int>(trans.size());
    std::vector<int> idx(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0),
        comp(static_cast<std::size_t>(n), -1);
    std::vector<bool> on_stack(static_cast<std::size_t>(n), false);
    std::vector<int> stack;
    int counter = 0;
    scc_count = 0;

    struct Frame { int v; std::size_t edge; };
    for (int root = 0; root < n; ++root) {
        if (idx[static_cast<std::size_t>(root)] != -1) continue;
        std::vector<Frame> call;
        call.push_back({root, 0});
        idx[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = counter++;
        stack.push_back(root);
        on_stack[static_cast<std::size_t>(root)] = true;
        while (!call.empty()) {
            Frame& f = call.back();
            const auto& edges = trans[static_cast<std::size_t>(f.v)];
            bool descended = false;
            while (f.edge < edges.size()) {
                int w = edges[f.edge++];
                if (w < 0) continue;
                if (idx[static_cast<std::size_t>(w)] == -1) {
                    idx[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = counter++;
                    stack.push_back(w);
                    on_stack[static_cast<std::size_t>(w)] = true;
                    call.push_back({w, 0});
                    descended = true;
                    break;
                }
                if (on_stack[static_cast<std::size_t>(w)])
                    low[static_cast<std::size_t>(f.v)] =
                        std::min(low[static_cast<std::size_t>(f.v)], idx[static_cast<std::size_t>(w)]);
            }
            if (descended) continue;
            int v = f.v;
            call.pop_back();
            if (!call.empty())
                low[static_cast<std::size_t>(call.back().v)] =
                    std::min(low[static_cast<std::size_t>(call.back().v)], low[static_cast<std::size_t>(v)]);
            if (low[static_cast<std::size_t>(v)] == idx[static_cast<std::size_t>(v)]) {
                for (;;) {
                    int w = stack.back();
                    stack.pop_back();
                    on_stack[static_cast<std::size_t>(w)] = false;
                    comp[static_cast<std::size_t>(w)] = scc_count;
                    if (w == v) break;
                }
                ++scc_count;
            }
        }
    }
    return comp;
}

} // namespace

LexShiftAutomaton::EntropyBoundsDetail
LexShiftAutomaton::lambda_bounds(int iterations, const std::vector<int>& starts) const {
    EntropyBoundsDetail out;
    int n = state_count();
    std::vector<bool> reachable(static_cast<std::size_t>(n), false);
    {
        std::vector<int> todo = starts.empty() ? std::vector<int>{0} : starts;
        for (int s : todo) reachable[static_cast<std::size_t>(s)] = true;
        while (!todo.empty()) {
            int s = todo.back();
            todo.pop_back();
            for (int t : trans_[static_cast<std::size_t>(s)])
                if (t >= 0 && !reachable[static_cast<std::size_t>(t)]) {
                    reachable[static_cast<std::size_t>(t)] = true;
                    todo.push_back(t);
                }
        }
    }

    int scc_count = 0;
    std::vector<int> comp = strongly_connected_components(trans_, scc_count);

    for (int cid = 0; cid < scc_count; ++cid) {
        std::vector<int> members;
        for (int s = 0; s < n; ++s)
            if (comp[static_cast<std::size_t>(s)] == cid && reachable[static_cast<std::size_t>(s)])
                members.push_back(s);
        if (members.empty()) continue;
        // keep only components with an internal edge (a cycle)
        bool has_edge = false;
        for (int s : members)
            for (int t : trans_[static_cast<std::size_t>(s)])
                if (t >= 0 && comp[static_cast<std::size_t>(t)] == cid) has_edge = true;
        if (!has_edge) continue;

        std::vector<int> local(static_cast<std::size_t>(n), -1);
        for (std::size_t i = 0; i < members.size(); ++i)
            local[static_cast<std::size_t>(members[i])] = static_cast<int>(i);

        std::vector<BigInt> v(members.size(), BigInt(1));
        Rational best_lo(0), best_hi(-1);
        for (int it = 0; it < iterations; ++it) {
            std::vector<BigInt> w(members.size(), BigInt(0));
            for (std::size_t i = 0; i < members.size(); ++i)
                for (int t : trans_[static_cast<std::size_t>(members[i])]) {
                    if (t < 0) continue;
                    int li = local[static_cast<std::size_t>(t)];
                    if (li >= 0) w[i] += v[static_cast<std::size_t>(li)];
                }
            // Collatz-Wielandt: min and max of (Av)_i / v_i bracket lambda
            Rational lo(-1), hi(-1);
            for (std::size_t i = 0; i < members.size(); ++i) {
                if (v[i] == 0) { lo = 0; continue; } // degenerate, keep safe side
                Rational ratio(w[i], v[i]);
                if (lo < 0 || ratio < lo) lo = ratio;
                if (ratio > hi) hi = ratio;
            }
            if (lo > best_lo) best_lo = lo;
            if (best_hi < 0 || hi < best_hi) best_hi = hi;
            v.swap(w);
        }
        out.has_cycle = true;
        if (best_lo > out.lambda_lo) out.lambda_lo = best_lo;
        if (best_hi > out.lambda_hi) out.lambda_hi = best_hi;
    }
    return out;
}

LexShiftAutomaton::EntropyBounds LexShiftAutomaton::entropy_bounds(int iterations) const {
    EntropyBoundsDetail d = lambda_bounds(iterations, {});
    EntropyBounds out;
    if (!d.has_cycle) {
        out.empty_language = true; // finitely many admissible words only
        return out;
    }
    double base = alphabet().size();
    auto to_log = [&](const Rational& lambda, double slack) {
        if (lambda <= 1) return 0.0;
        double v = log_ratio(boost::multiprecision::numerator(lambda),
                             boost::multiprecision::denominator(lambda), base) + slack;
        return std::clamp(v, 0.0, 1.0);
    };
    out.lower = to_log(d.lambda_lo, -1e-12);
    out.upper = to_log(d.lambda_hi, 1e-12);
    if (out.lower > out.upper) out.lower = out.upper;
    return out;
}

double LexShiftAutomaton::entropy_estimate(int n_lo, int n_hi) const {
    if (!(n_hi > n_lo && n_lo >= 1))
        throw DomainError("entropy_estimate: need n_hi > n_lo >= 1");
    BigInt c_lo = count_words(n_lo);
    BigInt c_hi = count_words(n_hi);
    if (c_lo == 0 || c_hi == 0) return 0.0;
    double v = log_ratio(c_hi, c_lo, alphabet().size()) / (n_hi - n_lo);
    return std::clamp(v, 0.0, 1.0);
}

} // namespace univoque
