#include "univoque/dimension.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "univoque/errors.hpp"

namespace univoque {

namespace {

Word alpha_prefix_or_throw(const PrecisionReal& q, int N, Alphabet alphabet) {
    AlphaInfo info = alpha_info(q, N, alphabet);
    if (static_cast<int>(info.prefix.size()) < N)
        throw PrecisionError("dimension: cannot pin the first digits of the expansion of 1 "
                             "at this base precision");
    return info.prefix;
}

} // namespace

DimensionEstimate dim_Uq(const PrecisionReal& q, Alphabet alphabet, int N, int n) {
    if (N < 1) throw DomainError("dim_Uq: N must be >= 1");
    Word prefix = alpha_prefix_or_throw(q, N, alphabet);
    LexShiftAutomaton inner = LexShiftAutomaton::build(prefix, WindowStrictness::inner);
    LexShiftAutomaton outer = LexShiftAutomaton::build(prefix, WindowStrictness::outer);
    auto ib = inner.entropy_bounds(n);
    auto ob = outer.entropy_bounds(n);
    DimensionEstimate est;
    est.lower = ib.empty_language ? 0.0 : ib.lower;
    est.upper = ob.empty_language ? 0.0 : ob.upper;
    est.lower = std::min(est.lower, est.upper);
    est.N = N;
    est.n = n;
    est.q = q;
    return est;
}

DimensionEstimate dim_Ux(const PrecisionReal& x, Alphabet alphabet, int N, int n) {
    return dim_Uq(q_of_x(x, alphabet), alphabet, N, n);
}

DimensionEstimate dim_real_Uq(const PrecisionReal& q, Alphabet alphabet, int N, int n) {
    DimensionEstimate sym = dim_Uq(q, alphabet, N, n);
    double base = alphabet.size();
    double log_lo = std::log(to_double(q.lo())) / std::log(base);
    double log_hi = std::log(to_double(q.hi())) / std::log(base);
    DimensionEstimate est = sym;
    // dividing by log q: the smaller log inflates, the larger deflates
    est.lower = sym.lower == 0.0 ? 0.0 : std::clamp(sym.lower / log_hi, 0.0, 1.0);
    est.upper = sym.upper == 0.0 ? 0.0 : std::clamp(sym.upper / log_lo * (1 + 1e-12), 0.0, 1.0);
    if (est.lower > est.upper) est.lower = est.upper;
    return est;
}

std::vector<StaircaseRow> staircase_samples(StaircaseKind kind, Alphabet alphabet,
                                            const std::vector<Rational>& grid,
                                            int N, int n, int jobs) {
    Rational top = alphabet.max_digit + 1;
    for (const Rational& g : grid) {
        if (kind == StaircaseKind::psi && !(g > 1 && g <= top))
            throw DomainError("staircase: psi grid points must lie in (1, M+1]");
        if (kind == StaircaseKind::phi && !(g > 0))
            throw DomainError("staircase: phi grid points must be positive");
    }
    std::vector<Rational> sorted = grid;
    std::sort(sorted.begin(), sorted.end());

    std::vector<StaircaseRow> rows(sorted.size());
    std::atomic<std::size_t> cursor{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t i = cursor.fetch_add(1);
            if (i >= sorted.size()) return;
            PrecisionReal v = PrecisionReal::from_rational(sorted[i]);
            DimensionEstimate est = kind == StaircaseKind::psi
                                        ? dim_Uq(v, alphabet, N, n)
                                        : dim_Ux(v, alphabet, N, n);
            rows[i] = {sorted[i], est.lower, est.upper};
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

} // namespace univoque
