#include "univoque/thue_morse.hpp"

#include <algorithm>
#include <bit>
#include <atomic>
#include <map>
#include <mutex>
#include <thread>

#include "univoque/errors.hpp"

namespace univoque {

namespace {

const Alphabet kBinary(1);

Rational tight_tol(const Rational& tol) {
    // family-word verification needs the base pinned well below the
    // lexicographic decision margins at depth 64
    Rational t = tol;
    Rational cap(1, pow_big(10, 40));
    return std::min(t, cap);
}

} // namespace

int tau(std::uint64_t i) {
    return std::popcount(i) & 1;
}

Word thue_morse_prefix(int len) {
    if (len < 0) throw DomainError("thue_morse_prefix: negative length");
    std::vector<int> digits(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i)
        digits[static_cast<std::size_t>(i)] = tau(static_cast<std::uint64_t>(i) + 1);
    return Word(std::move(digits), kBinary);
}

DigitStream thue_morse_stream() {
    return DigitStream([](std::uint64_t i) { return tau(i + 1); }, kBinary);
}

Word bifurcation_alpha_word(int n) {
    if (n < 1) throw DomainError("bifurcation_alpha_word: n must be >= 1");
    if (n > 24) throw DomainError("bifurcation_alpha_word: n too large");
    return thue_morse_prefix(1 << n).minus_one();
}

namespace {

// repeated solves of the same polynomial root dominate the interval covers,
// so keep the certified brackets around
std::map<std::pair<int, Rational>, PrecisionReal> g_base_cache;
std::mutex g_base_cache_mutex;

} // namespace

BifurcationBase bifurcation_base(int n, const Rational& tol) {
    Word aw = bifurcation_alpha_word(n);
    Rational t = tight_tol(tol);
    {
        std::lock_guard<std::mutex> lock(g_base_cache_mutex);
        auto it = g_base_cache.find({n, t});
        if (it != g_base_cache.end()) return {n, std::move(aw), it->second};
    }
    EventuallyPeriodicWord alpha = EventuallyPeriodicWord::periodic(aw);
    PrecisionReal q = invert_base(alpha, PrecisionReal::from_int(1), t);
    {
        std::lock_guard<std::mutex> lock(g_base_cache_mutex);
        g_base_cache.emplace(std::make_pair(n, t), q);
    }
    return {n, std::move(aw), std::move(q)};
}

EventuallyPeriodicWord c_family(int n, int k) {
    if (n < 1 || k < 1) throw DomainError("c_family: need n >= 1 and k >= 1");
    Word head = thue_morse_prefix(1 << (n - 1));
    Word block = head.reflected().plus_one();
    Word tail_period = thue_morse_prefix(1 << n).reflected().plus_one();
    Word pre = head.concat(block.repeated(k));
    return EventuallyPeriodicWord(std::move(pre), std::move(tail_period));
}

EventuallyPeriodicWord c_family_limit(int n) {
    if (n < 1) throw DomainError("c_family_limit: n must be >= 1");
    Word head = thue_morse_prefix(1 << (n - 1));
    Word block = head.reflected().plus_one();
    return EventuallyPeriodicWord(std::move(head), std::move(block));
}

EventuallyPeriodicWord d_family(int n, int k) {
    if (n < 2 || k < 1) throw DomainError("d_family: need n >= 2 and k >= 1");
    Word head = thue_morse_prefix(1 << (n - 1));
    Word block = head.reflected().plus_one();
    Word bridge = thue_morse_prefix(1 << (n - 2)).reflected().plus_one();
    Word tail_period = thue_morse_prefix(1 << n).reflected().plus_one();
    Word pre = head.concat(block.repeated(k)).concat(bridge);
    return EventuallyPeriodicWord(std::move(pre), std::move(tail_period));
}

namespace {

bool is_rotation_of(const Word& a, const Word& b) {
    if (a.size() != b.size()) return false;
    std::size_t len = a.size();
    for (std::size_t r = 0; r < len; ++r) {
        bool match = true;
        for (std::size_t i = 0; i < len && match; ++i)
            if (a.at((i + r) % len) != b.at(i)) match = false;
        if (match) return true;
    }
    return false;
}

} // namespace

bool verify_member_star(const EventuallyPeriodicWord& w, int n) {
    if (n < 1) throw DomainError("verify_member_star: n must be >= 1");
    // membership at level n+1: the window conditions fire only at positions
    // whose digit leaves room on that side (the unconditional two-sided
    // sandwich is too strong: shifts inside the repeated block of the k = 1
    // level start with a run of ones and legitimately exceed the bound)
    EventuallyPeriodicWord upper = EventuallyPeriodicWord::periodic(bifurcation_alpha_word(n + 1));

    std::size_t tails = w.tail_count();
    for (std::size_t j = 1; j <= tails; ++j) {
        int prev = w.digit(j - 1);
        EventuallyPeriodicWord t = w.shifted(j);
        if (prev < 1 && lex_compare(t, upper) != Ordering::less) return false;
        if (prev > 0 && lex_compare(t.reflected(), upper) != Ordering::less) return false;
    }

    // the tail must be the level-n alpha word or its reflection (up to shift)
    EventuallyPeriodicWord level = EventuallyPeriodicWord::periodic(bifurcation_alpha_word(n));
    return is_rotation_of(w.period(), level.period()) ||
           is_rotation_of(w.period(), level.reflected().period());
}

std::vector<IsoInterval> iso_intervals(int n_max, int k_max, const Rational& tol, int jobs) {
    if (n_max < 1 || k_max < 1) throw DomainError("iso_intervals: need n_max, k_max >= 1");
    std::vector<PrecisionReal> q(static_cast<std::size_t>(n_max) + 2);
    for (int n = 1; n <= n_max + 1; ++n)
        q[static_cast<std::size_t>(n)] = bifurcation_base(n, tol).q;

    struct Job { int n, k; char family; };
    std::vector<Job> plan;
    for (int n = 1; n <= n_max; ++n)
        for (int k = 1; k <= k_max; ++k) plan.push_back({n, k, 'C'});
    for (int n = 2; n <= n_max; ++n)
        for (int k = 1; k <= k_max; ++k) plan.push_back({n, k, 'D'});

    std::vector<IsoInterval> out(plan.size());
    std::atomic<std::size_t> cursor{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t i = cursor.fetch_add(1);
            if (i >= plan.size()) return;
            const Job& j = plan[i];
            EventuallyPeriodicWord w =
                j.family == 'C' ? c_family(j.n, j.k) : d_family(j.n, j.k);
            out[i] = {pi_q(w, q[static_cast<std::size_t>(j.n) + 1]),
                      pi_q(w, q[static_cast<std::size_t>(j.n)]), j.n, j.k, j.family};
        }
    };
    int threads = std::max(1, jobs);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return out;
}

PrecisionReal z_point(int n, const Rational& tol) {
    BifurcationBase b = bifurcation_base(n, tol);
    return pi_q(c_family_limit(n), b.q);
}

namespace {

bool certainly_inside(const PrecisionReal& x, const PrecisionReal& lo, const PrecisionReal& hi) {
    return x.lo() > lo.hi() && x.hi() < hi.lo();
}

std::optional<IsolationCertificate> build_certificate(
    const PrecisionReal& x, int n, int k, CertificateFamily family,
    EventuallyPeriodicWord word, const PrecisionReal& q_lo, const PrecisionReal& q_hi,
    const Rational& tol) {
    PrecisionReal p = invert_base(word, x, tight_tol(tol));
    if (!(p.lo() > q_lo.hi() && p.hi() < q_hi.lo())) return std::nullopt;
    if (!verify_member_star(word, n)) return std::nullopt;
    if (is_unique_expansion(word, p, 64) != Uniqueness::unique) return std::nullopt;
    int match_length = static_cast<int>(word.preperiod().size()) + 2 * (1 << n);
    return IsolationCertificate{x, std::move(p), n, k, family, std::move(word), match_length};
}

} // namespace

std::optional<IsolationCertificate> isolate(const PrecisionReal& x, int n_max, int k_max,
                                            const Rational& tol) {
    if (!x.certainly_greater(Rational(1)))
        throw DomainError("isolate: x must be certainly > 1");

    PrecisionReal x_G = golden_ratio_base(kBinary); // M=1: x_G = M/(q_G-1) = q_G
    auto cmp = x.certified_compare(x_G);
    if (!cmp)
        throw PrecisionError("isolate: x cannot be separated from M/(q_G-1)");
    if (*cmp >= 0) {
        // singleton regime: the only base is q_x and it is trivially isolated
        PrecisionReal p = q_of_x(x, kBinary);
        EventuallyPeriodicWord ones = EventuallyPeriodicWord::periodic(Word({1}, kBinary));
        if (is_unique_expansion(ones, p, 64) != Uniqueness::unique) return std::nullopt;
        return IsolationCertificate{x, std::move(p), 0, 0, CertificateFamily::singleton,
                                    std::move(ones), 0};
    }

    std::vector<PrecisionReal> q(static_cast<std::size_t>(n_max) + 2);
    for (int n = 1; n <= n_max + 1; ++n)
        q[static_cast<std::size_t>(n)] = bifurcation_base(n, tol).q;

    for (int n = 1; n <= n_max; ++n) {
        const PrecisionReal& qn = q[static_cast<std::size_t>(n)];
        const PrecisionReal& qn1 = q[static_cast<std::size_t>(n) + 1];
        for (int k = 1; k <= k_max; ++k) {
            EventuallyPeriodicWord w = c_family(n, k);
            if (!certainly_inside(x, pi_q(w, qn1), pi_q(w, qn))) continue;
            if (auto cert = build_certificate(x, n, k, CertificateFamily::c_family,
                                              std::move(w), qn, qn1, tol))
                return cert;
        }
    }
    // seam points between consecutive covers need the d-family patch
    for (int n = 2; n <= n_max; ++n) {
        const PrecisionReal& qn = q[static_cast<std::size_t>(n)];
        const PrecisionReal& qn1 = q[static_cast<std::size_t>(n) + 1];
        for (int k = 1; k <= k_max; ++k) {
            EventuallyPeriodicWord w = d_family(n, k);
            if (!certainly_inside(x, pi_q(w, qn1), pi_q(w, qn))) continue;
            if (auto cert = build_certificate(x, n, k, CertificateFamily::d_family,
                                              std::move(w), qn, qn1, tol))
                return cert;
        }
    }
    return std::nullopt;
}

bool certificate_self_check(const IsolationCertificate& cert, const Rational& tol) {
    if (cert.family == CertificateFamily::singleton) {
        PrecisionReal p = q_of_x(cert.x, kBinary);
        if (!p.overlaps(cert.p)) return false;
        return is_unique_expansion(cert.expansion, p, 128) == Uniqueness::unique;
    }
    Rational t2 = tight_tol(tol) * tight_tol(tol);
    PrecisionReal p = invert_base(cert.expansion, cert.x, t2);
    if (!p.overlaps(cert.p)) return false;
    if (!verify_member_star(cert.expansion, cert.n)) return false;
    if (is_unique_expansion(cert.expansion, p, 128) != Uniqueness::unique) return false;
    // the expansion must end in the reflected level-n alpha word: implied by
    // verify_member_star, so just re-check the base sits in the component
    PrecisionReal qn = bifurcation_base(cert.n, t2).q;
    PrecisionReal qn1 = bifurcation_base(cert.n + 1, t2).q;
    return p.lo() > qn.hi() && p.hi() < qn1.lo();
}

} // namespace univoque
