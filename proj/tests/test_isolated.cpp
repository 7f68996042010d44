#include <doctest.h>

#include <cmath>

#include "univoque/errors.hpp"
#include "univoque/thue_morse.hpp"
#include "univoque/verify.hpp"

using namespace univoque;

namespace {
const Alphabet m1(1);
const Rational tol12(1, pow_big(10, 12));
} // namespace

TEST_SUITE_BEGIN("isolated");

TEST_CASE("Thue-Morse digits") {
    const int expect[8] = {0, 1, 1, 0, 1, 0, 0, 1};
    for (int i = 0; i < 8; ++i) CHECK(tau(static_cast<std::uint64_t>(i)) == expect[i]);
    CHECK(format_word(thue_morse_prefix(8)) == "11010011");
}

TEST_CASE("bifurcation bases interpolate toward the Komornik-Loreti constant") {
    BifurcationBase b1 = bifurcation_base(1, tol12);
    CHECK(format_word(b1.alpha_word) == "10");
    CHECK(std::fabs(to_double(b1.q.value()) - 1.6180339887) < 1e-9);

    BifurcationBase b2 = bifurcation_base(2, tol12);
    CHECK(format_word(b2.alpha_word) == "1100");
    // independent oracle: q^3 - 2 q^2 + q - 1 = 0 on (1.7, 1.8)
    double lo = 1.7, hi = 1.8;
    for (int i = 0; i < 200; ++i) {
        double mid = (lo + hi) / 2;
        double f = mid * mid * mid - 2 * mid * mid + mid - 1;
        (f < 0 ? lo : hi) = mid;
    }
    CHECK(std::fabs(to_double(b2.q.value()) - (lo + hi) / 2) < 1e-9);

    // the periodized alpha word is self-admissible and maps to 1 at q_n,
    // which pins it as the expansion of 1 there (the digit recursion itself
    // cannot resolve the boundary branches at an interval base)
    EventuallyPeriodicWord aw2 = EventuallyPeriodicWord::periodic(b2.alpha_word);
    CHECK(is_alpha_admissible(aw2));
    PrecisionReal back = pi_q(aw2, b2.q);
    CHECK(back.lo() <= 1);
    CHECK(back.hi() >= 1);

    // the gaps shrink doubly exponentially, so compare as rationals
    KomornikLoretiBase kl = komornik_loreti_base(m1, tol12);
    PrecisionReal prev_q = b1.q;
    for (int n = 2; n <= 8; ++n) {
        PrecisionReal qn = bifurcation_base(n, tol12).q;
        CHECK(qn.lo() > prev_q.hi());
        prev_q = qn;
    }
    Rational gap = kl.value.value() - prev_q.value();
    if (gap < 0) gap = -gap;
    CHECK(gap < Rational(1, 1000));
}

TEST_CASE("family words instantiate the doubling formula") {
    CHECK(c_family(1, 1) == parse_sequence("11(01)", m1));
    CHECK(c_family_limit(1) == parse_sequence("(1)", m1));
    // n=2, k=2: 11 01 01 (0011)^inf, canonicalized
    EventuallyPeriodicWord c22 = c_family(2, 2);
    for (std::size_t i = 0; i < 6; ++i) {
        int expect[] = {1, 1, 0, 1, 0, 1};
        CHECK(c22.digit(i) == expect[i]);
    }
    for (std::size_t i = 6; i < 14; ++i) {
        int tail[] = {0, 0, 1, 1, 0, 0, 1, 1};
        CHECK(c22.digit(i) == tail[i - 6]);
    }
    // d(2,1) = 11 01 1 (0011)^inf
    EventuallyPeriodicWord d21 = d_family(2, 1);
    int dexpect[] = {1, 1, 0, 1, 1, 0, 0, 1, 1, 0, 0, 1, 1};
    for (std::size_t i = 0; i < 13; ++i) CHECK(d21.digit(i) == dexpect[i]);
    CHECK_THROWS_AS(d_family(1, 1), DomainError);
    CHECK_THROWS_AS(c_family(1, 0), DomainError);
}

TEST_CASE("d-family decreases to the c-family limit") {
    for (int n = 2; n <= 4; ++n) {
        for (int k = 1; k <= 6; ++k)
            CHECK(lex_compare(d_family(n, k + 1), d_family(n, k)) == Ordering::less);
        // word-level limit: the k-block prefix agrees with c(n, inf) ever longer
        EventuallyPeriodicWord limit = c_family_limit(n);
        EventuallyPeriodicWord deep = d_family(n, 6);
        for (std::size_t i = 0; i < (static_cast<std::size_t>(1) << (n - 1)) * 7; ++i)
            CHECK(deep.digit(i) == limit.digit(i));
    }
}

TEST_CASE("membership in the level difference set") {
    CHECK(verify_member_star(c_family(1, 1), 1));
    CHECK(verify_member_star(d_family(2, 3), 2));
    CHECK_FALSE(verify_member_star(parse_sequence("(1)", m1), 1));
    // wrong level fails through the tail condition
    CHECK_FALSE(verify_member_star(c_family(3, 2), 2));
}

TEST_CASE("interval covers overlap and telescope") {
    auto rows = iso_intervals(4, 6, tol12);
    CHECK(rows.size() == 4 * 6 + 3 * 6);
    for (const auto& r : rows) CHECK(r.lo.hi() < r.hi.lo());
    // chain overlap within each level
    for (int n = 1; n <= 4; ++n) {
        const IsoInterval* prev = nullptr;
        for (const auto& r : rows) {
            if (r.family != 'C' || r.n != n) continue;
            if (prev) CHECK(r.lo.hi() < prev->hi.lo());
            prev = &r;
        }
    }
}

TEST_CASE("seam points and the golden endpoint") {
    PrecisionReal z1 = z_point(1, tol12);
    CHECK(std::fabs(to_double(z1.value()) - 1.6180339887) < 1e-8);
    PrecisionReal prev = z1;
    for (int n = 2; n <= 6; ++n) {
        PrecisionReal z = z_point(n, tol12);
        CHECK(z.hi() < prev.lo());
        prev = z;
    }
    CHECK(to_double(prev.value()) < 1.05);
    for (int n = 1; n <= 6; ++n) CHECK(c_family(n, 1) == c_family_limit(n + 1));
}

TEST_CASE("certificates for interior points, seam points and the singleton regime") {
    auto c = isolate(PrecisionReal::from_decimal("1.5"), 6, 8, tol12);
    REQUIRE(c.has_value());
    CHECK(c->family == CertificateFamily::c_family);
    CHECK(c->n == 1);
    CHECK(c->match_length ==
          static_cast<int>(c->expansion.preperiod().size()) + 2 * (1 << c->n));
    CHECK(certificate_self_check(*c, tol12));

    PrecisionReal z2 = z_point(2, tol12);
    auto d = isolate(z2, 6, 10, tol12);
    REQUIRE(d.has_value());
    CHECK(d->family == CertificateFamily::d_family);
    CHECK(certificate_self_check(*d, tol12));

    auto s = isolate(PrecisionReal::from_int(2), 6, 8, tol12);
    REQUIRE(s.has_value());
    CHECK(s->family == CertificateFamily::singleton);
    CHECK(s->p.value() == Rational(3, 2));
    CHECK(s->expansion == parse_sequence("(1)", m1));

    CHECK_THROWS_AS(isolate(PrecisionReal::from_decimal("0.8"), 4, 4, tol12), DomainError);
}

TEST_CASE("property suite") {
    for (const auto& r : run_verify_suite("thue-morse", 0)) {
        INFO(r.id, " ", r.detail);
        CHECK(r.pass);
    }
    for (const auto& r : run_verify_suite("isolated", 0)) {
        INFO(r.id, " ", r.detail);
        CHECK(r.pass);
    }
}

TEST_SUITE_END();
