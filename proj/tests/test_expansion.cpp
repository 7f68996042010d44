#include <doctest.h>

#include "univoque/base_solver.hpp"
#include "univoque/errors.hpp"
#include "univoque/expansion.hpp"
#include "univoque/verify.hpp"

using namespace univoque;

namespace {
const Alphabet m1(1);
PrecisionReal dec(const char* s) { return PrecisionReal::from_decimal(s); }
} // namespace

TEST_SUITE_BEGIN("expansion");

TEST_CASE("series evaluation in closed form") {
    CHECK(pi_q(parse_sequence("10", m1), PrecisionReal::from_int(2)).value() == Rational(1, 2));
    // golden base: q^2 = q + 1 forces the alternating series to 1 exactly
    PrecisionReal phi = golden_ratio_base(m1);
    PrecisionReal v = pi_q(parse_sequence("(10)", m1), phi);
    CHECK(v.exact().has_value());
    CHECK(v.value() == 1);
    CHECK(v.radius() == 0);
    // all-M sequence sums to M/(q-1)
    for (int m = 1; m <= 3; ++m) {
        Alphabet a(m);
        Rational q(17, 8);
        if (q > m + 1) q = Rational(2 * m + 1, 2);
        EventuallyPeriodicWord tops = EventuallyPeriodicWord::periodic(Word({m}, a));
        CHECK(pi_q_exact(tops, q) == Rational(m) / (q - 1));
    }
    CHECK_THROWS_AS(pi_q(parse_sequence("10", m1), PrecisionReal::from_int(1)), DomainError);
}

TEST_CASE("stream evaluation carries the truncation tail in its radius") {
    DigitStream ones([](std::uint64_t) { return 1; }, m1);
    PrecisionReal v = pi_q(ones, PrecisionReal::from_int(2), 40);
    CHECK(v.lo() <= 1);
    CHECK(v.hi() >= 1);
    CHECK(v.radius() <= Rational(1, BigInt(1) << 39));
}

TEST_CASE("greedy digits at the golden base terminate") {
    PrecisionReal phi = golden_ratio_base(m1);
    ExpansionResult r = greedy_expand(PrecisionReal::from_int(1), phi, 5, m1);
    CHECK(format_word(r.digits) == "11000");
    REQUIRE(r.periodic_form.has_value());
    CHECK(*r.periodic_form == parse_sequence("11", m1));
}

TEST_CASE("greedy digits in integer and rational bases") {
    CHECK(format_word(greedy_expand(PrecisionReal::from_int(1), PrecisionReal::from_int(2), 4, m1)
                          .digits) == "1111");
    CHECK(format_word(greedy_expand(PrecisionReal::from_int(1), dec("1.8"), 4, m1).digits) ==
          "1101");
}

TEST_CASE("quasi-greedy takes the boundary branch at the golden base") {
    PrecisionReal phi = golden_ratio_base(m1);
    ExpansionResult r = quasi_greedy_expand(PrecisionReal::from_int(1), phi, 6, m1);
    CHECK(format_word(r.digits) == "101010");
    REQUIRE(r.periodic_form.has_value());
    CHECK(*r.periodic_form == parse_sequence("(10)", m1));
}

TEST_CASE("quasi-greedy of 1 in base M+1 is all tops") {
    for (int m = 1; m <= 3; ++m) {
        Alphabet a(m);
        ExpansionResult r = quasi_greedy_expand(PrecisionReal::from_int(1),
                                                PrecisionReal::from_int(m + 1), 4, a);
        for (std::size_t i = 0; i < 4; ++i) CHECK(r.digits.at(i) == m);
    }
}

TEST_CASE("quasi-greedy of one half in base 2") {
    ExpansionResult r = quasi_greedy_expand(dec("0.5"), PrecisionReal::from_int(2), 4, m1);
    CHECK(format_word(r.digits) == "0111");
}

TEST_CASE("expansion preconditions") {
    CHECK_THROWS_AS(quasi_greedy_expand(PrecisionReal::from_int(0), dec("1.5"), 4, m1),
                    DomainError);
    CHECK_THROWS_AS(greedy_expand(dec("-0.1"), dec("1.5"), 4, m1), DomainError);
    CHECK_THROWS_AS(greedy_expand(dec("2.2"), PrecisionReal::from_int(2), 4, m1),
                    DomainError); // above M/(q-1)
    CHECK_THROWS_AS(greedy_expand(dec("0.5"), dec("1.0"), 4, m1), DomainError);
}

TEST_CASE("alpha prefixes") {
    CHECK(format_word(alpha_expansion(PrecisionReal::from_int(2), 5, m1).digits) == "11111");
    CHECK(format_word(alpha_expansion(golden_ratio_base(m1), 4, m1).digits) == "1010");
    KomornikLoretiBase kl = komornik_loreti_base(m1, Rational(1, pow_big(10, 18)));
    CHECK(format_word(alpha_expansion(kl.value, 8, m1).digits) == "11010011");
}

TEST_CASE("uniqueness verdicts are exact where the expansion of 1 closes up") {
    PrecisionReal phi = golden_ratio_base(m1);
    CHECK(is_unique_expansion(parse_sequence("(1)", m1), PrecisionReal::from_int(2)) ==
          Uniqueness::unique);
    CHECK(is_unique_expansion(parse_sequence("11", m1), phi) == Uniqueness::not_unique);
    CHECK(is_unique_expansion(parse_sequence("(10)", m1), phi) == Uniqueness::not_unique);
    CHECK(is_unique_expansion(parse_sequence("(10)", m1), dec("1.9")) == Uniqueness::unique);
    // 0^inf is everyone's expansion of 0
    CHECK(is_unique_expansion(parse_sequence("0", m1), dec("1.7")) == Uniqueness::unique);
}

TEST_CASE("residual bound invariant") {
    ExpansionResult r = greedy_expand(dec("0.8312"), dec("1.7311"), 20, m1);
    Rational partial = pi_q_exact(r.digits, parse_decimal("1.7311"));
    Rational err = parse_decimal("0.8312") - partial;
    if (err < 0) err = -err;
    Rational bound = Rational(1) * pow_rational(parse_decimal("1.7311"), -20) /
                     (parse_decimal("1.7311") - 1);
    CHECK(err <= bound + r.residual_bound.radius());
    CHECK(r.residual_bound.value() == err);
}

TEST_CASE("property suite") {
    for (const auto& r : run_verify_suite("expansion", 11)) {
        INFO(r.id, " ", r.detail);
        CHECK(r.pass);
    }
}

TEST_SUITE_END();
