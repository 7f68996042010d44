#include <doctest.h>

#include "univoque/errors.hpp"
#include "univoque/verify.hpp"
#include "univoque/words.hpp"

using namespace univoque;

TEST_SUITE_BEGIN("words");

TEST_CASE("reflection complements digits") {
    Alphabet m1(1), m2(2);
    CHECK(parse_word("1101", m1).reflected() == parse_word("0010", m1));
    CHECK(parse_sequence("(12)", m2).reflected() == parse_sequence("(10)", m2));
}

TEST_CASE("last-digit increments respect the alphabet") {
    Alphabet m1(1);
    CHECK(parse_word("110", m1).plus_one() == parse_word("111", m1));
    CHECK(parse_word("11", m1).minus_one() == parse_word("10", m1));
    CHECK_THROWS_AS(parse_word("111", m1).plus_one(), DomainError);
    CHECK_THROWS_AS(parse_word("110", m1).minus_one(), DomainError);
    CHECK_THROWS_AS(Word({}, m1).plus_one(), DomainError);
}

TEST_CASE("lexicographic comparison is exact and representation independent") {
    Alphabet m1(1), m2(2);
    CHECK(lex_compare(parse_sequence("(10)", m1), parse_sequence("11", m1)) == Ordering::less);
    // same sequence written two ways
    EventuallyPeriodicWord a = parse_sequence("(1100)", m1);
    EventuallyPeriodicWord b(parse_word("11", m1), parse_word("0011", m1));
    CHECK(a == b);
    CHECK(lex_compare(a, b) == Ordering::equal);
    // (21)^inf and 2(12)^inf spell the same sequence, so they compare equal
    CHECK(lex_compare(parse_sequence("(21)", m2), parse_sequence("2(12)", m2)) ==
          Ordering::equal);
    CHECK(lex_compare(parse_sequence("(21)", m2), parse_sequence("2(11)", m2)) ==
          Ordering::greater);
}

TEST_CASE("canonical form has a primitive period and minimal preperiod") {
    Alphabet m1(1);
    // 1(0101)^inf = (10)^inf once the period is primitive and absorbed
    EventuallyPeriodicWord w(parse_word("1", m1), parse_word("0101", m1));
    CHECK(w.period().size() == 2);
    CHECK(w.preperiod().empty());
    CHECK(w == parse_sequence("(10)", m1));
    EventuallyPeriodicWord v(parse_word("10", m1), parse_word("10", m1));
    CHECK(v.preperiod().empty());
    CHECK(v == parse_sequence("(10)", m1));
    // a genuinely minimal preperiod survives
    EventuallyPeriodicWord u(parse_word("1", m1), parse_word("0", m1));
    CHECK(u.preperiod().size() == 1);
    // while one that spells a purely periodic sequence collapses
    EventuallyPeriodicWord t(parse_word("0", m1), parse_word("10", m1));
    CHECK(t == parse_sequence("(01)", m1));
}

TEST_CASE("shift drops digits and renormalizes") {
    Alphabet m1(1);
    CHECK(shift(parse_sequence("11", m1), 1) == parse_sequence("1", m1));
    CHECK(shift(parse_sequence("(10)", m1), 2) == parse_sequence("(10)", m1));
    CHECK(shift(parse_sequence("1(100)", m1), 3) == parse_sequence("(010)", m1));
    CHECK(shift(parse_sequence("1(100)", m1), 0) == parse_sequence("1(100)", m1));
}

TEST_CASE("metric is the reciprocal alphabet power of the first disagreement") {
    Alphabet m1(1), m2(2);
    CHECK(metric_rho(parse_sequence("10", m1), parse_sequence("(1)", m1)) == Rational(1, 4));
    EventuallyPeriodicWord a = parse_sequence("1(10)", m1);
    CHECK(metric_rho(a, a) == 0);
    CHECK(metric_rho(parse_sequence("012", m2), parse_sequence("112", m2)) == Rational(1, 3));
}

TEST_CASE("self-admissibility of expansion-of-1 candidates") {
    Alphabet m1(1);
    CHECK(is_alpha_admissible(parse_sequence("(10)", m1)));
    CHECK(is_alpha_admissible(parse_sequence("(1100)", m1)));
    CHECK_FALSE(is_alpha_admissible(parse_sequence("(01)", m1)));
    CHECK_FALSE(is_alpha_admissible(parse_sequence("1", m1))); // ends in zeros
}

TEST_CASE("stream comparison is depth-qualified") {
    Alphabet m1(1);
    DigitStream a = DigitStream::from_word(parse_sequence("(10)", m1));
    DigitStream b = DigitStream::from_word(parse_sequence("(10)", m1));
    DepthVerdict v = lex_compare_to_depth(a, b, 32);
    CHECK_FALSE(v.decided);
    DigitStream c = DigitStream::from_word(parse_sequence("1(10)", m1));
    DepthVerdict w = lex_compare_to_depth(a, c, 32);
    CHECK(w.decided);
    CHECK(w.ordering == Ordering::less);
    CHECK(w.first_difference == 1);
}

TEST_CASE("text round trips") {
    Alphabet m1(1), m12(12);
    // formatting always emits the canonical representation
    CHECK(format_sequence(parse_sequence("11(01)", m1)) == "1(10)");
    CHECK(format_sequence(parse_sequence("1(10)", m1)) == "1(10)");
    CHECK(format_sequence(parse_sequence("11", m1)) == "11(0)");
    CHECK(format_sequence(parse_sequence("10,2,11(0,1)", m12)) == "10,2,11(0,1)");
    CHECK_THROWS_AS(parse_sequence("1(21)", m1), ParseError);
    CHECK_THROWS_AS(parse_sequence("1(", m1), ParseError);
    CHECK_THROWS_AS(parse_sequence("1()", m1), ParseError);
}

TEST_CASE("property suite") {
    for (const auto& r : run_verify_suite("words", 7)) {
        INFO(r.id, " ", r.detail);
        CHECK(r.pass);
    }
}

TEST_SUITE_END();
