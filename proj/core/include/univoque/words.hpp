#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "univoque/rational.hpp"

namespace univoque {

// Digit alphabet {0, 1, ..., max_digit}.
struct Alphabet {
    int max_digit = 1;

    explicit Alphabet(int m = 1);
    int size() const { return max_digit + 1; }
    bool valid(int digit) const { return digit >= 0 && digit <= max_digit; }

    friend bool operator==(const Alphabet&, const Alphabet&) = default;
};

enum class Ordering { less, equal, greater };

// Finite digit string over an alphabet; may be empty.
class Word {
public:
    Word() = default;
    Word(std::vector<int> digits, Alphabet alphabet);

    const Alphabet& alphabet() const { return alphabet_; }
    std::size_t size() const { return digits_.size(); }
    bool empty() const { return digits_.empty(); }
    int at(std::size_t i) const { return digits_.at(i); }
    const std::vector<int>& digits() const { return digits_; }

    Word reflected() const;      // digitwise d -> M - d
    Word plus_one() const;       // last digit + 1; last digit must be < M
    Word minus_one() const;      // last digit - 1; last digit must be > 0
    Word concat(const Word& tail) const;
    Word repeated(int times) const;
    Word prefix(std::size_t len) const;
    Word suffix_from(std::size_t start) const;

    friend bool operator==(const Word&, const Word&) = default;

private:
    std::vector<int> digits_;
    Alphabet alphabet_{1};
};

// Lexicographic comparison of finite words under the convention
// that a word stands for itself padded with 0^inf.
Ordering lex_compare(const Word& a, const Word& b);

// Plain left-to-right comparison of equal-length words.
Ordering lex_compare_equal_length(const Word& a, const Word& b);

// Eventually periodic digit sequence preperiod (period)^inf, kept in
// canonical form: the period is primitive and the preperiod is minimal
// (its last digit differs from the last period digit). Canonical form makes
// equality representation-independent.
class EventuallyPeriodicWord {
public:
    // Canonicalizes; the period must be nonempty.
    EventuallyPeriodicWord(Word preperiod, Word period);

    // Purely periodic sequence word^inf.
    static EventuallyPeriodicWord periodic(Word period);
    // Finite word followed by 0^inf.
    static EventuallyPeriodicWord from_finite(Word w);

    const Word& preperiod() const { return preperiod_; }
    const Word& period() const { return period_; }
    const Alphabet& alphabet() const { return alphabet_; }

    int digit(std::uint64_t i) const; // 0-based
    Word prefix(std::size_t len) const;

    EventuallyPeriodicWord reflected() const;
    EventuallyPeriodicWord shifted(std::uint64_t n) const;

    bool is_zero() const;      // 0^inf
    bool ends_in_zeros() const; // period == (0)

    // Number of distinct tails sigma^j, j >= 0.
    std::size_t tail_count() const { return preperiod_.size() + period_.size(); }

    friend bool operator==(const EventuallyPeriodicWord&, const EventuallyPeriodicWord&) = default;

private:
    Word preperiod_;
    Word period_;
    Alphabet alphabet_{1};
};

// Exact comparison (decides within |pre_a| v |pre_b| + lcm of period lengths + 1 digits).
Ordering lex_compare(const EventuallyPeriodicWord& a, const EventuallyPeriodicWord& b);

// sigma^n(a) == sigma^n(a) convenience
inline EventuallyPeriodicWord shift(const EventuallyPeriodicWord& a, std::uint64_t n) {
    return a.shifted(n);
}

// Infinite digit sequence given by a generator; index is 0-based.
class DigitStream {
public:
    DigitStream(std::function<int(std::uint64_t)> gen, Alphabet alphabet);
    static DigitStream from_word(const EventuallyPeriodicWord& w);

    int digit(std::uint64_t i) const;
    const Alphabet& alphabet() const { return alphabet_; }
    DigitStream shifted(std::uint64_t n) const;
    DigitStream reflected() const;
    Word prefix(std::size_t len) const;

private:
    std::function<int(std::uint64_t)> gen_;
    Alphabet alphabet_{1};
};

struct DepthVerdict {
    Ordering ordering;   // Ordering::equal means "no difference found within depth"
    bool decided;        // true when a difference was found
    std::uint64_t first_difference; // 0-based index, valid when decided
};

// Compare two streams digit by digit up to `depth` digits.
DepthVerdict lex_compare_to_depth(const DigitStream& a, const DigitStream& b, std::uint64_t depth);

// rho(a, b) = (M+1)^-(i+1) where i is the 0-based first disagreement; exact.
Rational metric_rho(const EventuallyPeriodicWord& a, const EventuallyPeriodicWord& b);
// Depth-bounded variant for streams; returns 0 when no disagreement is found.
Rational metric_rho(const DigitStream& a, const DigitStream& b, std::uint64_t depth);

// sigma^n(s) <= s for all n >= 0 and s does not end in 0^inf
// (the self-admissibility characterizing quasi-greedy expansions of 1).
bool is_alpha_admissible(const EventuallyPeriodicWord& s);

// Word-level variant used for automaton prefixes: checks the truncated
// shift inequalities sigma^i(w) <= w over the overlap and w_1 >= 1.
bool is_admissible_prefix(const Word& w);

// Text format: "pre(period)"; a bare finite string means that word
// followed by (0). Digits are single characters for M <= 9, otherwise
// comma-separated.
EventuallyPeriodicWord parse_sequence(const std::string& text, Alphabet alphabet);
std::string format_sequence(const EventuallyPeriodicWord& w);
std::string format_word(const Word& w);
Word parse_word(const std::string& text, Alphabet alphabet);

} // namespace univoque
