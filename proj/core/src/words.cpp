#include "univoque/words.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "univoque/errors.hpp"

namespace univoque {

Alphabet::Alphabet(int m) : max_digit(m) {
    if (m < 1) throw DomainError("Alphabet: M must be >= 1");
}

Word::Word(std::vector<int> digits, Alphabet alphabet)
    : digits_(std::move(digits)), alphabet_(alphabet) {
    for (int d : digits_)
        if (!alphabet_.valid(d)) throw DomainError("Word: digit out of range");
}

Word Word::reflected() const {
    std::vector<int> out(digits_.size());
    for (std::size_t i = 0; i < digits_.size(); ++i)
        out[i] = alphabet_.max_digit - digits_[i];
    return Word(std::move(out), alphabet_);
}

Word Word::plus_one() const {
    if (empty()) throw DomainError("plus_one: empty word");
    if (digits_.back() >= alphabet_.max_digit)
        throw DomainError("plus_one: last digit is already M");
    std::vector<int> out = digits_;
    ++out.back();
    return Word(std::move(out), alphabet_);
}

Word Word::minus_one() const {
    if (empty()) throw DomainError("minus_one: empty word");
    if (digits_.back() <= 0)
        throw DomainError("minus_one: last digit is already 0");
    std::vector<int> out = digits_;
    --out.back();
    return Word(std::move(out), alphabet_);
}

Word Word::concat(const Word& tail) const {
    if (!(alphabet_ == tail.alphabet_) && !tail.empty() && !empty())
        throw DomainError("concat: alphabet mismatch");
    std::vector<int> out = digits_;
    out.insert(out.end(), tail.digits_.begin(), tail.digits_.end());
    return Word(std::move(out), empty() ? tail.alphabet_ : alphabet_);
}

Word Word::repeated(int times) const {
    if (times < 0) throw DomainError("repeated: negative count");
    std::vector<int> out;
    out.reserve(digits_.size() * static_cast<std::size_t>(times));
    for (int t = 0; t < times; ++t)
        out.insert(out.end(), digits_.begin(), digits_.end());
    return Word(std::move(out), alphabet_);
}

Word Word::prefix(std::size_t len) const {
    len = std::min(len, digits_.size());
    return Word(std::vector<int>(digits_.begin(), digits_.begin() + static_cast<long>(len)), alphabet_);
}

Word Word::suffix_from(std::size_t start) const {
    start = std::min(start, digits_.size());
    return Word(std::vector<int>(digits_.begin() + static_cast<long>(start), digits_.end()), alphabet_);
}

Ordering lex_compare(const Word& a, const Word& b) {
    std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        int da = i < a.size() ? a.at(i) : 0;
        int db = i < b.size() ? b.at(i) : 0;
        if (da != db) return da < db ? Ordering::less : Ordering::greater;
    }
    return Ordering::equal;
}

Ordering lex_compare_equal_length(const Word& a, const Word& b) {
    if (a.size() != b.size()) throw DomainError("lex_compare_equal_length: length mismatch");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a.at(i) != b.at(i)) return a.at(i) < b.at(i) ? Ordering::less : Ordering::greater;
    return Ordering::equal;
}

namespace {

// Smallest p such that w is (w_1..w_p)^(|w|/p); |w| % p == 0.
std::size_t primitive_root_length(const std::vector<int>& w) {
    std::size_t n = w.size();
    for (std::size_t p = 1; p <= n / 2; ++p) {
        if (n % p != 0) continue;
        bool ok = true;
        for (std::size_t i = p; i < n && ok; ++i)
            if (w[i] != w[i - p]) ok = false;
        if (ok) return p;
    }
    return n;
}

} // namespace

EventuallyPeriodicWord::EventuallyPeriodicWord(Word preperiod, Word period)
    : alphabet_(period.alphabet()) {
    if (period.empty()) throw DomainError("EventuallyPeriodicWord: empty period");
    if (!preperiod.empty() && !(preperiod.alphabet() == period.alphabet()))
        throw DomainError("EventuallyPeriodicWord: alphabet mismatch");

    std::vector<int> pre = preperiod.digits();
    std::vector<int> per = period.digits();

    std::size_t root = primitive_root_length(per);
    per.resize(root);

    // absorb preperiod digits that merely repeat the rotated period
    while (!pre.empty() && pre.back() == per.back()) {
        std::rotate(per.begin(), per.end() - 1, per.end());
        pre.pop_back();
    }

    preperiod_ = Word(std::move(pre), alphabet_);
    period_ = Word(std::move(per), alphabet_);
}

EventuallyPeriodicWord EventuallyPeriodicWord::periodic(Word period) {
    Alphabet a = period.alphabet();
    return EventuallyPeriodicWord(Word({}, a), std::move(period));
}

EventuallyPeriodicWord EventuallyPeriodicWord::from_finite(Word w) {
    Alphabet a = w.alphabet();
    return EventuallyPeriodicWord(std::move(w), Word({0}, a));
}

int EventuallyPeriodicWord::digit(std::uint64_t i) const {
    if (i < preperiod_.size()) return preperiod_.at(static_cast<std::size_t>(i));
    return period_.at(static_cast<std::size_t>((i - preperiod_.size()) % period_.size()));
}

Word EventuallyPeriodicWord::prefix(std::size_t len) const {
    std::vector<int> out(len);
    for (std::size_t i = 0; i < len; ++i) out[i] = digit(i);
    return Word(std::move(out), alphabet_);
}

EventuallyPeriodicWord EventuallyPeriodicWord::reflected() const {
    return EventuallyPeriodicWord(preperiod_.reflected(), period_.reflected());
}

EventuallyPeriodicWord EventuallyPeriodicWord::shifted(std::uint64_t n) const {
    if (n == 0) return *this;
    if (n < preperiod_.size())
        return EventuallyPeriodicWord(preperiod_.suffix_from(static_cast<std::size_t>(n)), period_);
    std::uint64_t k = (n - preperiod_.size()) % period_.size();
    std::vector<int> rotated = period_.digits();
    std::rotate(rotated.begin(), rotated.begin() + static_cast<long>(k), rotated.end());
    return EventuallyPeriodicWord(Word({}, alphabet_), Word(std::move(rotated), alphabet_));
}

bool EventuallyPeriodicWord::is_zero() const {
    return preperiod_.empty() && ends_in_zeros();
}

bool EventuallyPeriodicWord::ends_in_zeros() const {
    return period_.size() == 1 && period_.at(0) == 0;
}

Ordering lex_compare(const EventuallyPeriodicWord& a, const EventuallyPeriodicWord& b) {
    // unrolling to max preperiod + lcm of periods + 1 digits decides
    std::size_t pre = std::max(a.preperiod().size(), b.preperiod().size());
    std::size_t l = std::lcm(a.period().size(), b.period().size());
    std::uint64_t depth = pre + l + 1;
    for (std::uint64_t i = 0; i < depth; ++i) {
        int da = a.digit(i), db = b.digit(i);
        if (da != db) return da < db ? Ordering::less : Ordering::greater;
    }
    return Ordering::equal;
}

DigitStream::DigitStream(std::function<int(std::uint64_t)> gen, Alphabet alphabet)
    : gen_(std::move(gen)), alphabet_(alphabet) {}

DigitStream DigitStream::from_word(const EventuallyPeriodicWord& w) {
    return DigitStream([w](std::uint64_t i) { return w.digit(i); }, w.alphabet());
}

int DigitStream::digit(std::uint64_t i) const {
    int d = gen_(i);
    if (!alphabet_.valid(d)) throw DomainError("DigitStream: generator produced digit out of range");
    return d;
}

DigitStream DigitStream::shifted(std::uint64_t n) const {
    auto g = gen_;
    return DigitStream([g, n](std::uint64_t i) { return g(i + n); }, alphabet_);
}

DigitStream DigitStream::reflected() const {
    auto g = gen_;
    int m = alphabet_.max_digit;
    return DigitStream([g, m](std::uint64_t i) { return m - g(i); }, alphabet_);
}

Word DigitStream::prefix(std::size_t len) const {
    std::vector<int> out(len);
    for (std::size_t i = 0; i < len; ++i) out[i] = digit(i);
    return Word(std::move(out), alphabet_);
}

DepthVerdict lex_compare_to_depth(const DigitStream& a, const DigitStream& b, std::uint64_t depth) {
    for (std::uint64_t i = 0; i < depth; ++i) {
        int da = a.digit(i), db = b.digit(i);
        if (da != db)
            return {da < db ? Ordering::less : Ordering::greater, true, i};
    }
    return {Ordering::equal, false, depth};
}

Rational metric_rho(const EventuallyPeriodicWord& a, const EventuallyPeriodicWord& b) {
    if (lex_compare(a, b) == Ordering::equal) return 0;
    std::uint64_t i = 0;
    while (a.digit(i) == b.digit(i)) ++i;
    return pow_rational(Rational(a.alphabet().size()), -static_cast<long>(i + 1));
}

Rational metric_rho(const DigitStream& a, const DigitStream& b, std::uint64_t depth) {
    DepthVerdict v = lex_compare_to_depth(a, b, depth);
    if (!v.decided) return 0;
    return pow_rational(Rational(a.alphabet().size()), -static_cast<long>(v.first_difference + 1));
}

bool is_alpha_admissible(const EventuallyPeriodicWord& s) {
    if (s.ends_in_zeros()) return false;
    std::size_t tails = s.tail_count();
    for (std::size_t n = 1; n <= tails; ++n)
        if (lex_compare(s.shifted(n), s) == Ordering::greater) return false;
    return true;
}

bool is_admissible_prefix(const Word& w) {
    if (w.empty()) return false;
    if (w.at(0) < 1) return false;
    for (std::size_t i = 1; i < w.size(); ++i) {
        // sigma^i(w) compared with w over the overlap
        for (std::size_t j = 0; i + j < w.size(); ++j) {
            if (w.at(i + j) < w.at(j)) break;
            if (w.at(i + j) > w.at(j)) return false;
        }
    }
    return true;
}

namespace {

std::vector<int> parse_digit_run(const std::string& text, const Alphabet& alphabet) {
    std::vector<int> out;
    if (alphabet.max_digit <= 9 && text.find(',') == std::string::npos) {
        for (char ch : text) {
            if (ch < '0' || ch > '9') throw ParseError(std::string("bad digit '") + ch + "'");
            out.push_back(ch - '0');
        }
    } else {
        std::stringstream ss(text);
        std::string part;
        while (std::getline(ss, part, ',')) {
            if (part.empty()) throw ParseError("empty digit in sequence");
            out.push_back(std::stoi(part));
        }
    }
    for (int d : out)
        if (!alphabet.valid(d)) throw ParseError("digit out of alphabet range");
    return out;
}

std::string format_digit_run(const Word& w) {
    std::string out;
    if (w.alphabet().max_digit <= 9) {
        for (std::size_t i = 0; i < w.size(); ++i) out += static_cast<char>('0' + w.at(i));
    } else {
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(w.at(i));
        }
    }
    return out;
}

} // namespace

EventuallyPeriodicWord parse_sequence(const std::string& text, Alphabet alphabet) {
    std::size_t open = text.find('(');
    if (open == std::string::npos) {
        return EventuallyPeriodicWord::from_finite(Word(parse_digit_run(text, alphabet), alphabet));
    }
    std::size_t close = text.find(')', open);
    if (close == std::string::npos || close != text.size() - 1)
        throw ParseError("sequence must look like pre(period): " + text);
    std::string pre = text.substr(0, open);
    std::string per = text.substr(open + 1, close - open - 1);
    if (per.empty()) throw ParseError("empty period in: " + text);
    return EventuallyPeriodicWord(Word(parse_digit_run(pre, alphabet), alphabet),
                                  Word(parse_digit_run(per, alphabet), alphabet));
}

std::string format_sequence(const EventuallyPeriodicWord& w) {
    return format_digit_run(w.preperiod()) + "(" + format_digit_run(w.period()) + ")";
}

std::string format_word(const Word& w) {
    return format_digit_run(w);
}

Word parse_word(const std::string& text, Alphabet alphabet) {
    return Word(parse_digit_run(text, alphabet), alphabet);
}

} // namespace univoque
