#include "univoque/rational.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cctype>
#include <cmath>

#include "univoque/errors.hpp"

namespace univoque {

namespace mp = boost::multiprecision;

BigInt pow_big(const BigInt& b, unsigned e) {
    return mp::pow(b, e);
}

Rational pow_rational(const Rational& r, long e) {
    if (e == 0) return Rational(1);
    if (e < 0) {
        if (r == 0) throw DomainError("pow_rational: zero base with negative exponent");
        return Rational(1) / pow_rational(r, -e);
    }
    Rational acc(1), base(r);
    unsigned long n = static_cast<unsigned long>(e);
    while (n) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

BigInt floor_rational(const Rational& r) {
    BigInt n = mp::numerator(r);
    BigInt d = mp::denominator(r);
    BigInt q = n / d; // truncates toward zero
    if (n < 0 && q * d != n) --q;
    return q;
}

BigInt ceil_rational(const Rational& r) {
    return -floor_rational(-r);
}

BigInt strict_floor_rational(const Rational& r) {
    BigInt f = floor_rational(r);
    if (Rational(f) == r) return f - 1;
    return f;
}

bool is_integer(const Rational& r) {
    return mp::denominator(r) == 1;
}

std::pair<Rational, Rational> sqrt_enclosure(const BigInt& c, unsigned bits) {
    if (c < 0) throw DomainError("sqrt_enclosure: negative argument");
    BigInt scaled = c << (2 * bits);
    BigInt s = mp::sqrt(scaled); // floor of integer sqrt
    BigInt denom = BigInt(1) << bits;
    Rational lo(s, denom);
    Rational hi(s + 1, denom);
    // s^2 == scaled means the sqrt is exactly representable
    if (s * s == scaled) hi = lo;
    return {lo, hi};
}

Rational parse_decimal(const std::string& text) {
    if (text.empty()) throw ParseError("empty number");
    std::size_t i = 0;
    bool neg = false;
    if (text[i] == '+' || text[i] == '-') {
        neg = text[i] == '-';
        ++i;
    }
    BigInt mantissa = 0;
    long frac_digits = 0;
    bool seen_digit = false, seen_point = false;
    for (; i < text.size(); ++i) {
        char ch = text[i];
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            mantissa = mantissa * 10 + (ch - '0');
            if (seen_point) ++frac_digits;
            seen_digit = true;
        } else if (ch == '.' && !seen_point) {
            seen_point = true;
        } else if ((ch == 'e' || ch == 'E') && seen_digit) {
            break;
        } else {
            throw ParseError("invalid number: " + text);
        }
    }
    long exponent = 0;
    if (i < text.size()) { // exponent part
        ++i;
        bool eneg = false;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
            eneg = text[i] == '-';
            ++i;
        }
        if (i >= text.size()) throw ParseError("invalid exponent: " + text);
        for (; i < text.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(text[i])))
                throw ParseError("invalid exponent: " + text);
            exponent = exponent * 10 + (text[i] - '0');
            if (exponent > 100000) throw ParseError("exponent too large: " + text);
        }
        if (eneg) exponent = -exponent;
    }
    if (!seen_digit) throw ParseError("invalid number: " + text);
    Rational value(mantissa);
    long shift = exponent - frac_digits;
    if (shift > 0)
        value *= Rational(pow_big(10, static_cast<unsigned>(shift)));
    else if (shift < 0)
        value /= Rational(pow_big(10, static_cast<unsigned>(-shift)));
    if (neg) value = -value;
    return value;
}

std::string format_decimal(const Rational& r, int digits) {
    if (digits < 1) digits = 1;
    bool neg = r < 0;
    Rational a = neg ? Rational(-r) : r;
    BigInt scale = pow_big(10, static_cast<unsigned>(digits));
    // round half up
    BigInt scaled = floor_rational(a * Rational(scale) + Rational(1, 2));
    BigInt ip = scaled / scale;
    BigInt fp = scaled % scale;
    std::string frac = fp.str();
    frac.insert(frac.begin(), static_cast<std::size_t>(digits) - frac.size(), '0');
    while (frac.size() > 1 && frac.back() == '0') frac.pop_back();
    std::string out = (neg ? "-" : "") + ip.str() + "." + frac;
    return out;
}

double to_double(const Rational& r) {
    return r.convert_to<double>();
}

double log_ratio(const BigInt& num, const BigInt& den, double base) {
    using Float = mp::cpp_bin_float_50;
    if (num <= 0 || den <= 0) throw DomainError("log_ratio: nonpositive argument");
    Float ln = mp::log(Float(num)) - mp::log(Float(den));
    return ln.convert_to<double>() / std::log(base);
}

} // namespace univoque
