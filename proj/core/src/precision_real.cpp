#include "univoque/precision_real.hpp"

#include <algorithm>
#include <utility>

#include "univoque/errors.hpp"

namespace univoque {

namespace {

// sign of a + b*sqrt(c) decided with exact integer arithmetic
int quad_sign(const Rational& a, const Rational& b, const BigInt& c) {
    if (b == 0) return a == 0 ? 0 : (a > 0 ? 1 : -1);
    if (c == 0) return quad_sign(a, 0, 0);
    if (a == 0) return b > 0 ? 1 : -1;
    if (a > 0 && b > 0) return 1;
    if (a < 0 && b < 0) return -1;
    // opposite signs: compare a^2 against b^2 * c
    Rational a2 = a * a;
    Rational b2c = b * b * Rational(c);
    if (a2 == b2c) return 0; // only possible when c is a perfect square
    bool a2_bigger = a2 > b2c;
    if (a > 0) return a2_bigger ? 1 : -1; // a > 0, b < 0
    return a2_bigger ? -1 : 1;            // a < 0, b > 0
}

} // namespace

int QuadExt::sign() const { return quad_sign(a, b, c); }

bool QuadExt::is_integer() const {
    return b == 0 && univoque::is_integer(a);
}

BigInt QuadExt::floor() const {
    if (b == 0) return floor_rational(a);
    // bracket sqrt(c) tightly enough to pin the floor; sqrt(c) is irrational
    // for nonsquare c so this terminates
    unsigned bits = 64;
    for (;;) {
        auto [slo, shi] = sqrt_enclosure(c, bits);
        Rational lo = a + b * (b > 0 ? slo : shi);
        Rational hi = a + b * (b > 0 ? shi : slo);
        BigInt flo = floor_rational(lo);
        BigInt fhi = floor_rational(hi);
        if (flo == fhi) return flo;
        if (bits > 1u << 20) throw PrecisionError("QuadExt::floor: sqrt(c) looks rational");
        bits *= 2;
    }
}

namespace {

bool compatible(const QuadExt& x, const QuadExt& y, BigInt& c_out) {
    if (x.b == 0 && y.b == 0) { c_out = 0; return true; }
    if (x.b == 0) { c_out = y.c; return true; }
    if (y.b == 0) { c_out = x.c; return true; }
    if (x.c == y.c) { c_out = x.c; return true; }
    return false;
}

QuadExt normalized(Rational a, Rational b, BigInt c) {
    if (b == 0) return {std::move(a), 0, 0};
    if (c == 0) return {std::move(a), 0, 0};
    // fold perfect squares back into the rational part
    BigInt s = boost::multiprecision::sqrt(c);
    if (s * s == c) return {a + b * Rational(s), 0, 0};
    return {std::move(a), std::move(b), std::move(c)};
}

} // namespace

std::optional<QuadExt> quad_add(const QuadExt& x, const QuadExt& y) {
    BigInt c;
    if (!compatible(x, y, c)) return std::nullopt;
    return normalized(x.a + y.a, x.b + y.b, c);
}

std::optional<QuadExt> quad_sub(const QuadExt& x, const QuadExt& y) {
    BigInt c;
    if (!compatible(x, y, c)) return std::nullopt;
    return normalized(x.a - y.a, x.b - y.b, c);
}

std::optional<QuadExt> quad_mul(const QuadExt& x, const QuadExt& y) {
    BigInt c;
    if (!compatible(x, y, c)) return std::nullopt;
    // (a1 + b1 s)(a2 + b2 s) = a1 a2 + b1 b2 c + (a1 b2 + a2 b1) s
    return normalized(x.a * y.a + x.b * y.b * Rational(c),
                      x.a * y.b + y.a * x.b, c);
}

std::optional<QuadExt> quad_div(const QuadExt& x, const QuadExt& y) {
    BigInt c;
    if (!compatible(x, y, c)) return std::nullopt;
    Rational denom = y.a * y.a - y.b * y.b * Rational(c);
    if (denom == 0) throw DomainError("quad_div: division by zero");
    // multiply by the conjugate
    Rational na = (x.a * y.a - x.b * y.b * Rational(c)) / denom;
    Rational nb = (x.b * y.a - x.a * y.b) / denom;
    return normalized(std::move(na), std::move(nb), c);
}

PrecisionReal::PrecisionReal(Rational lo, Rational hi, std::optional<QuadExt> exact, unsigned bits)
    : lo_(std::move(lo)), hi_(std::move(hi)), exact_(std::move(exact)), bits_(bits) {
    // the interval is authoritative only without an algebraic channel;
    // otherwise it is re-derived (rationals exactly, quadratics from a
    // fresh enclosure), so exact-channel callers may pass any placeholder
    if (exact_) {
        if (exact_->is_rational()) {
            lo_ = exact_->a;
            hi_ = exact_->a;
        } else {
            auto [slo, shi] = sqrt_enclosure(exact_->c, bits_);
            if (exact_->b > 0) {
                lo_ = exact_->a + exact_->b * slo;
                hi_ = exact_->a + exact_->b * shi;
            } else {
                lo_ = exact_->a + exact_->b * shi;
                hi_ = exact_->a + exact_->b * slo;
            }
        }
    }
    if (lo_ > hi_) throw DomainError("PrecisionReal: inverted interval");
}

PrecisionReal PrecisionReal::from_rational(Rational v, unsigned bits) {
    return PrecisionReal(v, v, QuadExt::rational(v), bits);
}

PrecisionReal PrecisionReal::from_int(long v, unsigned bits) {
    return from_rational(Rational(v), bits);
}

PrecisionReal PrecisionReal::from_interval(Rational lo, Rational hi, unsigned bits) {
    return PrecisionReal(std::move(lo), std::move(hi), std::nullopt, bits);
}

PrecisionReal PrecisionReal::from_decimal(const std::string& text, unsigned bits) {
    return from_rational(parse_decimal(text), bits);
}

PrecisionReal PrecisionReal::from_quadratic(QuadExt value, unsigned bits) {
    if (value.is_rational())
        return from_rational(value.a, bits);
    auto [slo, shi] = sqrt_enclosure(value.c, bits);
    Rational lo, hi;
    if (value.b > 0) {
        lo = value.a + value.b * slo;
        hi = value.a + value.b * shi;
    } else {
        lo = value.a + value.b * shi;
        hi = value.a + value.b * slo;
    }
    return PrecisionReal(std::move(lo), std::move(hi), std::move(value), bits);
}

PrecisionReal PrecisionReal::refined(unsigned bits) const {
    bits = std::min(bits, kMaxBits);
    if (exact_ && !exact_->is_rational())
        return from_quadratic(*exact_, bits);
    PrecisionReal out = *this;
    out.bits_ = bits;
    return out;
}

PrecisionReal PrecisionReal::operator-() const {
    std::optional<QuadExt> e;
    if (exact_) e = QuadExt{-exact_->a, -exact_->b, exact_->c};
    return PrecisionReal(-hi_, -lo_, std::move(e), bits_);
}

PrecisionReal PrecisionReal::operator+(const PrecisionReal& o) const {
    unsigned bits = std::max(bits_, o.bits_);
    if (exact_ && o.exact_) {
        if (auto e = quad_add(*exact_, *o.exact_))
            return PrecisionReal(0, 0, std::move(e), bits);
    }
    return PrecisionReal(lo_ + o.lo_, hi_ + o.hi_, std::nullopt, bits);
}

PrecisionReal PrecisionReal::operator-(const PrecisionReal& o) const {
    unsigned bits = std::max(bits_, o.bits_);
    if (exact_ && o.exact_) {
        if (auto e = quad_sub(*exact_, *o.exact_))
            return PrecisionReal(0, 0, std::move(e), bits);
    }
    return PrecisionReal(lo_ - o.hi_, hi_ - o.lo_, std::nullopt, bits);
}

PrecisionReal PrecisionReal::operator*(const PrecisionReal& o) const {
    unsigned bits = std::max(bits_, o.bits_);
    if (exact_ && o.exact_) {
        if (auto e = quad_mul(*exact_, *o.exact_))
            return PrecisionReal(0, 0, std::move(e), bits);
    }
    Rational p1 = lo_ * o.lo_, p2 = lo_ * o.hi_, p3 = hi_ * o.lo_, p4 = hi_ * o.hi_;
    Rational lo = std::min(std::min(p1, p2), std::min(p3, p4));
    Rational hi = std::max(std::max(p1, p2), std::max(p3, p4));
    return PrecisionReal(std::move(lo), std::move(hi), std::nullopt, bits);
}

PrecisionReal PrecisionReal::reciprocal() const {
    if (lo_ <= 0 && hi_ >= 0)
        throw DomainError("PrecisionReal: reciprocal of interval containing 0");
    if (exact_) {
        if (auto e = quad_div(QuadExt::rational(1), *exact_))
            return PrecisionReal(0, 0, std::move(e), bits_);
    }
    return PrecisionReal(Rational(1) / hi_, Rational(1) / lo_, std::nullopt, bits_);
}

PrecisionReal PrecisionReal::operator/(const PrecisionReal& o) const {
    unsigned bits = std::max(bits_, o.bits_);
    if (exact_ && o.exact_) {
        if (auto e = quad_div(*exact_, *o.exact_))
            return PrecisionReal(0, 0, std::move(e), bits);
    }
    return *this * o.reciprocal();
}

PrecisionReal PrecisionReal::pow_int(long e) const {
    if (e == 0) return from_int(1, bits_);
    if (e < 0) return reciprocal().pow_int(-e);
    PrecisionReal acc = from_int(1, bits_);
    PrecisionReal base = *this;
    unsigned long n = static_cast<unsigned long>(e);
    while (n) {
        if (n & 1) acc = (acc * base).compressed();
        base = (base * base).compressed();
        n >>= 1;
    }
    return acc;
}

PrecisionReal PrecisionReal::widened(const Rational& slack) const {
    if (slack < 0) throw DomainError("widened: negative slack");
    // widening invalidates the exact form only if slack > 0
    if (slack == 0) return *this;
    return PrecisionReal(lo_ - slack, hi_ + slack, std::nullopt, bits_);
}

PrecisionReal PrecisionReal::compressed() const {
    if (exact_) return *this;
    unsigned keep = 2 * std::max(bits_, kDefaultBits);
    auto weight = [](const Rational& r) {
        using boost::multiprecision::msb;
        BigInt n = boost::multiprecision::numerator(r);
        BigInt d = boost::multiprecision::denominator(r);
        unsigned wn = n == 0 ? 0 : msb(n < 0 ? BigInt(-n) : n);
        return wn + msb(d);
    };
    if (weight(lo_) <= 2 * keep && weight(hi_) <= 2 * keep) return *this;
    BigInt scale = BigInt(1) << keep;
    Rational lo(floor_rational(lo_ * Rational(scale)), scale);
    Rational hi(ceil_rational(hi_ * Rational(scale)), scale);
    return PrecisionReal(std::move(lo), std::move(hi), std::nullopt, bits_);
}

std::optional<int> PrecisionReal::certified_compare(const PrecisionReal& o) const {
    if (exact_ && o.exact_) {
        if (auto diff = quad_sub(*exact_, *o.exact_)) return diff->sign();
    }
    if (hi_ < o.lo_) return -1;
    if (lo_ > o.hi_) return 1;
    if (lo_ == hi_ && o.lo_ == o.hi_ && lo_ == o.lo_) return 0;
    return std::nullopt;
}

std::string PrecisionReal::to_string(int digits) const {
    std::string s = format_decimal(value(), digits);
    Rational rad = radius();
    if (rad == 0) return s;
    return s + " +/- " + format_decimal(rad, digits + 4);
}

} // namespace univoque
