#pragma once

#include <optional>
#include <string>
#include <tuple>

#include "univoque/rational.hpp"

namespace univoque {

// Element of Q(sqrt(c)): a + b*sqrt(c), with c a nonnegative integer.
// b == 0 represents a plain rational (c is then 0 by convention).
struct QuadExt {
    Rational a;
    Rational b;
    BigInt c;

    static QuadExt rational(Rational v) { return {std::move(v), 0, 0}; }
    bool is_rational() const { return b == 0; }

    int sign() const;
    bool is_integer() const;
    BigInt floor() const;

    friend bool operator==(const QuadExt&, const QuadExt&) = default;
};

// Field operations; return nullopt when the operands live in incompatible
// quadratic extensions (different nonsquare c with both b != 0).
std::optional<QuadExt> quad_add(const QuadExt& x, const QuadExt& y);
std::optional<QuadExt> quad_sub(const QuadExt& x, const QuadExt& y);
std::optional<QuadExt> quad_mul(const QuadExt& x, const QuadExt& y);
std::optional<QuadExt> quad_div(const QuadExt& x, const QuadExt& y);

// A real number carried as an exact rational interval [lo, hi], optionally
// backed by an exact value in a quadratic extension. Interval arithmetic is
// exact (no rounding), so the radius only ever reflects genuine input
// uncertainty or truncation bounds that were folded in explicitly.
class PrecisionReal {
public:
    PrecisionReal() : lo_(0), hi_(0), exact_(QuadExt::rational(0)), bits_(kDefaultBits) {}

    static constexpr unsigned kDefaultBits = 128;
    static constexpr unsigned kMaxBits = 4096;

    static PrecisionReal from_rational(Rational v, unsigned bits = kDefaultBits);
    static PrecisionReal from_int(long v, unsigned bits = kDefaultBits);
    static PrecisionReal from_interval(Rational lo, Rational hi, unsigned bits = kDefaultBits);
    static PrecisionReal from_decimal(const std::string& text, unsigned bits = kDefaultBits);
    // a + b*sqrt(c), enclosed to 2^-bits.
    static PrecisionReal from_quadratic(QuadExt value, unsigned bits = kDefaultBits);

    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    Rational value() const { return (lo_ + hi_) / 2; }
    Rational radius() const { return (hi_ - lo_) / 2; }
    unsigned precision_bits() const { return bits_; }
    const std::optional<QuadExt>& exact() const { return exact_; }
    bool is_exact_rational() const { return exact_ && exact_->is_rational(); }

    // Re-derives the enclosure from the exact form at a higher bit count.
    // For values without an exact form this only updates the bit tag.
    PrecisionReal refined(unsigned bits) const;

    PrecisionReal operator-() const;
    PrecisionReal operator+(const PrecisionReal& o) const;
    PrecisionReal operator-(const PrecisionReal& o) const;
    PrecisionReal operator*(const PrecisionReal& o) const;
    PrecisionReal operator/(const PrecisionReal& o) const; // divisor must exclude 0
    PrecisionReal pow_int(long e) const;
    PrecisionReal reciprocal() const;

    // Certified order tests against an exact rational bound.
    bool certainly_less(const Rational& r) const { return hi_ < r; }
    bool certainly_greater(const Rational& r) const { return lo_ > r; }
    bool certainly_leq(const Rational& r) const { return hi_ <= r; }
    bool certainly_geq(const Rational& r) const { return lo_ >= r; }
    bool contains(const Rational& r) const { return lo_ <= r && r <= hi_; }

    bool certainly_less(const PrecisionReal& o) const { return hi_ < o.lo_; }
    bool certainly_greater(const PrecisionReal& o) const { return lo_ > o.hi_; }
    bool overlaps(const PrecisionReal& o) const { return !(certainly_less(o) || certainly_greater(o)); }

    // Widens the interval by `slack` on both sides (used to fold truncation
    // tails into the certified radius).
    PrecisionReal widened(const Rational& slack) const;

    // Outward-rounds bulky interval endpoints to dyadic rationals at twice
    // the precision tag; keeps exact values untouched. Enclosure-preserving.
    PrecisionReal compressed() const;

    std::string to_string(int digits = 20) const;

    // Sign of *this - o when it can be certified: exact channels first,
    // then disjoint intervals; nullopt when genuinely undecidable here.
    std::optional<int> certified_compare(const PrecisionReal& o) const;

private:
    PrecisionReal(Rational lo, Rational hi, std::optional<QuadExt> exact, unsigned bits);

    Rational lo_, hi_;
    std::optional<QuadExt> exact_;
    unsigned bits_;
};

} // namespace univoque
