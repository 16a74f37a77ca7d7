#pragma once

#include "cullen/numeric.hpp"

#include <mpfr.h>

#include <optional>
#include <string>

namespace cullen {

/// Closed real interval [lo, hi] with outward-rounded MPFR endpoints. Every
/// operation returns an interval guaranteed to contain the exact result, so
/// "a.certainly_less(b)" is a proof that the real a is below the real b.
class Interval {
public:
    static constexpr mpfr_prec_t precision = 256;

    Interval();
    Interval(long v); // NOLINT: exact small integers read naturally in formulas
    explicit Interval(const BigInt& v);
    explicit Interval(const Rational& v);
    /// Encloses the decimal literal; both endpoints rounded outward.
    static Interval from_decimal(const std::string& text);

    Interval(const Interval& o);
    Interval(Interval&& o) noexcept;
    Interval& operator=(Interval o) noexcept;
    ~Interval();

    friend Interval operator+(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a, const Interval& b);
    friend Interval operator*(const Interval& a, const Interval& b);
    /// Throws std::domain_error when b contains 0.
    friend Interval operator/(const Interval& a, const Interval& b);

    /// Natural log; requires lo > 0.
    friend Interval log(const Interval& a);
    /// Requires lo >= 0.
    friend Interval sqrt(const Interval& a);

    bool certainly_less(const Interval& o) const;    ///< hi < o.lo
    bool certainly_greater(const Interval& o) const; ///< lo > o.hi
    bool certainly_at_least(const Interval& o) const; ///< lo >= o.hi
    bool contains(const Interval& o) const;

    double lower() const;
    double upper() const;
    double mid() const;
    double width() const;

    /// floor of every point of the interval, when that is a single integer.
    std::optional<long> floor() const;
    /// ceil of every point of the interval, when that is a single integer.
    std::optional<long> ceil() const;

    /// Decimal rendering of the midpoint with `digits` significant digits.
    std::string str(int digits = 12) const;

private:
    mpfr_t lo_;
    mpfr_t hi_;
};

} // namespace cullen
