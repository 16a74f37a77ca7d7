#include "cullen/interval.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace cullen {

Interval::Interval()
{
    mpfr_init2(lo_, precision);
    mpfr_init2(hi_, precision);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Interval::Interval(long v) : Interval()
{
    mpfr_set_si(lo_, v, MPFR_RNDD);
    mpfr_set_si(hi_, v, MPFR_RNDU);
}

Interval::Interval(const BigInt& v) : Interval()
{
    mpfr_set_z(lo_, v.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(hi_, v.get_mpz_t(), MPFR_RNDU);
}

Interval::Interval(const Rational& v) : Interval()
{
    mpfr_set_q(lo_, v.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi_, v.get_mpq_t(), MPFR_RNDU);
}

Interval Interval::from_decimal(const std::string& text)
{
    Interval r;
    if (mpfr_set_str(r.lo_, text.c_str(), 10, MPFR_RNDD) != 0 ||
        mpfr_set_str(r.hi_, text.c_str(), 10, MPFR_RNDU) != 0)
        throw std::invalid_argument("Interval::from_decimal: bad literal '" + text + "'");
    return r;
}

Interval::Interval(const Interval& o)
{
    mpfr_init2(lo_, precision);
    mpfr_init2(hi_, precision);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept : Interval()
{
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
}

Interval& Interval::operator=(Interval o) noexcept
{
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    return *this;
}

Interval::~Interval()
{
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

Interval operator+(const Interval& a, const Interval& b)
{
    Interval r;
    mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

Interval operator-(const Interval& a, const Interval& b)
{
    Interval r;
    mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
    return r;
}

namespace {

// min/max over the four endpoint products (or quotients), each rounded in its own direction.
template <class Op>
void corner_hull(mpfr_t lo, mpfr_t hi, const mpfr_t a_lo, const mpfr_t a_hi, const mpfr_t b_lo,
                 const mpfr_t b_hi, Op op)
{
    mpfr_t t;
    mpfr_init2(t, Interval::precision);
    const mpfr_srcptr as[2] = {a_lo, a_hi};
    const mpfr_srcptr bs[2] = {b_lo, b_hi};
    bool first = true;
    for (auto x : as) {
        for (auto y : bs) {
            op(t, x, y, MPFR_RNDD);
            if (first || mpfr_less_p(t, lo))
                mpfr_set(lo, t, MPFR_RNDD);
            op(t, x, y, MPFR_RNDU);
            if (first || mpfr_greater_p(t, hi))
                mpfr_set(hi, t, MPFR_RNDU);
            first = false;
        }
    }
    mpfr_clear(t);
}

} // namespace

Interval operator*(const Interval& a, const Interval& b)
{
    Interval r;
    corner_hull(r.lo_, r.hi_, a.lo_, a.hi_, b.lo_, b.hi_,
                [](mpfr_ptr t, mpfr_srcptr x, mpfr_srcptr y, mpfr_rnd_t rnd) { mpfr_mul(t, x, y, rnd); });
    return r;
}

Interval operator/(const Interval& a, const Interval& b)
{
    if (mpfr_sgn(b.lo_) <= 0 && mpfr_sgn(b.hi_) >= 0)
        throw std::domain_error("Interval: division by an interval containing 0");
    Interval r;
    corner_hull(r.lo_, r.hi_, a.lo_, a.hi_, b.lo_, b.hi_,
                [](mpfr_ptr t, mpfr_srcptr x, mpfr_srcptr y, mpfr_rnd_t rnd) { mpfr_div(t, x, y, rnd); });
    return r;
}

Interval log(const Interval& a)
{
    if (mpfr_sgn(a.lo_) <= 0)
        throw std::domain_error("Interval: log of a non-positive interval");
    Interval r;
    mpfr_log(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_log(r.hi_, a.hi_, MPFR_RNDU);
    return r;
}

Interval sqrt(const Interval& a)
{
    if (mpfr_sgn(a.lo_) < 0)
        throw std::domain_error("Interval: sqrt of a negative interval");
    Interval r;
    mpfr_sqrt(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_sqrt(r.hi_, a.hi_, MPFR_RNDU);
    return r;
}

bool Interval::certainly_less(const Interval& o) const { return mpfr_less_p(hi_, o.lo_); }
bool Interval::certainly_greater(const Interval& o) const { return mpfr_greater_p(lo_, o.hi_); }
bool Interval::certainly_at_least(const Interval& o) const { return mpfr_greaterequal_p(lo_, o.hi_); }

bool Interval::contains(const Interval& o) const
{
    return mpfr_lessequal_p(lo_, o.lo_) && mpfr_greaterequal_p(hi_, o.hi_);
}

double Interval::lower() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Interval::upper() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double Interval::mid() const
{
    mpfr_t m;
    mpfr_init2(m, precision + 1);
    mpfr_add(m, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(m, m, 1, MPFR_RNDN);
    const double d = mpfr_get_d(m, MPFR_RNDN);
    mpfr_clear(m);
    return d;
}

double Interval::width() const
{
    mpfr_t w;
    mpfr_init2(w, precision);
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    const double d = mpfr_get_d(w, MPFR_RNDU);
    mpfr_clear(w);
    return d;
}

std::optional<long> Interval::floor() const
{
    mpfr_t a, b;
    mpfr_inits2(precision, a, b, static_cast<mpfr_ptr>(nullptr));
    mpfr_floor(a, lo_);
    mpfr_floor(b, hi_);
    std::optional<long> out;
    if (mpfr_equal_p(a, b) && mpfr_fits_slong_p(a, MPFR_RNDN))
        out = mpfr_get_si(a, MPFR_RNDN);
    mpfr_clears(a, b, static_cast<mpfr_ptr>(nullptr));
    return out;
}

std::optional<long> Interval::ceil() const
{
    mpfr_t a, b;
    mpfr_inits2(precision, a, b, static_cast<mpfr_ptr>(nullptr));
    mpfr_ceil(a, lo_);
    mpfr_ceil(b, hi_);
    std::optional<long> out;
    if (mpfr_equal_p(a, b) && mpfr_fits_slong_p(a, MPFR_RNDN))
        out = mpfr_get_si(a, MPFR_RNDN);
    mpfr_clears(a, b, static_cast<mpfr_ptr>(nullptr));
    return out;
}

std::string Interval::str(int digits) const
{
    mpfr_t m;
    mpfr_init2(m, precision + 1);
    mpfr_add(m, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(m, m, 1, MPFR_RNDN);
    std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, m);
    mpfr_clear(m);
    return buf.data();
}

} // namespace cullen
