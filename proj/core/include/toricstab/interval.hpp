#pragma once

#include <mpfr.h>

#include <string>
#include <variant>

#include "toricstab/rational.hpp"

namespace toric {

// A closed interval [lo, hi] of MPFR floats with directed rounding: every
// operation rounds the lower endpoint down and the upper endpoint up, so the
// true value stays inside.
class DirInterval {
public:
    explicit DirInterval(mpfr_prec_t prec = 128);
    DirInterval(const Rat& x, mpfr_prec_t prec);
    DirInterval(const DirInterval& o);
    DirInterval(DirInterval&& o) noexcept;
    DirInterval& operator=(DirInterval o) noexcept;
    ~DirInterval();

    mpfr_prec_t prec() const { return prec_; }
    Rat lower() const; // exact (endpoints are dyadic rationals)
    Rat upper() const;

    friend DirInterval operator+(const DirInterval& a, const DirInterval& b);
    friend DirInterval operator-(const DirInterval& a, const DirInterval& b);
    friend DirInterval operator*(const DirInterval& a, const DirInterval& b);
    friend DirInterval operator/(const DirInterval& a, const DirInterval& b);
    DirInterval operator-() const;

    DirInterval root(unsigned long k) const; // k-th root, needs lo >= 0
    DirInterval pow(unsigned long k) const;  // sign-correct via interval products

    bool certainly_ge(const Rat& x) const;
    bool certainly_le(const Rat& x) const;
    bool contains(const Rat& x) const;
    bool overlaps(const DirInterval& o) const;

private:
    mpfr_prec_t prec_;
    mpfr_t lo_, hi_;
    friend class Scalar;
};

// An exact rational, or a directed interval once an irrational root entered
// the computation.  Mixed arithmetic promotes the rational side.
class Scalar {
public:
    Scalar() : value_(Rat(0)) {}
    Scalar(Rat r) : value_(std::move(r)) {}
    Scalar(DirInterval iv) : value_(std::move(iv)) {}

    bool exact() const { return std::holds_alternative<Rat>(value_); }
    const Rat& rat() const { return std::get<Rat>(value_); }
    const DirInterval& interval() const { return std::get<DirInterval>(value_); }

    Rat lower() const { return exact() ? rat() : interval().lower(); }
    Rat upper() const { return exact() ? rat() : interval().upper(); }

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar operator-() const;

    Scalar pow(unsigned long k) const;

    bool certainly_ge(const Rat& x) const { return lower() >= x; }
    bool certainly_le(const Rat& x) const { return upper() <= x; }

    // "p/q" or "interval[lo,hi]" with decimal endpoints
    std::string describe() const;

private:
    std::variant<Rat, DirInterval> value_;
};

// Exact when x is a perfect k-th power of a rational, else a directed
// interval at the given precision; errors on negative radicands.
Scalar nth_root(const Scalar& x, unsigned long k, mpfr_prec_t prec);

// Two computations of the same quantity are consistent when their ranges meet.
bool scalars_consistent(const Scalar& a, const Scalar& b);

} // namespace toric
