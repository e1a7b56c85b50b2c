#include "toricstab/interval.hpp"

#include <algorithm>
#include <utility>

namespace toric {

DirInterval::DirInterval(mpfr_prec_t prec) : prec_(prec) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

DirInterval::DirInterval(const Rat& x, mpfr_prec_t prec) : prec_(prec) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set_q(lo_, x.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi_, x.get_mpq_t(), MPFR_RNDU);
}

DirInterval::DirInterval(const DirInterval& o) : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

DirInterval::DirInterval(DirInterval&& o) noexcept : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
}

DirInterval& DirInterval::operator=(DirInterval o) noexcept {
    std::swap(prec_, o.prec_);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    return *this;
}

DirInterval::~DirInterval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

Rat DirInterval::lower() const {
    Rat out;
    mpfr_get_q(out.get_mpq_t(), lo_);
    return out;
}

Rat DirInterval::upper() const {
    Rat out;
    mpfr_get_q(out.get_mpq_t(), hi_);
    return out;
}

DirInterval operator+(const DirInterval& a, const DirInterval& b) {
    DirInterval out(std::max(a.prec_, b.prec_));
    mpfr_add(out.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_add(out.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return out;
}

DirInterval operator-(const DirInterval& a, const DirInterval& b) {
    DirInterval out(std::max(a.prec_, b.prec_));
    mpfr_sub(out.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_sub(out.hi_, a.hi_, b.lo_, MPFR_RNDU);
    return out;
}

DirInterval operator*(const DirInterval& a, const DirInterval& b) {
    DirInterval out(std::max(a.prec_, b.prec_));
    mpfr_t t;
    mpfr_init2(t, out.prec_);
    const mpfr_srcptr as[2] = {a.lo_, a.hi_};
    const mpfr_srcptr bs[2] = {b.lo_, b.hi_};
    bool first = true;
    for (auto x : as)
        for (auto y : bs) {
            mpfr_mul(t, x, y, MPFR_RNDD);
            if (first || mpfr_cmp(t, out.lo_) < 0) mpfr_set(out.lo_, t, MPFR_RNDD);
            mpfr_mul(t, x, y, MPFR_RNDU);
            if (first || mpfr_cmp(t, out.hi_) > 0) mpfr_set(out.hi_, t, MPFR_RNDU);
            first = false;
        }
    mpfr_clear(t);
    return out;
}

DirInterval operator/(const DirInterval& a, const DirInterval& b) {
    if (mpfr_sgn(b.lo_) <= 0 && mpfr_sgn(b.hi_) >= 0)
        fail_math("DivisionByZero", "interval division by an interval containing zero");
    DirInterval out(std::max(a.prec_, b.prec_));
    mpfr_t t;
    mpfr_init2(t, out.prec_);
    const mpfr_srcptr as[2] = {a.lo_, a.hi_};
    const mpfr_srcptr bs[2] = {b.lo_, b.hi_};
    bool first = true;
    for (auto x : as)
        for (auto y : bs) {
            mpfr_div(t, x, y, MPFR_RNDD);
            if (first || mpfr_cmp(t, out.lo_) < 0) mpfr_set(out.lo_, t, MPFR_RNDD);
            mpfr_div(t, x, y, MPFR_RNDU);
            if (first || mpfr_cmp(t, out.hi_) > 0) mpfr_set(out.hi_, t, MPFR_RNDU);
            first = false;
        }
    mpfr_clear(t);
    return out;
}

DirInterval DirInterval::operator-() const {
    DirInterval out(prec_);
    mpfr_neg(out.lo_, hi_, MPFR_RNDD);
    mpfr_neg(out.hi_, lo_, MPFR_RNDU);
    return out;
}

DirInterval DirInterval::root(unsigned long k) const {
    if (mpfr_sgn(lo_) < 0)
        fail_math("NegativeRadicand", "root of an interval with negative lower bound");
    DirInterval out(prec_);
    mpfr_rootn_ui(out.lo_, lo_, k, MPFR_RNDD);
    mpfr_rootn_ui(out.hi_, hi_, k, MPFR_RNDU);
    return out;
}

DirInterval DirInterval::pow(unsigned long k) const {
    DirInterval out(Rat(1), prec_);
    for (unsigned long i = 0; i < k; ++i) out = out * (*this);
    return out;
}

bool DirInterval::certainly_ge(const Rat& x) const {
    return mpfr_cmp_q(lo_, x.get_mpq_t()) >= 0;
}

bool DirInterval::certainly_le(const Rat& x) const {
    return mpfr_cmp_q(hi_, x.get_mpq_t()) <= 0;
}

bool DirInterval::contains(const Rat& x) const {
    return mpfr_cmp_q(lo_, x.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, x.get_mpq_t()) >= 0;
}

bool DirInterval::overlaps(const DirInterval& o) const {
    return mpfr_cmp(lo_, o.hi_) <= 0 && mpfr_cmp(o.lo_, hi_) <= 0;
}

namespace {

DirInterval promote(const Scalar& s, mpfr_prec_t prec) {
    return s.exact() ? DirInterval(s.rat(), prec) : s.interval();
}

mpfr_prec_t join_prec(const Scalar& a, const Scalar& b) {
    mpfr_prec_t p = 128;
    if (!a.exact()) p = std::max(p, a.interval().prec());
    if (!b.exact()) p = std::max(p, b.interval().prec());
    return p;
}

} // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.exact() && b.exact()) return Scalar(Rat(a.rat() + b.rat()));
    mpfr_prec_t p = join_prec(a, b);
    return Scalar(promote(a, p) + promote(b, p));
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    if (a.exact() && b.exact()) return Scalar(Rat(a.rat() - b.rat()));
    mpfr_prec_t p = join_prec(a, b);
    return Scalar(promote(a, p) - promote(b, p));
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.exact() && b.exact()) return Scalar(Rat(a.rat() * b.rat()));
    mpfr_prec_t p = join_prec(a, b);
    return Scalar(promote(a, p) * promote(b, p));
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    if (a.exact() && b.exact()) {
        if (b.rat() == 0) fail_math("DivisionByZero", "exact division by zero");
        return Scalar(Rat(a.rat() / b.rat()));
    }
    mpfr_prec_t p = join_prec(a, b);
    return Scalar(promote(a, p) / promote(b, p));
}

Scalar Scalar::operator-() const {
    if (exact()) return Scalar(Rat(-rat()));
    return Scalar(-interval());
}

Scalar Scalar::pow(unsigned long k) const {
    if (exact()) return Scalar(pow_rat(rat(), (long)k));
    return Scalar(interval().pow(k));
}

std::string Scalar::describe() const {
    if (exact()) return rat_string(rat());
    return "interval[" + decimal_string(interval().lower(), 20) + "," +
           decimal_string(interval().upper(), 20) + "]";
}

Scalar nth_root(const Scalar& x, unsigned long k, mpfr_prec_t prec) {
    if (k == 1) return x;
    if (x.exact()) {
        const Rat& r = x.rat();
        if (r < 0) fail_math("NegativeRadicand", "root of a negative rational");
        if (r == 0) return Scalar(Rat(0));
        Int num_root, den_root;
        int num_exact = mpz_root(num_root.get_mpz_t(), r.get_num().get_mpz_t(), k);
        int den_exact = mpz_root(den_root.get_mpz_t(), r.get_den().get_mpz_t(), k);
        if (num_exact && den_exact) {
            Rat out(num_root, den_root);
            out.canonicalize();
            return Scalar(out);
        }
        return Scalar(DirInterval(r, prec).root(k));
    }
    return Scalar(x.interval().root(k));
}

bool scalars_consistent(const Scalar& a, const Scalar& b) {
    if (a.exact() && b.exact()) return a.rat() == b.rat();
    return a.lower() <= b.upper() && b.lower() <= a.upper();
}

} // namespace toric
