#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "toricstab/error.hpp"

namespace toric {

using Int = mpz_class;
using Rat = mpq_class;

using IVec = std::vector<Int>;
using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;

inline Rat make_rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "p/q", "p", or decimal-free integer strings with optional sign.
Rat parse_rat(const std::string& s);

// Canonical "p/q" (or "p" when the denominator is 1).
std::string rat_string(const Rat& r);

// Round-to-nearest decimal rendering with the given number of significant
// digits; used only for display next to the normative "p/q" form.
std::string decimal_string(const Rat& r, int significant_digits = 12);

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

Rat pow_rat(const Rat& base, long exp);

Int binomial(long n, long k);

std::string ivec_string(const IVec& v);
std::string qvec_string(const QVec& v);

} // namespace toric
