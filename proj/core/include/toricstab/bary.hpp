#pragma once

#include "toricstab/interval.hpp"
#include "toricstab/polytope.hpp"

namespace toric {

// Slice data of an n-dimensional convex body along the first coordinate:
// projection range [t0, t1], total volume, the slice-volume function g
// (needed on [t0, e] only) and a one-sided derivative v of g at e.
struct BaryProfile {
    int n = 2;
    Rat t0, t1;
    Rat volume;
    SliceProfile g;
    Rat e;
    Rat v;
};

struct BaryOptions {
    mpfr_prec_t precision = 128;
};

BaryProfile make_profile(int n, Rat t0, Rat t1, Rat volume, SliceProfile g, Rat e, Rat v);

// Profile of a full-dimensional polytope along an axis; the derivative side
// at e is the caller's choice.
BaryProfile profile_from_polytope(const Polytope& p, int axis, const Rat& e,
                                  bool right_derivative);

// The power envelope of g beyond e (a polynomial of degree n-1).
Poly h0_tail(const BaryProfile& profile);

struct EnvelopeBound {
    Scalar threshold; // s0 or s1
    Scalar bound;
};

// b_1 >= (1/V) int_{t0}^{s0} x h0; the guaranteed value is bound.lower().
EnvelopeBound lower_bound_s0(const BaryProfile& profile, const BaryOptions& opts = {});

// b_1 >= (1/V) int_{t0}^{t} x h1 with the cone tail past s1; needs W >= V.
EnvelopeBound lower_bound_h1(const BaryProfile& profile, const Rat& t,
                             const BaryOptions& opts = {});

// b_1 <= (1/V) int_{t0}^{u} x h2; the guaranteed value is bound.upper().
Scalar upper_bound_h2(const BaryProfile& profile, const Rat& u, const Rat& w,
                      const BaryOptions& opts = {});

// The smallest admissible w for upper_bound_h2 would solve F(w) = 0; this
// returns a rational w with F(w) >= 0 certainly.
Rat admissible_h2_weight(const BaryProfile& profile, const Rat& u,
                         const BaryOptions& opts = {});

// Closed-form lower bound for the expected vanishing order along the
// exceptional divisor of a blown-up line, on the profile
// g(x) = ((2-d) x^{n-1} + (n-1) x^{n-2}) / (n-1)! over [0,1]; checked against
// the generic h1 pipeline on that profile.
Scalar line_s_lower_bound(long n, long d, const Rat& v0, const Rat& t, const Rat& tau,
                          const BaryOptions& opts = {});

} // namespace toric
