#include "toricstab/bary.hpp"

namespace toric {

namespace {

Rat factorial(long n) {
    Rat f(1);
    for (long i = 2; i <= n; ++i) f *= i;
    return f;
}

Scalar eval_poly(const Poly& p, const Scalar& x) {
    Scalar y{Rat(0)};
    for (size_t i = p.coef.size(); i-- > 0;) y = y * x + Scalar(p.coef[i]);
    return y;
}

void check_profile(const BaryProfile& p) {
    if (p.n < 2) fail_validation("BadParameter", "profiles need n >= 2");
    if (!(p.t0 < p.t1)) fail_validation("BadParameter", "t0 < t1 required");
    if (!(p.t0 < p.e && p.e < p.t1))
        fail_validation("BadParameter", "e must lie strictly inside (t0, t1)");
    if (p.volume <= 0) fail_validation("BadParameter", "the volume must be positive");
    if (p.g.breakpoints.front() > p.t0 || p.g.breakpoints.back() < p.e)
        fail_validation("BadParameter", "g must cover [t0, e]");
}

} // namespace

BaryProfile make_profile(int n, Rat t0, Rat t1, Rat volume, SliceProfile g, Rat e, Rat v) {
    BaryProfile p{n, std::move(t0), std::move(t1), std::move(volume),
                  std::move(g), std::move(e), std::move(v)};
    check_profile(p);
    // when g covers the whole range its integral must reproduce the volume
    if (p.g.breakpoints.front() <= p.t0 && p.g.breakpoints.back() >= p.t1 &&
        p.g.integrate(p.t0, p.t1) != p.volume)
        fail_validation("BadParameter", "g integrates to a different volume");
    return p;
}

BaryProfile profile_from_polytope(const Polytope& p, int axis, const Rat& e,
                                  bool right_derivative) {
    SliceProfile g = slice_profile(p, axis);
    auto [left, right] = g.one_sided_derivatives(e);
    Rat v = right_derivative ? right : left;
    return make_profile(p.dim, g.t0, g.t1, g.volume, g, e, v);
}

Poly h0_tail(const BaryProfile& p) {
    Rat ge = p.g.eval(p.e);
    if (ge <= 0) fail_math("DegenerateSlice", "g(e) must be positive");
    // ge (1 + v (x - e) / ((n-1) ge))^{n-1}
    Rat slope = p.v / ((p.n - 1) * ge);
    Poly base{{1 - slope * p.e, slope}};
    Poly out{{Rat(1)}};
    for (int i = 0; i < p.n - 1; ++i) out = poly_mul(out, base);
    return poly_scale(out, ge);
}

EnvelopeBound lower_bound_s0(const BaryProfile& p, const BaryOptions& opts) {
    check_profile(p);
    Rat ge = p.g.eval(p.e);
    if (ge <= 0) fail_math("DegenerateSlice", "g(e) must be positive");
    Rat ie = p.g.integrate(p.t0, p.e);
    Rat me = p.g.integrate_moment(p.t0, p.e);

    Scalar s0;
    if (p.v == 0) {
        s0 = Scalar(Rat(p.e + (p.volume - ie) / ge));
    } else {
        Rat radicand = (p.n * p.v * (p.volume - ie) + (p.n - 1) * ge * ge) /
                       ((p.n - 1) * ge * ge);
        Scalar root = nth_root(Scalar(radicand), p.n, opts.precision);
        s0 = Scalar(Rat(p.e)) +
             Scalar(Rat((p.n - 1) * ge / p.v)) * (root - Scalar(Rat(1)));
    }

    Poly tail_moment = poly_mul(poly_x(), h0_tail(p)).antiderivative();
    Scalar integral = Scalar(me) + eval_poly(tail_moment, s0) -
                      Scalar(tail_moment.eval(p.e));
    return {s0, integral / Scalar(p.volume)};
}

EnvelopeBound lower_bound_h1(const BaryProfile& p, const Rat& t, const BaryOptions& opts) {
    check_profile(p);
    Rat ge = p.g.eval(p.e);
    if (ge <= 0) fail_math("DegenerateSlice", "g(e) must be positive");
    if (!(p.e < t && t <= p.t1))
        fail_validation("BadParameter", "t must lie in (e, t1]");
    Rat ie = p.g.integrate(p.t0, p.e);
    Rat me = p.g.integrate_moment(p.t0, p.e);

    // W = int_{t0}^{t} h0, in closed form
    Rat w;
    if (p.v == 0) {
        w = ie + (t - p.e) * ge;
    } else {
        Rat lin = p.v * (t - p.e) / ((p.n - 1) * ge) + 1;
        w = ie + (p.n - 1) * ge * ge / (p.n * p.v) * (pow_rat(lin, p.n) - 1);
    }
    if (w < p.volume)
        fail_math("WBelowV", "int h0 over [t0, t] is " + rat_string(w) +
                                 " < V = " + rat_string(p.volume));
    // genuine profiles satisfy int g + (t-e) g(e)/n <= V, which places the
    // cone apex s1 inside [e, t]
    if (ie + (t - p.e) * ge / p.n > p.volume)
        fail_math("ConstraintViolated",
                  "int g + (t-e) g(e)/n exceeds V; the profile data cannot come "
                  "from a convex body");

    Scalar s1;
    Rat envelope_at_t = p.v * (t - p.e) + (p.n - 1) * ge;
    if (p.v == 0) {
        s1 = Scalar(Rat((p.n * (p.volume - ie) - ge * (t - p.n * p.e)) / ((p.n - 1) * ge)));
    } else if (envelope_at_t == 0) {
        // h0 vanishes exactly at t, so int h0 is constant in the cone apex
        // and the tail degenerates: s1 = t
        s1 = Scalar(Rat(t));
    } else {
        Rat radicand = (p.n * p.v * (p.volume - ie) + (p.n - 1) * ge * ge) /
                       (ge * envelope_at_t);
        Scalar root = nth_root(Scalar(radicand), p.n - 1, opts.precision);
        s1 = Scalar(Rat(p.e)) +
             Scalar(Rat((p.n - 1) * ge / p.v)) * (root - Scalar(Rat(1)));
    }

    Poly tail = h0_tail(p);
    Poly tail_moment = poly_mul(poly_x(), tail).antiderivative();
    // int_{s1}^{t} x h0(s1) ((t-x)/(t-s1))^{n-1} dx
    //   = h0(s1) (t-s1) (t/n - (t-s1)/(n+1))
    Scalar h0s1 = eval_poly(tail, s1);
    Scalar tms1 = Scalar(Rat(t)) - s1;
    Scalar cone = h0s1 * tms1 *
                  (Scalar(Rat(t / p.n)) - tms1 / Scalar(Rat(p.n + 1)));
    Scalar integral = Scalar(me) + eval_poly(tail_moment, s1) -
                      Scalar(tail_moment.eval(p.e)) + cone;
    return {s1, integral / Scalar(p.volume)};
}

Scalar upper_bound_h2(const BaryProfile& p, const Rat& u, const Rat& w,
                      const BaryOptions& opts) {
    check_profile(p);
    Rat ge = p.g.eval(p.e);
    if (ge <= 0) fail_math("DegenerateSlice", "g(e) must be positive");
    if (u < p.t1) fail_validation("BadParameter", "u must lie in [t1, infinity)");
    if (w < 0) fail_validation("BadParameter", "w must be nonnegative");
    Rat ie = p.g.integrate(p.t0, p.e);
    Rat me = p.g.integrate_moment(p.t0, p.e);

    if (ie + (u - p.e) * ge / p.n > p.volume)
        fail_math("ConstraintViolated", "int g + (u-e) g(e)/n exceeds V");

    // (u-e) sum_i g(e)^{i/(n-1)} w^{n-1-i} - n (V - int g) >= 0, conservatively
    Scalar a = nth_root(Scalar(ge), p.n - 1, opts.precision);
    Scalar sum{Rat(0)};
    for (int i = 0; i <= p.n - 1; ++i)
        sum = sum + a.pow(i) * Scalar(pow_rat(w, p.n - 1 - i));
    Scalar constraint = Scalar(Rat(u - p.e)) * sum -
                        Scalar(Rat(p.n * (p.volume - ie)));
    if (!constraint.certainly_ge(Rat(0)))
        fail_math("ConstraintViolated", "the w-constraint does not certainly hold");

    // For w above the minimal admissible weight the envelope grows pointwise
    // on (e, u], which raises the moment only where x >= 0.  The whole bound
    // family is translation-equivariant, so when e < 0 we work in shifted
    // coordinates x' = x - e (where the monotonicity argument applies) and
    // shift back; bodies in the nonnegative orthant are unaffected.
    Rat shift = (p.e < 0) ? p.e : Rat(0);
    Rat es = p.e - shift, us = u - shift;
    Rat mes = me - shift * ie;

    // h2 tail: ((u-x) A + (x-e) w)^{n-1} / (u-e)^{n-1} = (alpha x + beta)^{n-1}
    Scalar ue{Rat(u - p.e)};
    Scalar alpha = (Scalar(w) - a) / ue;
    Scalar beta = (a * Scalar(us) - Scalar(Rat(w * es))) / ue;
    // int x (alpha x + beta)^{n-1} dx over [es, us], expanded binomially
    Scalar integral{Rat(0)};
    for (int k = 0; k <= p.n - 1; ++k) {
        Rat coeff = Rat(binomial(p.n - 1, k)) *
                    (pow_rat(us, k + 2) - pow_rat(es, k + 2)) / (k + 2);
        integral = integral + Scalar(coeff) * alpha.pow(k) * beta.pow(p.n - 1 - k);
    }
    return (Scalar(mes) + integral) / Scalar(p.volume) + Scalar(shift);
}

Rat admissible_h2_weight(const BaryProfile& p, const Rat& u, const BaryOptions& opts) {
    Rat ge = p.g.eval(p.e);
    if (ge <= 0) fail_math("DegenerateSlice", "g(e) must be positive");
    Rat ie = p.g.integrate(p.t0, p.e);
    Rat target = Rat(p.n) * (p.volume - ie) / (u - p.e);
    // grow w until (w + g(e)^{1/(n-1)})... the full sum certainly reaches the
    // target; dropping the mixed terms keeps the estimate conservative
    Rat w(0);
    Scalar a = nth_root(Scalar(ge), p.n - 1, opts.precision);
    for (int iter = 0; iter < 512; ++iter) {
        Scalar sum{Rat(0)};
        for (int i = 0; i <= p.n - 1; ++i)
            sum = sum + a.pow(i) * Scalar(pow_rat(w, p.n - 1 - i));
        if (sum.certainly_ge(target)) return w;
        w = (w == 0) ? Rat(1, 4) : w * 2;
    }
    fail_math("InternalError", "no admissible h2 weight found");
}

Scalar line_s_lower_bound(long n, long d, const Rat& v0, const Rat& t, const Rat& tau,
                          const BaryOptions& opts) {
    if (n < 2) fail_validation("BadParameter", "n >= 2 required");
    if (d > n) fail_validation("BadParameter", "d <= n required");
    if (v0 < n + 2 - d)
        fail_math("VolumeTooSmall", "V0 >= n + 2 - d is required");
    if (!(1 < t && t <= tau)) fail_validation("BadParameter", "1 < t <= tau required");

    // W >= V, in the branch form
    if (d == n) {
        if (2 + Rat(n) * (t - 1) < v0)
            fail_math("WBelowV", "2 + n(t-1) >= V0 fails");
    } else {
        Rat lhs = 1 + (v0 - (n + 2 - d)) * Rat(n - d) / Rat((n + 1 - d) * (n + 1 - d));
        Rat rhs = pow_rat((t * Rat(n - d) + 1) / Rat(n + 1 - d), n);
        if (lhs > rhs) fail_math("WBelowV", "the beta-form W >= V condition fails");
    }

    Scalar value;
    if (d == n) {
        Rat q = v0 - 2 + Rat(n) - t;
        Rat val = (Rat(n) / Rat(n - 1) * q * q + 2 * t * q - Rat((n - 1) * (n - 2)) +
                   2 * t * t) /
                  (2 * Rat(n + 1) * v0);
        value = Scalar(val);
    } else {
        // In the closed form of the h1 integral for this profile the
        // beta^{(n+1)/(n-1)} contributions of the two envelope pieces cancel;
        // what survives is linear in beta^{n/(n-1)} and beta:
        //   V0 b1 >= B1 (n-1) A^2 G / (c^2 (n+1))
        //          + (c t - n)(c (V0 - (n+2-d)) + A^2) / (c^2 (n+1)) + M
        // with c = n-d, A = n+1-d, G = c t + 1 and
        //   M = (n^2 + 2n - dn - 1)/(n+1) - n A^3/(c^2 (n+1)) + A^2/c^2.
        Rat c(n - d), a(n + 1 - d);
        Rat g_end = c * t + 1;
        Rat beta_num = c * (v0 - (n + 2 - d)) + a * a;
        Rat beta = beta_num / (a * g_end);
        Scalar r = nth_root(Scalar(beta), n - 1, opts.precision);
        Scalar b1 = Scalar(beta) * r; // beta^{n/(n-1)}
        Rat m = Rat(n * n + 2 * n - d * n - 1) / Rat(n + 1) -
                Rat(n) * a * a * a / (c * c * Rat(n + 1)) + a * a / (c * c);
        Scalar total = b1 * Scalar(Rat(Rat(n - 1) * a * a * g_end / (c * c * Rat(n + 1)))) +
                       Scalar(Rat((c * t - n) * beta_num / (c * c * Rat(n + 1)))) +
                       Scalar(m);
        value = total / Scalar(v0);
    }

    // the generic pipeline on the explicit profile must agree
    Rat fact(1);
    for (long i = 2; i <= n - 1; ++i) fact *= i;
    Poly gpoly;
    gpoly.coef.assign(n, Rat(0));
    gpoly.coef[n - 1] = Rat(2 - d) / fact;
    gpoly.coef[n - 2] = Rat(n - 1) / fact;
    SliceProfile g;
    g.t0 = 0;
    g.t1 = 1;
    g.breakpoints = {Rat(0), Rat(1)};
    g.pieces = {gpoly};
    g.volume = gpoly.integrate(Rat(0), Rat(1));
    g.barycenter_coordinate = poly_mul(poly_x(), gpoly).integrate(Rat(0), Rat(1)) / g.volume;
    Rat nfact = fact * Rat(n);
    BaryProfile profile{(int)n, Rat(0), tau, v0 / nfact, g, Rat(1), Rat(n - d) / fact};
    // v = (n-d)/(n-2)! and fact = (n-1)!: adjust
    profile.v = Rat(n - d) * Rat(n - 1) / fact;
    EnvelopeBound pipeline = lower_bound_h1(profile, t, opts);
    if (!scalars_consistent(value, pipeline.bound))
        fail_math("InternalError", "closed form disagrees with the h1 pipeline");
    return value;
}

} // namespace toric
