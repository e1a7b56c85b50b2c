#pragma once

#include "toricstab/divisor.hpp"

namespace toric {

// Zariski decomposition D = N + P on a complete toric surface: the positive
// part takes a'_rho = -min_{u in P_D} <u, v_rho>, so P_P = P_D, N = D - P >= 0
// and P is nef (all asserted).
struct ZariskiPair {
    ToricDivisor nef_part;       // P
    ToricDivisor negative_part;  // N
};

ZariskiPair zariski_surface(const ToricDivisor& d);

// a x + b on an interval
struct LinFn {
    Rat a, b;
    Rat eval(const Rat& x) const { return a * x + b; }
};

// One combinatorial interval of the parametric decomposition of
// sigma*L - x E on the subdivided surface.
struct ZariskiInterval {
    Rat lo, hi;
    std::vector<LinFn> negative_coeffs; // N(x) per ray of the subdivided fan
    std::vector<LinFn> positive_coeffs; // P(x) per ray
    LinFn degree;                       // (P(x) . Y_1), lattice slice length
    LinFn order_at_y2;                  // ord_{Y_2}(N(x)|_{Y_1})
};

struct ZariskiPath {
    Fan subdivided;  // sigma: X~ -> X, E = V(v_1)
    int e_ray;
    Rat e_coeff;     // coefficient of sigma*L on E
    Rat u1, t1;      // sigma_E and tau_E of sigma*L
    std::vector<ZariskiInterval> intervals;
    Rat s1, s2;      // S(L; Y_1) and S(L; Y_1 > Y_2)
};

// The two S-integrals along the parametric Zariski decomposition for a
// complete depth-2 flag on a surface; the polytope-barycenter route is the
// independent cross-check, not consulted here.
ZariskiPath s_via_surface_zariski(const ToricDivisor& l, const FlagChain& flag);

// Lattice points of the m-th dilate of a polytope (test and ZDS checks).
std::vector<IVec> dilated_lattice_points(const Polytope& p, const Int& m);

} // namespace toric
