#pragma once

#include <memory>

#include "toricstab/flag.hpp"
#include "toricstab/polytope.hpp"

namespace toric {

// D = sum a_rho V(v_rho), one rational coefficient per fan ray.
struct ToricDivisor {
    std::shared_ptr<const Fan> fan;
    QVec coeffs;
};

ToricDivisor make_divisor(std::shared_ptr<const Fan> fan, QVec coeffs);

// B = sum b_rho V(v_rho) with 0 <= b_rho < 1; the pair stays klt.
struct BoundaryData {
    std::shared_ptr<const Fan> fan;
    QVec coeffs;
};

BoundaryData make_boundary(std::shared_ptr<const Fan> fan, QVec coeffs);

// Value of the support function psi_D at v (psi_D(v_rho) = -a_rho, linear on
// cones); well defined on walls, asserted consistent across containing cones.
Rat support_value(const ToricDivisor& d, const IVec& v);

// D + div(chi^u) with coefficients 0 on the rays of the given max cone.
ToricDivisor normalize_divisor(const ToricDivisor& d, const std::vector<int>& cone_rays);

// P_D = { u : <u, v_rho> >= -a_rho }.
Polytope moment_polytope(const ToricDivisor& d);

bool is_big(const ToricDivisor& d);

Rat volume_x(const ToricDivisor& d); // n! * vol(P_D)

struct OkounkovBody {
    Polytope body;
    QMat transform; // the composite linear map applied to P_D
};

// psi . phi (P_D) for a complete flag chain, phi(u) = (<u, v_{1,k}>)_k and
// psi the upper-triangular c' matrix; D is renormalized on tau_0 first.
OkounkovBody okounkov_body(const ToricDivisor& d, const FlagChain& flag);

struct STPair {
    Rat s;
    Rat t;
};

// S = a_v + mean of <u, v> over P_D, T = a_v + max, with a_v = -psi_D(v).
STPair s_t_invariants(const ToricDivisor& d, const IVec& v);

// S(L; Y_1 > ... > Y_j) = sum_{k=j}^n c'_{j,k} S(L; V(v_{1,k})); asserted to
// equal barycenter coordinate j of the Okounkov body.
Rat flag_s_invariant(const ToricDivisor& d, const FlagChain& flag, int level);

// A_{X,B}(v) = sum lambda_k (1 - b_k) over the containing cone coordinates.
Rat log_discrepancy(const BoundaryData& b, const IVec& v);

// A_{Y_{j-1},B_{j-1}}(Y_j) = sum_{k=j}^n c'_{j,k} A_{X,B}(V(v_{1,k})).
Rat flag_log_discrepancy(const BoundaryData& b, const FlagChain& flag, int level);

} // namespace toric
