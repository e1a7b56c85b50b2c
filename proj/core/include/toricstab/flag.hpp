#pragma once

#include <vector>

#include "toricstab/fan.hpp"

namespace toric {

// All derived data of a torus-invariant primitive flag built from a sequence
// of primitive vectors, one per quotient level.
//
// For a complete flag (depth == ambient rank n) the cone sequence is filled:
// cones tau_l (in level fan l) and gamma_l (in subdivided fan l), vectors
// v_{j,k} in level j-1 coordinates, multiplicities m_{j,k}, coefficients
// c_{j,k} with v_j = sum_k c_{j,k} v_{j,k}, and normalized coefficients
// c'_{j,k} = c_{j,k} / prod_{i<=j} m_{i,k}.
struct FlagChain {
    int ambient_rank = 0;
    int depth = 0;
    bool complete = false;

    std::vector<IVec> level_vectors;   // v_k in N^{k-1}, k = 1..depth
    std::vector<Fan> level_fans;       // Sigma_0 .. (Sigma_{n-1} when complete)
    std::vector<Fan> subdivided_fans;  // Sigma~_0 .. Sigma~_{depth-1}
    std::vector<QuotientFan> quotients; // by v_1, v_2, ...

    // complete-flag cone sequence (1-based [j][k], valid for 1<=j<=k<=n)
    std::vector<std::vector<int>> tau;   // tau[l]: ray indices into level_fans[l]
    std::vector<std::vector<int>> gamma; // gamma[l]: ray indices into subdivided_fans[l]
    std::vector<std::vector<IVec>> v;    // v[j][k]
    std::vector<std::vector<Int>> m;     // m[j][k], m[1][k] = 1
    std::vector<std::vector<Rat>> c;     // c[j][k]
    std::vector<std::vector<Rat>> cprime;

    bool admissible = false;
    std::vector<Int> l; // l[0..n], admissible complete flags only

    Int tau0_multiplicity() const; // mult(tau_0)
};

struct FlagOptions {
    // perturbs the deterministic quotient bases; the chain data must not
    // depend on it (tested)
    unsigned quotient_basis_seed = 0;
};

// Builds the flag chain for a validated fan.  Each input vector is either in
// level coordinates (length n-k+1, the deterministic quotient basis) or an
// ambient seed (length n, projected down through the earlier quotients and
// primitivized).  Vectors are primitivized; a vector in the relative interior
// of a proper face of dimension >= 2 is rejected with AmbiguousCone.
FlagChain build_flag_chain(const Fan& fan, const std::vector<IVec>& vectors,
                           const FlagOptions& opts = {});

} // namespace toric
