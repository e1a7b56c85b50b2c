#pragma once

#include "toricstab/divisor.hpp"

namespace toric {

// delta(X, B; {c_i L_i}) data: weighted big classes, torus-invariant
// candidate valuations and optional complete flags for the chain bounds.
struct CoupledProblem {
    std::shared_ptr<const Fan> fan;
    BoundaryData boundary;
    std::vector<std::pair<Rat, ToricDivisor>> terms; // (c_i, L_i)
    std::vector<IVec> candidates;                    // primitive, defaulted to rays + flag seeds
    std::vector<FlagChain> flags;                    // complete flags
};

CoupledProblem make_problem(std::shared_ptr<const Fan> fan, BoundaryData boundary,
                            std::vector<std::pair<Rat, ToricDivisor>> terms,
                            std::vector<IVec> candidates,
                            std::vector<std::vector<IVec>> flag_vectors);

struct CandidateRow {
    IVec v;
    Rat log_discrepancy;
    QVec s_values; // per term
    QVec t_values;
    Rat delta_ratio; // A / sum c_i S_i
    Rat alpha_ratio; // A / sum c_i T_i
};

struct ThresholdReport {
    Rat delta_upper;  // min over candidates of A / sum c_i S_i
    Rat alpha_upper;  // min over candidates of A / sum c_i T_i
    std::vector<CandidateRow> candidates;
    std::vector<QVec> flag_chain_ratios; // per flag, per level A/sum c_i S
    QVec flag_bounds;                    // per flag, min over levels
    bool certified = false;
};

// Exact minima over the finite candidate set (an upper bound for the true
// delta/alpha), plus the per-flag chain lower bounds.  certified is set when
// the flags' tau_0 cones cover every max cone and the flag minimum meets
// delta_upper.
ThresholdReport coupled_thresholds(const CoupledProblem& p);

// min over levels j of A_chain(j) / sum_i c_i S_chain(i, j).
Rat az_flag_bound(const CoupledProblem& p, const FlagChain& flag);

struct HirzebruchTerm {
    Rat weight, a, b; // c_i, L_i = a_i E + b_i F
};

struct HirzebruchResult {
    QVec p_values, q_values;
    Rat delta;
};

// Closed forms on P_{P^1}(O + O(m)): the two-branch p_i/q_i for m >= 1 and
// the product formula min{2/sum c a, 2/sum c b} for m = 0.
HirzebruchResult hirzebruch_oracle(long m, const std::vector<HirzebruchTerm>& terms);

// delta on a curve: 2(1 - b) / sum c_i d_i.
Rat curve_delta(const Rat& b, const std::vector<std::pair<Rat, Rat>>& terms);

// Product fan / divisors / problem, candidates (v,0) and (0,w).
std::shared_ptr<const Fan> product_fan(const Fan& f1, const Fan& f2);
CoupledProblem product_problem(const CoupledProblem& p1, const CoupledProblem& p2);

struct ProductCheck {
    Rat lhs; // delta of the product problem
    Rat rhs; // min of the factor deltas
    bool equal;
};

ProductCheck product_check(const CoupledProblem& p1, const CoupledProblem& p2);

struct ScalingReport {
    Rat delta_base;
    Rat delta_scaled;
    bool scaling_ok;           // delta(c * weights) == delta / c
    bool collapse_applicable;  // all terms proportional to one class
    Rat delta_collapsed;       // single-term value when applicable
    bool collapse_ok;
};

// Exact threshold identities: global weight scaling and the
// proportional-class collapse.
ScalingReport threshold_scaling_suite(const CoupledProblem& p, const Rat& c);

} // namespace toric
