#include "toricstab/threshold.hpp"

#include <algorithm>
#include <set>

namespace toric {

namespace {

void check_same_fan(const Fan& a, const Fan& b, const char* what) {
    if (a.rays != b.rays || a.max_cones != b.max_cones)
        fail_validation("FanMismatch", std::string(what) + " lives on a different fan");
}

} // namespace

CoupledProblem make_problem(std::shared_ptr<const Fan> fan, BoundaryData boundary,
                            std::vector<std::pair<Rat, ToricDivisor>> terms,
                            std::vector<IVec> candidates,
                            std::vector<std::vector<IVec>> flag_vectors) {
    if (!fan || !fan->validated) fail_validation("UnvalidatedFan", "problem needs a validated fan");
    if (!fan->complete) fail_math("NotComplete", "thresholds need a complete fan");
    if (terms.empty()) fail_validation("NoTerms", "at least one weighted class is required");
    if (terms.size() > 8) fail_validation("TooManyTerms", "at most 8 weighted classes");
    check_same_fan(*fan, *boundary.fan, "the boundary");
    for (auto& [c, l] : terms) {
        if (c <= 0) fail_validation("BadWeight", "weights must be positive");
        check_same_fan(*fan, *l.fan, "a term");
        if (!is_big(l)) fail_math("NotBig", "every class in the problem must be big");
    }

    CoupledProblem p{std::move(fan), std::move(boundary), std::move(terms), {}, {}};
    for (const auto& vecs : flag_vectors) p.flags.push_back(build_flag_chain(*p.fan, vecs));

    if (candidates.empty()) {
        candidates = p.fan->rays;
        for (const auto& fl : p.flags) candidates.push_back(fl.level_vectors[0]);
    }
    std::set<IVec> dedup;
    for (const auto& v : candidates) {
        IVec prim = primitive_part(v);
        if (!in_support(*p.fan, prim))
            fail_math("OutsideSupport", "candidate " + ivec_string(v) + " outside the fan");
        dedup.insert(prim);
    }
    p.candidates.assign(dedup.begin(), dedup.end());
    return p;
}

Rat az_flag_bound(const CoupledProblem& p, const FlagChain& flag) {
    if (!flag.complete) fail_math("IncompleteFlag", "the chain bound needs a complete flag");
    check_same_fan(*p.fan, flag.level_fans[0], "the flag");
    Rat best(0);
    for (int j = 1; j <= flag.ambient_rank; ++j) {
        Rat a = flag_log_discrepancy(p.boundary, flag, j);
        Rat s(0);
        for (const auto& [c, l] : p.terms) s += c * flag_s_invariant(l, flag, j);
        Rat ratio = a / s;
        if (j == 1 || ratio < best) best = ratio;
    }
    return best;
}

ThresholdReport coupled_thresholds(const CoupledProblem& p) {
    if (p.candidates.empty()) fail_validation("NoCandidates", "empty candidate set");
    ThresholdReport rep;
    for (const IVec& v : p.candidates) {
        CandidateRow row;
        row.v = v;
        row.log_discrepancy = log_discrepancy(p.boundary, v);
        Rat ssum(0), tsum(0);
        for (const auto& [c, l] : p.terms) {
            STPair st = s_t_invariants(l, v);
            row.s_values.push_back(st.s);
            row.t_values.push_back(st.t);
            ssum += c * st.s;
            tsum += c * st.t;
        }
        row.delta_ratio = row.log_discrepancy / ssum;
        row.alpha_ratio = row.log_discrepancy / tsum;
        rep.candidates.push_back(std::move(row));
    }
    rep.delta_upper = rep.candidates[0].delta_ratio;
    rep.alpha_upper = rep.candidates[0].alpha_ratio;
    for (const auto& row : rep.candidates) {
        rep.delta_upper = std::min(rep.delta_upper, row.delta_ratio);
        rep.alpha_upper = std::min(rep.alpha_upper, row.alpha_ratio);
    }
    // alpha <= delta <= (1 + n) alpha on the candidate set
    if (!(rep.alpha_upper <= rep.delta_upper &&
          rep.delta_upper <= Rat(1 + p.fan->rank) * rep.alpha_upper))
        fail_math("InternalError", "threshold report violates the alpha/delta bounds");

    for (const auto& fl : p.flags) {
        QVec chain;
        for (int j = 1; j <= fl.ambient_rank; ++j) {
            Rat a = flag_log_discrepancy(p.boundary, fl, j);
            Rat s(0);
            for (const auto& [c, l] : p.terms) s += c * flag_s_invariant(l, fl, j);
            chain.push_back(a / s);
        }
        rep.flag_chain_ratios.push_back(chain);
        rep.flag_bounds.push_back(*std::min_element(chain.begin(), chain.end()));
    }

    // certified: every max cone is some flag's tau_0 and its best chain
    // reaches delta_upper
    if (!p.flags.empty()) {
        std::vector<Rat> best_per_cone(p.fan->max_cones.size(), Rat(-1));
        for (size_t f = 0; f < p.flags.size(); ++f) {
            std::vector<int> t0 = p.flags[f].tau[0];
            std::sort(t0.begin(), t0.end());
            auto it = std::find(p.fan->max_cones.begin(), p.fan->max_cones.end(), t0);
            if (it == p.fan->max_cones.end()) continue;
            size_t c = it - p.fan->max_cones.begin();
            best_per_cone[c] = std::max(best_per_cone[c], rep.flag_bounds[f]);
        }
        rep.certified = std::all_of(best_per_cone.begin(), best_per_cone.end(),
                                    [&](const Rat& b) { return b >= rep.delta_upper; });
    }
    return rep;
}

HirzebruchResult hirzebruch_oracle(long m, const std::vector<HirzebruchTerm>& terms) {
    if (m < 0) fail_validation("BadParameter", "m must be nonnegative");
    if (terms.empty()) fail_validation("NoTerms", "at least one term is required");
    HirzebruchResult out;
    for (const auto& t : terms) {
        if (t.weight <= 0) fail_validation("BadWeight", "weights must be positive");
        if (t.a <= 0 || t.b <= 0) fail_math("NotBig", "a_i E + b_i F is big iff a_i, b_i > 0");
    }
    if (m == 0) {
        Rat sa(0), sb(0);
        for (const auto& t : terms) {
            sa += t.weight * t.a;
            sb += t.weight * t.b;
            out.p_values.push_back(t.a / 2);
            out.q_values.push_back(t.b / 2);
        }
        out.delta = std::min(Rat(2) / sa, Rat(2) / sb);
        return out;
    }
    Rat sp(0), sq(0);
    for (const auto& t : terms) {
        Rat p, q;
        if (Rat(m) * t.a >= t.b) {
            p = t.a - t.b / Rat(3 * m);
            q = t.b / 3;
        } else {
            Rat rm(m);
            p = t.a * (3 * t.b - rm * t.a) / (3 * (2 * t.b - rm * t.a));
            q = (3 * t.b * t.b - 3 * rm * t.a * t.b + rm * rm * t.a * t.a) /
                (3 * (2 * t.b - rm * t.a));
        }
        out.p_values.push_back(p);
        out.q_values.push_back(q);
        sp += t.weight * p;
        sq += t.weight * q;
    }
    out.delta = std::min(Rat(1) / sp, Rat(1) / sq);
    return out;
}

Rat curve_delta(const Rat& b, const std::vector<std::pair<Rat, Rat>>& terms) {
    if (b < 0 || b >= 1)
        fail_validation("BoundaryCoefficient", "b must lie in [0, 1)");
    Rat denom(0);
    for (const auto& [c, d] : terms) {
        if (c <= 0) fail_validation("BadWeight", "weights must be positive");
        if (d <= 0) fail_math("NotBig", "degrees must be positive");
        denom += c * d;
    }
    if (denom == 0) fail_validation("NoTerms", "at least one term is required");
    return 2 * (1 - b) / denom;
}

std::shared_ptr<const Fan> product_fan(const Fan& f1, const Fan& f2) {
    Fan prod;
    prod.rank = f1.rank + f2.rank;
    for (const auto& r : f1.rays) {
        IVec v = r;
        v.resize(prod.rank, Int(0));
        prod.rays.push_back(v);
    }
    for (const auto& r : f2.rays) {
        IVec v(f1.rank, Int(0));
        v.insert(v.end(), r.begin(), r.end());
        prod.rays.push_back(v);
    }
    int offset = (int)f1.rays.size();
    for (const auto& c1 : f1.max_cones)
        for (const auto& c2 : f2.max_cones) {
            std::vector<int> c = c1;
            for (int i : c2) c.push_back(i + offset);
            prod.max_cones.push_back(c);
        }
    return std::make_shared<const Fan>(validate_fan(std::move(prod)));
}

CoupledProblem product_problem(const CoupledProblem& p1, const CoupledProblem& p2) {
    if (p1.terms.size() != p2.terms.size())
        fail_validation("TermMismatch", "product factors need matching term counts");
    for (size_t i = 0; i < p1.terms.size(); ++i)
        if (p1.terms[i].first != p2.terms[i].first)
            fail_validation("TermMismatch", "product factors need matching weights");

    auto fan = product_fan(*p1.fan, *p2.fan);
    size_t n1 = p1.fan->rays.size();

    QVec bc(fan->rays.size());
    for (size_t r = 0; r < n1; ++r) bc[r] = p1.boundary.coeffs[r];
    for (size_t r = 0; r < p2.fan->rays.size(); ++r) bc[n1 + r] = p2.boundary.coeffs[r];
    BoundaryData boundary = make_boundary(fan, bc);

    std::vector<std::pair<Rat, ToricDivisor>> terms;
    for (size_t i = 0; i < p1.terms.size(); ++i) {
        QVec dc(fan->rays.size());
        for (size_t r = 0; r < n1; ++r) dc[r] = p1.terms[i].second.coeffs[r];
        for (size_t r = 0; r < p2.fan->rays.size(); ++r)
            dc[n1 + r] = p2.terms[i].second.coeffs[r];
        terms.emplace_back(p1.terms[i].first, make_divisor(fan, dc));
    }

    std::vector<IVec> candidates;
    for (const auto& v : p1.candidates) {
        IVec w = v;
        w.resize(fan->rank, Int(0));
        candidates.push_back(w);
    }
    for (const auto& v : p2.candidates) {
        IVec w(p1.fan->rank, Int(0));
        w.insert(w.end(), v.begin(), v.end());
        candidates.push_back(w);
    }
    return make_problem(fan, boundary, terms, candidates, {});
}

ProductCheck product_check(const CoupledProblem& p1, const CoupledProblem& p2) {
    CoupledProblem prod = product_problem(p1, p2);
    ProductCheck out;
    out.lhs = coupled_thresholds(prod).delta_upper;
    out.rhs = std::min(coupled_thresholds(p1).delta_upper,
                       coupled_thresholds(p2).delta_upper);
    out.equal = (out.lhs == out.rhs);
    return out;
}

ScalingReport threshold_scaling_suite(const CoupledProblem& p, const Rat& c) {
    if (c <= 0) fail_validation("BadWeight", "the scale must be positive");
    ScalingReport rep;
    rep.delta_base = coupled_thresholds(p).delta_upper;

    CoupledProblem scaled = p;
    for (auto& [w, l] : scaled.terms) w *= c;
    rep.delta_scaled = coupled_thresholds(scaled).delta_upper;
    rep.scaling_ok = (rep.delta_scaled == rep.delta_base / c);

    // proportional-class collapse: L_i == c'_i L_1 as classes
    rep.collapse_applicable = true;
    rep.collapse_ok = false;
    const std::vector<int>& cone0 = p.fan->max_cones[0];
    ToricDivisor base = normalize_divisor(p.terms[0].second, cone0);
    QVec ratios;
    for (const auto& [w, l] : p.terms) {
        ToricDivisor nd = normalize_divisor(l, cone0);
        Rat ratio(0);
        bool found = false;
        for (size_t r = 0; r < nd.coeffs.size() && !found; ++r)
            if (base.coeffs[r] != 0) {
                ratio = nd.coeffs[r] / base.coeffs[r];
                found = true;
            }
        if (!found || ratio <= 0) {
            rep.collapse_applicable = false;
            break;
        }
        for (size_t r = 0; r < nd.coeffs.size(); ++r)
            if (nd.coeffs[r] != base.coeffs[r] * ratio) {
                rep.collapse_applicable = false;
                break;
            }
        if (!rep.collapse_applicable) break;
        ratios.push_back(ratio);
    }
    if (rep.collapse_applicable) {
        Rat total(0);
        for (size_t i = 0; i < p.terms.size(); ++i) total += p.terms[i].first * ratios[i];
        CoupledProblem single = p;
        single.terms = {{total, p.terms[0].second}};
        rep.delta_collapsed = coupled_thresholds(single).delta_upper;
        rep.collapse_ok = (rep.delta_collapsed == rep.delta_base);
    }
    return rep;
}

} // namespace toric
