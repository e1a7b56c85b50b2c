#include "toricstab/divisor.hpp"

#include <algorithm>

namespace toric {

ToricDivisor make_divisor(std::shared_ptr<const Fan> fan, QVec coeffs) {
    if (!fan || !fan->validated) fail_validation("UnvalidatedFan", "divisor needs a validated fan");
    if (coeffs.size() != fan->rays.size())
        fail_validation("CoefficientCount", "one coefficient per ray required");
    return ToricDivisor{std::move(fan), std::move(coeffs)};
}

BoundaryData make_boundary(std::shared_ptr<const Fan> fan, QVec coeffs) {
    if (!fan || !fan->validated) fail_validation("UnvalidatedFan", "boundary needs a validated fan");
    if (coeffs.size() != fan->rays.size())
        fail_validation("CoefficientCount", "one coefficient per ray required");
    for (const Rat& b : coeffs)
        if (b < 0 || b >= 1)
            fail_validation("BoundaryCoefficient",
                            "boundary coefficients must lie in [0, 1)");
    return BoundaryData{std::move(fan), std::move(coeffs)};
}

namespace {

// psi evaluated from the cone coordinates in max cone c
Rat support_in_cone(const Fan& fan, const QVec& coeffs, int c, const IVec& v) {
    auto coords = cone_membership(fan, c, v);
    Rat val(0);
    const auto& mc = fan.max_cones[c];
    for (size_t i = 0; i < mc.size(); ++i) val += (*coords)[i] * (-coeffs[mc[i]]);
    return val;
}

} // namespace

Rat support_value(const ToricDivisor& d, const IVec& v) {
    std::vector<int> cones = containing_max_cones(*d.fan, v);
    if (cones.empty())
        fail_math("OutsideSupport", ivec_string(v) + " is outside the fan support");
    Rat val = support_in_cone(*d.fan, d.coeffs, cones[0], v);
    for (size_t i = 1; i < cones.size(); ++i)
        if (support_in_cone(*d.fan, d.coeffs, cones[i], v) != val)
            fail_math("InternalError", "support function disagrees across containing cones");
    return val;
}

ToricDivisor normalize_divisor(const ToricDivisor& d, const std::vector<int>& cone_rays) {
    const Fan& fan = *d.fan;
    if ((int)cone_rays.size() != fan.rank)
        fail_math("ConeNotFullDim", "normalization cone must be full-dimensional");
    QMat a(fan.rank, QVec(fan.rank));
    QVec rhs(fan.rank);
    for (int i = 0; i < fan.rank; ++i) {
        if (cone_rays[i] < 0 || cone_rays[i] >= (int)fan.rays.size())
            fail_validation("BadConeIndex", "normalization cone refers to a missing ray");
        for (int j = 0; j < fan.rank; ++j) a[i][j] = Rat(fan.rays[cone_rays[i]][j]);
        rhs[i] = d.coeffs[cone_rays[i]];
    }
    auto u = solve_linear(std::move(a), std::move(rhs));
    if (!u) fail_math("ConeNotFullDim", "normalization cone generators are dependent");
    ToricDivisor out = d;
    for (size_t r = 0; r < fan.rays.size(); ++r)
        out.coeffs[r] = d.coeffs[r] - dot(*u, fan.rays[r]);
    return out;
}

Polytope moment_polytope(const ToricDivisor& d) {
    const Fan& fan = *d.fan;
    std::vector<HalfSpace> hs;
    for (size_t r = 0; r < fan.rays.size(); ++r) {
        HalfSpace h;
        h.normal = qvec_of(fan.rays[r]);
        h.offset = -d.coeffs[r];
        hs.push_back(h);
    }
    try {
        return vertices_from_halfspaces(fan.rank, hs);
    } catch (const Error& e) {
        if (e.kind() == "Unbounded" && fan.complete)
            fail_math("InternalError", "moment polytope of a complete fan cannot be unbounded");
        throw;
    }
}

bool is_big(const ToricDivisor& d) {
    try {
        return moment_polytope(d).full_dim;
    } catch (const Error& e) {
        if (e.kind() == "Empty") return false;
        throw;
    }
}

Rat volume_x(const ToricDivisor& d) {
    Rat fact(1);
    for (int i = 2; i <= d.fan->rank; ++i) fact *= i;
    return fact * volume_and_barycenter(moment_polytope(d)).volume;
}

OkounkovBody okounkov_body(const ToricDivisor& d, const FlagChain& flag) {
    if (!flag.complete) fail_math("IncompleteFlag", "Okounkov bodies need a complete flag");
    if (d.fan->rays != flag.level_fans[0].rays ||
        d.fan->max_cones != flag.level_fans[0].max_cones)
        fail_validation("FanMismatch", "divisor and flag live on different fans");
    if (!is_big(d)) fail_math("NotBig", "Okounkov bodies are defined for big classes");
    int n = flag.ambient_rank;

    ToricDivisor nd = normalize_divisor(d, flag.tau[0]);
    Polytope pd = moment_polytope(nd);

    QMat phi(n, QVec(n)); // rows <., v_{1,k}>
    for (int k = 1; k <= n; ++k) phi[k - 1] = qvec_of(flag.v[1][k]);
    QMat psi(n, QVec(n, Rat(0)));
    for (int j = 1; j <= n; ++j)
        for (int k = j; k <= n; ++k) psi[j - 1][k - 1] = flag.cprime[j][k];

    OkounkovBody out;
    out.transform = qmat_mul(psi, phi);
    out.body = affine_image(pd, out.transform, QVec(n, Rat(0)));

    // |det(psi . phi)| = mult(tau_0)^{-1} * mult(tau_0) = 1
    if (volume_and_barycenter(out.body).volume != volume_and_barycenter(pd).volume)
        fail_math("InternalError", "Okounkov body volume differs from the moment polytope");
    return out;
}

STPair s_t_invariants(const ToricDivisor& d, const IVec& v) {
    if (!is_primitive(v)) fail_math("NotPrimitive", "valuation vectors must be primitive");
    Rat a_v = -support_value(d, v); // throws OutsideSupport when outside
    Polytope pd = moment_polytope(d);
    if (!pd.full_dim) fail_math("NotBig", "S/T need a big divisor");
    MassData md = volume_and_barycenter(pd);
    Rat mean = dot(qvec_of(v), *md.barycenter);
    Rat best = dot(qvec_of(v), pd.vertices[0]);
    for (const auto& u : pd.vertices) best = std::max(best, dot(qvec_of(v), u));
    return {a_v + mean, a_v + best};
}

Rat flag_s_invariant(const ToricDivisor& d, const FlagChain& flag, int level) {
    if (!flag.complete) fail_math("IncompleteFlag", "flag S-invariants need a complete flag");
    int n = flag.ambient_rank;
    if (level < 1 || level > n) fail_validation("BadLevel", "level out of range");
    Rat total(0);
    for (int k = level; k <= n; ++k) {
        if (flag.cprime[level][k] == 0) continue;
        total += flag.cprime[level][k] * s_t_invariants(d, flag.v[1][k]).s;
    }
    // dual route: barycenter coordinate of the Okounkov body
    OkounkovBody ok = okounkov_body(d, flag);
    Rat coord = (*volume_and_barycenter(ok.body).barycenter)[level - 1];
    if (coord != total)
        fail_math("InternalError", "flag S-invariant disagrees with the body barycenter");
    return total;
}

Rat log_discrepancy(const BoundaryData& b, const IVec& v) {
    const Fan& fan = *b.fan;
    std::vector<int> cones = containing_max_cones(fan, v);
    if (cones.empty()) fail_math("OutsideSupport", ivec_string(v) + " outside the support");
    auto value_in = [&](int c) {
        auto coords = cone_membership(fan, c, v);
        Rat val(0);
        const auto& mc = fan.max_cones[c];
        for (size_t i = 0; i < mc.size(); ++i)
            val += (*coords)[i] * (Rat(1) - b.coeffs[mc[i]]);
        return val;
    };
    Rat val = value_in(cones[0]);
    for (size_t i = 1; i < cones.size(); ++i)
        if (value_in(cones[i]) != val)
            fail_math("InternalError", "log discrepancy disagrees across containing cones");
    return val;
}

Rat flag_log_discrepancy(const BoundaryData& b, const FlagChain& flag, int level) {
    if (!flag.complete) fail_math("IncompleteFlag", "flag A-values need a complete flag");
    int n = flag.ambient_rank;
    if (level < 1 || level > n) fail_validation("BadLevel", "level out of range");
    const Fan& fan = *b.fan;
    Rat total(0);
    for (int k = level; k <= n; ++k) {
        if (flag.cprime[level][k] == 0) continue;
        int ray = fan.ray_index(flag.v[1][k]);
        if (ray < 0) fail_math("InternalError", "v_{1,k} is not a ray of the base fan");
        total += flag.cprime[level][k] * (Rat(1) - b.coeffs[ray]);
    }
    return total;
}

} // namespace toric
