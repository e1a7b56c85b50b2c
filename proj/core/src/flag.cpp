#include "toricstab/flag.hpp"

#include <algorithm>

namespace toric {

namespace {

std::vector<int> seeded_order(int rank, unsigned seed, int level) {
    std::vector<int> order(rank);
    for (int i = 0; i < rank; ++i) order[i] = i;
    if (seed == 0 || rank <= 1) return order;
    unsigned s = seed * 2654435761u + (unsigned)level * 40503u;
    std::rotate(order.begin(), order.begin() + (s % rank), order.end());
    if ((s / 7) % 2) std::reverse(order.begin(), order.end());
    return order;
}

} // namespace

Int FlagChain::tau0_multiplicity() const {
    std::vector<IVec> gens;
    for (int r : tau[0]) gens.push_back(level_fans[0].rays[r]);
    return lattice_index(gens);
}

FlagChain build_flag_chain(const Fan& fan, const std::vector<IVec>& vectors,
                           const FlagOptions& opts) {
    if (!fan.validated) fail_validation("UnvalidatedFan", "validate the fan first");
    int n = fan.rank;
    int depth = (int)vectors.size();
    if (depth == 0) fail_validation("EmptyFlag", "flag needs at least one vector");
    if (depth > n) fail_validation("FlagTooDeep", "flag depth exceeds the ambient rank");

    FlagChain ch;
    ch.ambient_rank = n;
    ch.depth = depth;
    ch.complete = (depth == n);
    ch.level_fans.push_back(fan);

    // Pass 1: normalize inputs, subdivide and quotient level by level.
    for (int k = 1; k <= depth; ++k) {
        int cur_rank = n - k + 1;
        const Fan& sigma = ch.level_fans[k - 1];
        IVec raw = vectors[k - 1];
        if ((int)raw.size() == n && cur_rank != n) {
            IVec w = raw;
            for (int i = 0; i < k - 1; ++i) w = ch.quotients[i].lattice.project(w);
            if (is_zero(w))
                fail_math("ZeroVector",
                          "flag seed " + ivec_string(raw) + " collapses at level " +
                              std::to_string(k));
            raw = w;
        } else if ((int)raw.size() != cur_rank) {
            fail_validation("RankMismatch",
                            "flag vector " + std::to_string(k) + " has length " +
                                std::to_string(raw.size()) + ", expected " +
                                std::to_string(cur_rank) + " (level) or " +
                                std::to_string(n) + " (seed)");
        }
        IVec vk = primitive_part(raw);
        ConePosition pos = classify_position(sigma, vk);
        if (pos.kind == ConePosition::Outside)
            fail_math("OutsideSupport",
                      "flag vector " + ivec_string(vk) + " outside the level-" +
                          std::to_string(k - 1) + " fan");
        if (pos.kind == ConePosition::OnFace)
            fail_math("AmbiguousCone",
                      "flag vector " + ivec_string(vk) +
                          " lies on a wall between max cones; the cone data is only "
                          "defined for vectors interior to a max cone or on a ray");
        ch.level_vectors.push_back(vk);
        Fan tilde = star_subdivide(sigma, vk);
        ch.subdivided_fans.push_back(tilde);
        bool last_level = (k == depth);
        if (ch.complete && last_level) break; // Sigma_n would have rank 0
        std::vector<int> order = seeded_order(cur_rank, opts.quotient_basis_seed, k);
        QuotientFan q = quotient_fan(tilde, vk,
                                     opts.quotient_basis_seed ? &order : nullptr);
        ch.quotients.push_back(q);
        ch.level_fans.push_back(q.fan);
    }
    if (!ch.complete) return ch;

    // Pass 2: the cone sequence, from the deepest level back to the top.
    ch.tau.assign(n, {});
    ch.gamma.assign(n, {});
    ch.v.assign(n + 1, std::vector<IVec>(n + 1));
    ch.m.assign(n + 1, std::vector<Int>(n + 1, Int(0)));
    ch.c.assign(n + 1, std::vector<Rat>(n + 1, Rat(0)));
    ch.cprime.assign(n + 1, std::vector<Rat>(n + 1, Rat(0)));
    for (int k = 1; k <= n; ++k) ch.m[1][k] = 1;

    const Fan& deepest = ch.level_fans[n - 1]; // rank 1
    int vn_ray = deepest.ray_index(ch.level_vectors[n - 1]);
    if (vn_ray < 0)
        fail_math("OutsideSupport", "the last flag vector is not a ray of the final fan");
    ch.tau[n - 1] = {vn_ray};
    ch.gamma[n - 1] = {ch.subdivided_fans[n - 1].ray_index(ch.level_vectors[n - 1])};
    ch.v[n][n] = ch.level_vectors[n - 1];
    ch.c[n][n] = 1; // v_n = v_{n,n}

    for (int j = n - 1; j >= 1; --j) {
        const Fan& sigma = ch.level_fans[j - 1];
        const Fan& tilde = ch.subdivided_fans[j - 1];
        const QuotientFan& q = ch.quotients[j - 1];
        const IVec& vj = ch.level_vectors[j - 1];

        // tau_j as a max-cone index of Sigma_j
        std::vector<int> tau_j = ch.tau[j];
        std::sort(tau_j.begin(), tau_j.end());
        auto it = std::find(q.fan.max_cones.begin(), q.fan.max_cones.end(), tau_j);
        if (it == q.fan.max_cones.end())
            fail_math("InternalError", "tau_j is not a max cone of the quotient fan");
        int tau_j_idx = (int)(it - q.fan.max_cones.begin());

        // gamma_{j-1}: the star max cone of Sigma~_{j-1} over tau_j
        int gamma_idx = -1;
        for (auto [parent, child] : q.cone_map)
            if (child == tau_j_idx) { gamma_idx = parent; break; }
        if (gamma_idx < 0)
            fail_math("InternalError", "tau_j has no preimage star cone");
        ch.gamma[j - 1] = tilde.max_cones[gamma_idx];

        // lifts v_{j,k} and multiplicities m_{j+1,k}
        int vj_tilde_ray = tilde.ray_index(vj);
        std::vector<int> lift_rays; // ray indices in Sigma~_{j-1}
        for (int k = j + 1; k <= n; ++k) {
            int child_ray = q.fan.ray_index(ch.v[j + 1][k]);
            if (child_ray < 0)
                fail_math("InternalError", "v_{j+1,k} is not a ray of the quotient fan");
            int src = q.source_ray[child_ray];
            ch.v[j][k] = tilde.rays[src];
            ch.m[j + 1][k] = q.ray_mult[child_ray];
            lift_rays.push_back(src);
        }

        // tau_{j-1} and the remaining generator v_{j,j}
        ConePosition pos = classify_position(sigma, vj);
        if (pos.kind == ConePosition::OnRay) {
            // trivial subdivision: tau_{j-1} = gamma_{j-1}
            ch.tau[j - 1] = ch.gamma[j - 1];
            ch.v[j][j] = vj;
        } else {
            std::vector<int> inside = containing_max_cones(sigma, vj);
            if (inside.size() != 1)
                fail_math("AmbiguousCone", "flag vector " + ivec_string(vj) +
                                               " is not interior to a unique max cone");
            ch.tau[j - 1] = sigma.max_cones[inside[0]];
            int extra = -1;
            for (int r : ch.tau[j - 1]) {
                // old rays keep their indices in the subdivided fan
                if (std::find(lift_rays.begin(), lift_rays.end(), r) == lift_rays.end()) {
                    if (extra >= 0)
                        fail_math("InternalError", "tau_{j-1} has two unmatched generators");
                    extra = r;
                }
            }
            if (extra < 0)
                fail_math("InternalError", "tau_{j-1} has no unmatched generator");
            ch.v[j][j] = sigma.rays[extra];
        }

        // coefficient row: v_j = sum_{k=j}^n c_{j,k} v_{j,k}
        RationalCone tau_cone;
        tau_cone.ambient_rank = n - j + 1;
        for (int k = j; k <= n; ++k) tau_cone.generators.push_back(ch.v[j][k]);
        QVec coords = cone_coordinates(vj, tau_cone);
        for (int k = j; k <= n; ++k) ch.c[j][k] = coords[k - j];
    }

    for (int j = 1; j <= n; ++j)
        for (int k = j; k <= n; ++k) {
            Rat denom(1);
            for (int i = 1; i <= j; ++i) denom *= Rat(ch.m[i][k]);
            ch.cprime[j][k] = ch.c[j][k] / denom;
        }

    ch.admissible = true;
    for (int j = 1; j <= n && ch.admissible; ++j) {
        const Fan& sigma = ch.level_fans[j - 1];
        if (sigma.ray_index(ch.level_vectors[j - 1]) < 0) ch.admissible = false;
    }
    if (ch.admissible) {
        ch.l.assign(n + 1, Int(1));
        std::vector<IVec> gens;
        for (int j = 1; j <= n; ++j) {
            gens.push_back(ch.v[1][j]);
            ch.l[j] = lattice_index(gens);
        }
    }
    return ch;
}

} // namespace toric
