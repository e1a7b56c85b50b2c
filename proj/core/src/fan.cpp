#include "toricstab/fan.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace toric {

RationalCone Fan::cone(int c) const {
    RationalCone out;
    out.ambient_rank = rank;
    for (int i : max_cones[c]) out.generators.push_back(rays[i]);
    return out;
}

int Fan::ray_index(const IVec& v) const {
    for (size_t i = 0; i < rays.size(); ++i)
        if (rays[i] == v) return (int)i;
    return -1;
}

namespace {

// deterministic probe set for the completeness certificate
std::vector<IVec> completeness_probes(const Fan& fan) {
    std::set<IVec> probes;
    int n = fan.rank;
    for (const IVec& r : fan.rays) {
        probes.insert(r);
        IVec neg(r.size());
        for (size_t i = 0; i < r.size(); ++i) neg[i] = -r[i];
        probes.insert(neg);
    }
    for (int i = 0; i < n; ++i) {
        IVec e(n, Int(0));
        e[i] = 1;
        probes.insert(e);
        e[i] = -1;
        probes.insert(e);
    }
    for (size_t i = 0; i < fan.rays.size(); ++i)
        for (size_t j = i + 1; j < fan.rays.size(); ++j) {
            IVec s(n);
            for (int c = 0; c < n; ++c) s[c] = fan.rays[i][c] + fan.rays[j][c];
            if (!is_zero(s)) probes.insert(primitive_part(s));
        }
    // small deterministic pseudo-random integer vectors
    unsigned long state = 0x9e3779b9ull;
    auto next = [&state]() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return (long)((state >> 33) % 9) - 4;
    };
    for (int k = 0; k < 24; ++k) {
        IVec w(n);
        for (int i = 0; i < n; ++i) w[i] = next();
        if (!is_zero(w)) probes.insert(primitive_part(w));
    }
    return {probes.begin(), probes.end()};
}

} // namespace

std::optional<QVec> cone_membership(const Fan& fan, int c, const IVec& v) {
    const auto& idx = fan.max_cones[c];
    if ((int)idx.size() == fan.rank) {
        RationalCone cone = fan.cone(c);
        QMat a(fan.rank, QVec(fan.rank));
        for (int j = 0; j < fan.rank; ++j)
            for (int i = 0; i < fan.rank; ++i) a[i][j] = Rat(cone.generators[j][i]);
        auto x = solve_linear(std::move(a), qvec_of(v));
        if (!x) return std::nullopt;
        for (const Rat& t : *x)
            if (t < 0) return std::nullopt;
        return x;
    }
    // lower-dimensional cone: v must lie in the span with nonnegative coords
    QMat a(fan.rank, QVec(idx.size()));
    for (size_t j = 0; j < idx.size(); ++j)
        for (int i = 0; i < fan.rank; ++i) a[i][j] = Rat(fan.rays[idx[j]][i]);
    // least-squares-free exact solve: row reduce [A | v]
    QMat aug = a;
    QVec b = qvec_of(v);
    for (int i = 0; i < fan.rank; ++i) aug[i].push_back(b[i]);
    size_t rows = aug.size(), cols = idx.size();
    std::vector<int> pivot_of_col(cols, -1);
    int rank = 0;
    for (size_t col = 0; col < cols && (size_t)rank < rows; ++col) {
        size_t piv = rank;
        while (piv < rows && aug[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(aug[piv], aug[rank]);
        Rat inv = Rat(1) / aug[rank][col];
        for (size_t cc = 0; cc <= cols; ++cc) aug[rank][cc] *= inv;
        for (size_t r = 0; r < rows; ++r) {
            if ((int)r == rank || aug[r][col] == 0) continue;
            Rat f = aug[r][col];
            for (size_t cc = 0; cc <= cols; ++cc) aug[r][cc] -= f * aug[rank][cc];
        }
        pivot_of_col[col] = rank;
        ++rank;
    }
    for (size_t r = rank; r < rows; ++r)
        if (aug[r][cols] != 0) return std::nullopt; // v outside the span
    QVec x(cols, Rat(0));
    for (size_t col = 0; col < cols; ++col)
        if (pivot_of_col[col] >= 0) x[col] = aug[pivot_of_col[col]][cols];
    for (const Rat& t : x)
        if (t < 0) return std::nullopt;
    return x;
}

std::vector<int> containing_max_cones(const Fan& fan, const IVec& v) {
    std::vector<int> out;
    for (size_t c = 0; c < fan.max_cones.size(); ++c)
        if (cone_membership(fan, (int)c, v)) out.push_back((int)c);
    return out;
}

ConePosition classify_position(const Fan& fan, const IVec& v) {
    ConePosition pos;
    int ray = fan.ray_index(v);
    if (ray >= 0) {
        pos.kind = ConePosition::OnRay;
        pos.ray = ray;
        for (size_t c = 0; c < fan.max_cones.size(); ++c) {
            const auto& mc = fan.max_cones[c];
            if (std::find(mc.begin(), mc.end(), ray) != mc.end()) {
                pos.max_cone = (int)c;
                break;
            }
        }
        return pos;
    }
    std::vector<int> inside = containing_max_cones(fan, v);
    if (inside.empty()) return pos; // Outside
    pos.max_cone = inside[0];
    if (inside.size() == 1) {
        auto coords = cone_membership(fan, inside[0], v);
        bool strict = std::all_of(coords->begin(), coords->end(),
                                  [](const Rat& t) { return t > 0; });
        pos.kind = strict ? ConePosition::InteriorMax : ConePosition::OnFace;
    } else {
        pos.kind = ConePosition::OnFace;
    }
    return pos;
}

bool in_support(const Fan& fan, const IVec& v) {
    return classify_position(fan, v).kind != ConePosition::Outside;
}

Fan validate_fan(Fan fan) {
    if (fan.rank < 1 || fan.rank > 4)
        fail_validation("UnsupportedRank", "fan rank must be between 1 and 4");
    if (fan.rays.empty() || fan.max_cones.empty())
        fail_validation("EmptyFan", "fan needs rays and max cones");
    for (const IVec& r : fan.rays) {
        if ((int)r.size() != fan.rank)
            fail_validation("RankMismatch", "ray length does not match fan rank");
        if (is_zero(r)) fail_validation("NonPrimitiveRay", "zero ray");
        if (!is_primitive(r))
            fail_validation("NonPrimitiveRay", "ray " + ivec_string(r) + " has content > 1");
    }
    for (size_t i = 0; i < fan.rays.size(); ++i)
        for (size_t j = i + 1; j < fan.rays.size(); ++j)
            if (fan.rays[i] == fan.rays[j])
                fail_validation("DuplicateRay", "ray " + ivec_string(fan.rays[i]) + " repeated");

    std::vector<bool> used(fan.rays.size(), false);
    fan.smooth = true;
    for (auto& mc : fan.max_cones) {
        std::sort(mc.begin(), mc.end());
        mc.erase(std::unique(mc.begin(), mc.end()), mc.end());
        if (mc.empty() || (int)mc.size() > fan.rank)
            fail_validation("NonSimplicialCone", "max cone with too many generators");
        std::vector<IVec> gens;
        for (int i : mc) {
            if (i < 0 || i >= (int)fan.rays.size())
                fail_validation("BadConeIndex", "cone refers to a missing ray");
            used[i] = true;
            gens.push_back(fan.rays[i]);
        }
        Int index;
        try {
            index = lattice_index(gens);
        } catch (const Error& e) {
            fail_validation("NonSimplicialCone",
                            "max cone generators are linearly dependent");
        }
        if ((int)mc.size() < fan.rank || index != 1) fan.smooth = false;
    }
    std::sort(fan.max_cones.begin(), fan.max_cones.end());
    fan.max_cones.erase(std::unique(fan.max_cones.begin(), fan.max_cones.end()),
                        fan.max_cones.end());
    for (size_t i = 0; i < used.size(); ++i)
        if (!used[i])
            fail_validation("UnusedRay", "ray " + ivec_string(fan.rays[i]) + " not in any cone");

    fan.simplicial = true; // by the independence checks above
    fan.complete = true;
    for (const IVec& p : completeness_probes(fan))
        if (!in_support(fan, p)) { fan.complete = false; break; }
    fan.validated = true;
    return fan;
}

Fan star_subdivide(const Fan& fan, const IVec& v) {
    if (!is_primitive(v)) fail_math("NotPrimitive", "subdivision point must be primitive");
    if (fan.ray_index(v) >= 0) return fan; // trivial subdivision
    if (!in_support(fan, v))
        fail_math("OutsideSupport", "subdivision point " + ivec_string(v) + " outside the fan");

    Fan out = fan;
    int vi = (int)out.rays.size();
    out.rays.push_back(v);
    std::vector<std::vector<int>> cones;
    for (size_t c = 0; c < fan.max_cones.size(); ++c) {
        auto coords = cone_membership(fan, (int)c, v);
        if (!coords) {
            cones.push_back(fan.max_cones[c]);
            continue;
        }
        const auto& mc = fan.max_cones[c];
        // replace by joins of v with the facets omitting a generator that
        // carries a positive coordinate
        for (size_t i = 0; i < mc.size(); ++i) {
            if ((*coords)[i] == 0) continue;
            std::vector<int> nc;
            for (size_t j = 0; j < mc.size(); ++j)
                if (j != i) nc.push_back(mc[j]);
            nc.push_back(vi);
            std::sort(nc.begin(), nc.end());
            cones.push_back(nc);
        }
    }
    std::sort(cones.begin(), cones.end());
    cones.erase(std::unique(cones.begin(), cones.end()), cones.end());
    out.max_cones = cones;
    out.validated = false;
    return validate_fan(out);
}

QuotientFan quotient_fan(const Fan& fan, const IVec& v,
                         const std::vector<int>* coordinate_order) {
    int vi = fan.ray_index(v);
    if (vi < 0) fail_math("NotARay", ivec_string(v) + " is not a ray of the fan");

    QuotientFan out;
    out.lattice = quotient_lattice(fan.rank, v, coordinate_order);

    std::map<IVec, int> ray_of;
    Fan child;
    child.rank = fan.rank - 1;
    for (size_t c = 0; c < fan.max_cones.size(); ++c) {
        const auto& mc = fan.max_cones[c];
        if (std::find(mc.begin(), mc.end(), vi) == mc.end()) continue;
        std::vector<int> image;
        for (int i : mc) {
            if (i == vi) continue;
            auto pr = out.lattice.project_ray(fan.rays[i]);
            if (!pr)
                fail_math("InternalError", "star ray collapses under the quotient");
            auto it = ray_of.find(pr->first);
            int idx;
            if (it == ray_of.end()) {
                idx = (int)child.rays.size();
                child.rays.push_back(pr->first);
                ray_of.emplace(pr->first, idx);
                out.source_ray.push_back(i);
                out.ray_mult.push_back(pr->second);
            } else {
                idx = it->second;
                if (out.source_ray[idx] != i)
                    fail_math("InternalError", "two star rays share a quotient image");
            }
            image.push_back(idx);
        }
        std::sort(image.begin(), image.end());
        out.cone_map.emplace_back((int)c, (int)child.max_cones.size());
        child.max_cones.push_back(image);
    }
    if (child.rays.empty())
        fail_math("InternalError", "quotient fan has no rays");
    // child cones were emitted unsorted and may repeat only if the parent
    // star was degenerate; keep the order aligned with cone_map
    out.fan = validate_fan(child);
    // validate_fan sorts and dedupes max cones: rebuild the cone map against
    // the validated order
    std::vector<std::pair<int, int>> remap;
    for (auto [parent_c, old_child] : out.cone_map) {
        const auto& cone = child.max_cones[old_child];
        auto it = std::find(out.fan.max_cones.begin(), out.fan.max_cones.end(), cone);
        remap.emplace_back(parent_c, (int)(it - out.fan.max_cones.begin()));
    }
    out.cone_map = remap;
    return out;
}

std::vector<int> cyclic_ray_order(const Fan& fan) {
    if (fan.rank != 2) fail_math("InternalError", "cyclic order needs a rank-2 fan");
    std::vector<int> idx(fan.rays.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = (int)i;
    auto half = [&](const IVec& r) { // 0 for upper half (y>0 or y=0,x>0), 1 otherwise
        if (r[1] > 0 || (r[1] == 0 && r[0] > 0)) return 0;
        return 1;
    };
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        const IVec& ra = fan.rays[a];
        const IVec& rb = fan.rays[b];
        int ha = half(ra), hb = half(rb);
        if (ha != hb) return ha < hb;
        Int cross = ra[0] * rb[1] - ra[1] * rb[0];
        return cross > 0;
    });
    return idx;
}

} // namespace toric
