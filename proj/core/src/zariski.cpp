#include "toricstab/zariski.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace toric {

namespace {

Rat min_over_vertices(const Polytope& p, const IVec& ray) {
    Rat best = dot(qvec_of(ray), p.vertices[0]);
    for (const auto& u : p.vertices) best = std::min(best, dot(qvec_of(ray), u));
    return best;
}

// concavity of the PL function with h(v_rho) = -a_rho across every wall: a
// concave support function lies below the linear extension of each cone piece
void assert_nef(const Fan& fan, const QVec& coeffs, const char* what) {
    std::vector<int> order = cyclic_ray_order(fan);
    int n = (int)order.size();
    for (int i = 0; i < n; ++i) {
        int prev = order[(i + n - 1) % n];
        int cur = order[i];
        int next = order[(i + 1) % n];
        QMat a = {{Rat(fan.rays[prev][0]), Rat(fan.rays[cur][0])},
                  {Rat(fan.rays[prev][1]), Rat(fan.rays[cur][1])}};
        auto st = solve_linear(a, qvec_of(fan.rays[next]));
        if (!st) fail_math("InternalError", "degenerate ray pair in the nef check");
        Rat lhs = (*st)[0] * (-coeffs[prev]) + (*st)[1] * (-coeffs[cur]);
        if (lhs < -coeffs[next])
            fail_math("InternalError", std::string(what) + ": positive part is not nef");
    }
}

} // namespace

ZariskiPair zariski_surface(const ToricDivisor& d) {
    const Fan& fan = *d.fan;
    if (fan.rank != 2) fail_math("NotASurface", "Zariski decomposition needs a rank-2 fan");
    if (!fan.complete) fail_math("NotComplete", "Zariski decomposition needs a complete fan");
    Polytope pd = moment_polytope(d);
    if (!pd.full_dim) fail_math("NotBig", "Zariski decomposition of a non-big divisor");

    ToricDivisor p = d;
    for (size_t r = 0; r < fan.rays.size(); ++r)
        p.coeffs[r] = -min_over_vertices(pd, fan.rays[r]);
    ToricDivisor n = d;
    for (size_t r = 0; r < fan.rays.size(); ++r) {
        n.coeffs[r] = d.coeffs[r] - p.coeffs[r];
        if (n.coeffs[r] < 0)
            fail_math("InternalError", "negative part has a negative coefficient");
    }
    assert_nef(fan, p.coeffs, "zariski_surface");
    if (moment_polytope(p).vertices != pd.vertices)
        fail_math("InternalError", "positive part changed the moment polytope");
    return {p, n};
}

namespace {

// cyclic hull order of a 2D polytope's vertices around the centroid
std::vector<int> polygon_cycle(const Polytope& p) {
    size_t nv = p.vertices.size();
    QVec center(2, Rat(0));
    for (const auto& v : p.vertices) {
        center[0] += v[0];
        center[1] += v[1];
    }
    center[0] /= (long)nv;
    center[1] /= (long)nv;
    std::vector<int> idx(nv);
    for (size_t i = 0; i < nv; ++i) idx[i] = (int)i;
    auto half = [&](int i) {
        Rat dx = p.vertices[i][0] - center[0];
        Rat dy = p.vertices[i][1] - center[1];
        if (dy > 0 || (dy == 0 && dx > 0)) return 0;
        return 1;
    };
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        int ha = half(a), hb = half(b);
        if (ha != hb) return ha < hb;
        Rat ax = p.vertices[a][0] - center[0], ay = p.vertices[a][1] - center[1];
        Rat bx = p.vertices[b][0] - center[0], by = p.vertices[b][1] - center[1];
        return ax * by - ay * bx > 0;
    });
    return idx;
}

struct AffinePoint { // coordinates affine in the parameter x
    QVec c0; // constant part
    QVec c1; // slope part
    QVec at(const Rat& x) const { return {c0[0] + c1[0] * x, c0[1] + c1[1] * x}; }
};

} // namespace

std::vector<IVec> dilated_lattice_points(const Polytope& p, const Int& m) {
    std::vector<IVec> out;
    int dim = p.dim;
    std::vector<Int> lo(dim), hi(dim);
    for (int c = 0; c < dim; ++c) {
        Rat mn = p.vertices[0][c], mx = p.vertices[0][c];
        for (const auto& v : p.vertices) {
            mn = std::min(mn, v[c]);
            mx = std::max(mx, v[c]);
        }
        Rat smn = mn * Rat(m), smx = mx * Rat(m);
        mpz_cdiv_q(lo[c].get_mpz_t(), smn.get_num().get_mpz_t(), smn.get_den().get_mpz_t());
        mpz_fdiv_q(hi[c].get_mpz_t(), smx.get_num().get_mpz_t(), smx.get_den().get_mpz_t());
    }
    IVec pt(dim);
    auto inside = [&](const IVec& u) {
        for (const auto& h : p.halfspaces) {
            Rat s(0);
            for (int c = 0; c < dim; ++c) s += h.normal[c] * Rat(u[c]);
            if (s < h.offset * Rat(m)) return false;
        }
        return true;
    };
    std::function<void(int)> rec = [&](int c) {
        if (c == dim) {
            if (inside(pt)) out.push_back(pt);
            return;
        }
        for (Int x = lo[c]; x <= hi[c]; ++x) {
            pt[c] = x;
            rec(c + 1);
        }
    };
    rec(0);
    return out;
}

ZariskiPath s_via_surface_zariski(const ToricDivisor& l, const FlagChain& flag) {
    const Fan& fan = *l.fan;
    if (fan.rank != 2) fail_math("NotASurface", "the surface integrals need a rank-2 fan");
    if (!fan.complete) fail_math("NotComplete", "the surface integrals need a complete fan");
    if (!flag.complete || flag.ambient_rank != 2)
        fail_math("IncompleteFlag", "a complete depth-2 flag is required");
    if (!is_big(l)) fail_math("NotBig", "S-invariants need a big divisor");

    ZariskiPath path;
    path.subdivided = flag.subdivided_fans[0];
    const Fan& xt = path.subdivided;
    const IVec& v1 = flag.level_vectors[0];
    path.e_ray = xt.ray_index(v1);

    // sigma*L: old coefficients, -psi_L(v1) on a new exceptional ray
    QVec coeffs(xt.rays.size());
    for (size_t r = 0; r < fan.rays.size(); ++r) coeffs[r] = l.coeffs[r];
    if (xt.rays.size() > fan.rays.size()) coeffs.back() = -support_value(l, v1);
    path.e_coeff = coeffs[path.e_ray];

    Polytope pl = moment_polytope(l); // = P_{sigma*L}
    Rat vol_x = Rat(2) * volume_and_barycenter(pl).volume;

    auto level_of = [&](const QVec& u) -> Rat { return path.e_coeff + dot(u, v1); };
    std::set<Rat> levels;
    for (const auto& u : pl.vertices) levels.insert(level_of(u));
    path.u1 = *levels.begin();
    path.t1 = *levels.rbegin();

    // Y_2 data: gamma_0 = Cone(v_1, v_{1,2})
    const IVec& v12 = flag.v[1][2];
    int side_ray = xt.ray_index(v12);
    if (side_ray < 0) fail_math("InternalError", "v_{1,2} is not a ray of the blowup fan");
    Rat gamma_mult = Rat(lattice_index({v1, v12}));

    // primitive direction of the slice lines
    IVec dir = primitive_part(IVec{-v1[1], v1[0]});
    int dc = (dir[0] != 0) ? 0 : 1;

    std::vector<int> cycle = polygon_cycle(pl);
    std::vector<Rat> base(levels.begin(), levels.end());

    Rat s1(0), s2(0);
    for (size_t bi = 0; bi + 1 < base.size(); ++bi) {
        Rat xa = base[bi], xb = base[bi + 1];
        Rat xm = (xa + xb) / 2;

        // parametric vertices of P_x = P_L  cut by <u, v1> >= x - e_coeff
        std::vector<AffinePoint> pts;
        for (const auto& u : pl.vertices)
            if (level_of(u) >= xb) pts.push_back({u, QVec{Rat(0), Rat(0)}});
        std::vector<AffinePoint> moving;
        for (size_t i = 0; i < cycle.size(); ++i) {
            const QVec& w1 = pl.vertices[cycle[i]];
            const QVec& w2 = pl.vertices[cycle[(i + 1) % cycle.size()]];
            Rat s1v = level_of(w1), s2v = level_of(w2);
            if (!((s1v < xm && xm < s2v) || (s2v < xm && xm < s1v))) continue;
            Rat c = Rat(1) / (s2v - s1v);
            AffinePoint m;
            m.c0 = {w1[0] - s1v * c * (w2[0] - w1[0]), w1[1] - s1v * c * (w2[1] - w1[1])};
            m.c1 = {c * (w2[0] - w1[0]), c * (w2[1] - w1[1])};
            moving.push_back(m);
        }
        if (moving.size() != 2)
            fail_math("InternalError", "slice does not cross exactly two edges");
        pts.push_back(moving[0]);
        pts.push_back(moving[1]);

        // refine at crossings of the per-ray linear candidates
        std::set<Rat> cuts = {xa, xb};
        for (const auto& ray : xt.rays) {
            std::vector<LinFn> fns;
            for (const auto& p : pts)
                fns.push_back({dot(p.c1, ray), dot(p.c0, ray)});
            for (size_t i = 0; i < fns.size(); ++i)
                for (size_t j = i + 1; j < fns.size(); ++j) {
                    if (fns[i].a == fns[j].a) continue;
                    Rat x = (fns[j].b - fns[i].b) / (fns[i].a - fns[j].a);
                    if (xa < x && x < xb) cuts.insert(x);
                }
        }

        std::vector<Rat> grid(cuts.begin(), cuts.end());
        for (size_t gi = 0; gi + 1 < grid.size(); ++gi) {
            ZariskiInterval iv;
            iv.lo = grid[gi];
            iv.hi = grid[gi + 1];
            Rat mid = (iv.lo + iv.hi) / 2;

            for (size_t r = 0; r < xt.rays.size(); ++r) {
                const IVec& ray = xt.rays[r];
                // a'_rho(x) = -min over the parametric vertices
                LinFn best{Rat(0), Rat(0)};
                Rat best_mid;
                bool first = true;
                std::vector<LinFn> fns;
                for (const auto& p : pts) {
                    LinFn f{dot(p.c1, ray), dot(p.c0, ray)};
                    fns.push_back(f);
                    Rat v = f.eval(mid);
                    if (first || v < best_mid) {
                        best = f;
                        best_mid = v;
                        first = false;
                    }
                }
                for (const auto& f : fns) {
                    if (best.eval(iv.lo) > f.eval(iv.lo) || best.eval(iv.hi) > f.eval(iv.hi))
                        fail_math("InternalError", "minimizer switches inside an interval");
                }
                LinFn aprime{-best.a, -best.b};
                LinFn acur{Rat(0), coeffs[r]};
                if ((int)r == path.e_ray) acur = {Rat(-1), path.e_coeff};
                LinFn ncur{acur.a - aprime.a, acur.b - aprime.b};
                if (ncur.eval(iv.lo) < 0 || ncur.eval(iv.hi) < 0)
                    fail_math("InternalError", "parametric negative part dips below zero");
                iv.positive_coeffs.push_back(aprime);
                iv.negative_coeffs.push_back(ncur);
            }
            // nef at both endpoints implies nef on the interval
            for (const Rat& x : {iv.lo, iv.hi}) {
                QVec pc(xt.rays.size());
                for (size_t r = 0; r < xt.rays.size(); ++r)
                    pc[r] = iv.positive_coeffs[r].eval(x);
                assert_nef(xt, pc, "s_via_surface_zariski");
            }

            // lattice length of the slice segment
            LinFn diff{(moving[1].c1[dc] - moving[0].c1[dc]) / Rat(dir[dc]),
                       (moving[1].c0[dc] - moving[0].c0[dc]) / Rat(dir[dc])};
            if (diff.eval(mid) < 0) diff = {-diff.a, -diff.b};
            iv.degree = diff;

            // ord_{Y_2}(N(x)|_{Y_1}) from the gamma_0 side ray
            LinFn nw = iv.negative_coeffs[side_ray];
            iv.order_at_y2 = {nw.a / gamma_mult, nw.b / gamma_mult};

            // S_1: (2/vol) int x (P . Y_1) dx
            Poly deg_poly{{iv.degree.b, iv.degree.a}};
            s1 += poly_mul(poly_x(), deg_poly).integrate(iv.lo, iv.hi);
            // S_2: (2/vol) int (P . Y_1) ((P . Y_1)/2 + ord) dx
            Poly ord_poly{{iv.order_at_y2.b, iv.order_at_y2.a}};
            Poly inner = poly_add(poly_scale(deg_poly, Rat(1, 2)), ord_poly);
            s2 += poly_mul(deg_poly, inner).integrate(iv.lo, iv.hi);

            path.intervals.push_back(iv);
        }
    }
    path.s1 = Rat(2) / vol_x * s1;
    path.s2 = Rat(2) / vol_x * s2;
    return path;
}

} // namespace toric
