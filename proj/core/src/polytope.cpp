#include "toricstab/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "toricstab/lattice.hpp"

namespace toric {

namespace {

constexpr int kMaxDim = 6;
constexpr int kMaxHalfspaces = 64;

bool qvec_lex_less(const QVec& a, const QVec& b) {
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) return true;
        if (a[i] > b[i]) return false;
    }
    return false;
}

bool halfspace_less(const HalfSpace& a, const HalfSpace& b) {
    if (qvec_lex_less(a.normal, b.normal)) return true;
    if (qvec_lex_less(b.normal, a.normal)) return false;
    return a.offset < b.offset;
}

bool halfspace_eq(const HalfSpace& a, const HalfSpace& b) {
    return a.normal == b.normal && a.offset == b.offset;
}

// all subsets of {0..n-1} of size k, visited in lexicographic order
template <typename F>
void for_each_subset(int n, int k, F&& f) {
    if (k > n) return;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        f(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

} // namespace

HalfSpace canonical_halfspace(HalfSpace h) {
    Int lcm(1);
    for (const Rat& x : h.normal)
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());
    IVec in(h.normal.size());
    for (size_t i = 0; i < h.normal.size(); ++i) {
        Rat s = h.normal[i] * Rat(lcm);
        in[i] = s.get_num();
    }
    if (is_zero(in)) fail_validation("BadHalfspace", "zero normal vector");
    Int g = content(in);
    Rat scale = Rat(lcm) / Rat(g);
    HalfSpace out;
    out.normal.resize(in.size());
    for (size_t i = 0; i < in.size(); ++i) out.normal[i] = Rat(in[i] / g);
    out.offset = h.offset * scale;
    return out;
}

Polytope vertices_from_halfspaces(int dim, std::vector<HalfSpace> halfspaces) {
    if (dim < 1 || dim > kMaxDim)
        fail_validation("TooLarge", "polytope dimension must be between 1 and 6");
    if ((int)halfspaces.size() > kMaxHalfspaces)
        fail_validation("TooLarge", "at most 64 halfspaces are supported");
    for (auto& h : halfspaces) {
        if ((int)h.normal.size() != dim)
            fail_validation("RankMismatch", "halfspace normal has wrong length");
        h = canonical_halfspace(h);
    }
    std::sort(halfspaces.begin(), halfspaces.end(), halfspace_less);
    halfspaces.erase(std::unique(halfspaces.begin(), halfspaces.end(), halfspace_eq),
                     halfspaces.end());
    int m = (int)halfspaces.size();

    // recession cone {d : <n_i, d> >= 0 for all i} must be trivial
    QMat normals(m, QVec(dim));
    for (int i = 0; i < m; ++i) normals[i] = halfspaces[i].normal;
    if (qmat_rank(normals) < dim)
        fail_math("Unbounded", "normals do not span; the recession cone contains a line");
    auto recession_dir = [&](const QVec& d) {
        for (int i = 0; i < m; ++i)
            if (dot(halfspaces[i].normal, d) < 0) return false;
        return true;
    };
    if (dim == 1) {
        QVec plus{Rat(1)}, minus{Rat(-1)};
        if (recession_dir(plus) || recession_dir(minus))
            fail_math("Unbounded", "nontrivial recession cone");
    } else {
        bool unbounded = false;
        for_each_subset(m, dim - 1, [&](const std::vector<int>& idx) {
            if (unbounded) return;
            QMat rows;
            for (int i : idx) rows.push_back(halfspaces[i].normal);
            auto d = kernel_line(rows, dim);
            if (!d) return;
            QVec neg(d->size());
            for (size_t i = 0; i < d->size(); ++i) neg[i] = -(*d)[i];
            if (recession_dir(*d) || recession_dir(neg)) unbounded = true;
        });
        if (unbounded) fail_math("Unbounded", "nontrivial recession cone");
    }

    // vertex enumeration over dim-subsets
    std::set<std::vector<std::pair<Int, Int>>> seen; // canonical key
    std::vector<QVec> verts;
    for_each_subset(m, dim, [&](const std::vector<int>& idx) {
        QMat a;
        QVec b;
        for (int i : idx) {
            a.push_back(halfspaces[i].normal);
            b.push_back(halfspaces[i].offset);
        }
        auto x = solve_linear(std::move(a), std::move(b));
        if (!x) return;
        for (int i = 0; i < m; ++i)
            if (dot(halfspaces[i].normal, *x) < halfspaces[i].offset) return;
        std::vector<std::pair<Int, Int>> key;
        for (const Rat& c : *x) key.emplace_back(c.get_num(), c.get_den());
        if (seen.insert(key).second) verts.push_back(*x);
    });
    if (verts.empty()) fail_math("Empty", "the halfspace intersection is empty");
    std::sort(verts.begin(), verts.end(), qvec_lex_less);

    Polytope p;
    p.dim = dim;
    p.vertices = verts;
    p.full_dim = (affine_rank(verts) == dim);

    // irredundant facets: active vertex set of affine rank dim-1 (full-dim
    // case); otherwise keep the halfspaces active somewhere
    for (const auto& h : halfspaces) {
        std::vector<QVec> active;
        for (const auto& v : verts)
            if (dot(h.normal, v) == h.offset) active.push_back(v);
        if (p.full_dim) {
            if (!active.empty() && affine_rank(active) == dim - 1) p.halfspaces.push_back(h);
        } else {
            if (!active.empty()) p.halfspaces.push_back(h);
        }
    }
    return p;
}

std::vector<HalfSpace> hull_halfspaces(int dim, const std::vector<QVec>& vertices) {
    if (affine_rank(vertices) != dim)
        fail_math("NotFullDim", "convex hull of a lower-dimensional vertex set");
    std::vector<HalfSpace> out;
    int nv = (int)vertices.size();
    for_each_subset(nv, dim, [&](const std::vector<int>& idx) {
        QMat diffs;
        for (int i = 1; i < dim; ++i) {
            QVec d(dim);
            for (int c = 0; c < dim; ++c)
                d[c] = vertices[idx[i]][c] - vertices[idx[0]][c];
            diffs.push_back(d);
        }
        QVec probe(dim, Rat(0)); // for dim == 1 there are no diffs; normal is free
        std::optional<QVec> normal;
        if (dim == 1) {
            normal = QVec{Rat(1)};
        } else {
            normal = kernel_line(diffs, dim);
        }
        if (!normal) return;
        Rat off = dot(*normal, vertices[idx[0]]);
        bool above = false, below = false;
        for (const auto& v : vertices) {
            Rat s = dot(*normal, v) - off;
            if (s > 0) above = true;
            if (s < 0) below = true;
        }
        if (above && below) return;
        HalfSpace h;
        if (below) { // flip so all vertices satisfy >=
            h.normal.resize(dim);
            for (int c = 0; c < dim; ++c) h.normal[c] = -(*normal)[c];
            h.offset = -off;
        } else {
            h.normal = *normal;
            h.offset = off;
        }
        out.push_back(canonical_halfspace(h));
    });
    std::sort(out.begin(), out.end(), halfspace_less);
    out.erase(std::unique(out.begin(), out.end(), halfspace_eq), out.end());
    return out;
}

namespace {

// pulling triangulation of the face with the given vertex indices
void pull_triangulate(const Polytope& p, const std::vector<int>& face, int face_dim,
                      std::vector<int>& chain, std::vector<std::vector<int>>& out) {
    if ((int)face.size() == face_dim + 1) { // already a simplex
        std::vector<int> s = chain;
        s.insert(s.end(), face.begin(), face.end());
        out.push_back(s);
        return;
    }
    int apex = face[0]; // faces are kept sorted; vertices are lex-sorted
    for (int i : face)
        if (qvec_lex_less(p.vertices[i], p.vertices[apex])) apex = i;
    // maximal proper subfaces from the active sets of the polytope halfspaces
    std::set<std::vector<int>> subfaces;
    for (const auto& h : p.halfspaces) {
        std::vector<int> t;
        for (int i : face)
            if (dot(h.normal, p.vertices[i]) == h.offset) t.push_back(i);
        if ((int)t.size() == (int)face.size()) continue; // h active on the whole face
        std::vector<QVec> pts;
        for (int i : t) pts.push_back(p.vertices[i]);
        if (!t.empty() && affine_rank(pts) == face_dim - 1) subfaces.insert(t);
    }
    chain.push_back(apex);
    for (const auto& sf : subfaces) {
        if (std::find(sf.begin(), sf.end(), apex) != sf.end()) continue;
        pull_triangulate(p, sf, face_dim - 1, chain, out);
    }
    chain.pop_back();
}

Rat simplex_volume(const Polytope& p, const std::vector<int>& simplex) {
    int d = (int)simplex.size() - 1;
    QMat m;
    for (int i = 1; i <= d; ++i) {
        QVec row(d);
        for (int c = 0; c < d; ++c)
            row[c] = p.vertices[simplex[i]][c] - p.vertices[simplex[0]][c];
        m.push_back(row);
    }
    Rat det = qmat_det(std::move(m));
    Rat fact(1);
    for (int i = 2; i <= d; ++i) fact *= i;
    return abs(det) / fact;
}

} // namespace

MassData volume_and_barycenter(const Polytope& p) {
    MassData out{Rat(0), std::nullopt};
    if (p.vertices.empty()) return out;
    if (p.vertices.size() == 1) {
        out.barycenter = p.vertices[0];
        return out;
    }
    int r = affine_rank(p.vertices);
    if (r < p.dim) {
        // chart the affine hull and recurse
        QMat basis; // rows: r independent difference vectors
        std::vector<int> picked;
        for (size_t i = 1; i < p.vertices.size() && (int)basis.size() < r; ++i) {
            QVec d(p.dim);
            for (int c = 0; c < p.dim; ++c) d[c] = p.vertices[i][c] - p.vertices[0][c];
            basis.push_back(d);
            if (qmat_rank(basis) < (int)basis.size()) basis.pop_back();
        }
        // coordinates: solve for each vertex v - v0 = sum t_j basis_j via
        // least-squares-free projection (Gram system, exact)
        QMat gram(r, QVec(r));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) gram[i][j] = dot(basis[i], basis[j]);
        Polytope chart;
        chart.dim = r;
        for (const auto& v : p.vertices) {
            QVec d(p.dim);
            for (int c = 0; c < p.dim; ++c) d[c] = v[c] - p.vertices[0][c];
            QVec rhs(r);
            for (int i = 0; i < r; ++i) rhs[i] = dot(basis[i], d);
            auto t = solve_linear(gram, rhs);
            chart.vertices.push_back(*t);
        }
        std::sort(chart.vertices.begin(), chart.vertices.end(), qvec_lex_less);
        chart.halfspaces = hull_halfspaces(r, chart.vertices);
        chart.full_dim = true;
        MassData inner = volume_and_barycenter(chart);
        if (inner.barycenter) {
            QVec b = p.vertices[0];
            for (int c = 0; c < p.dim; ++c)
                for (int j = 0; j < r; ++j) b[c] += (*inner.barycenter)[j] * basis[j][c];
            out.barycenter = b;
        }
        return out; // ambient volume stays 0
    }

    Polytope q;
    const Polytope* body = &p;
    if (p.halfspaces.empty()) {
        q = p;
        q.halfspaces = hull_halfspaces(p.dim, p.vertices);
        body = &q;
    }
    std::vector<int> all(body->vertices.size());
    for (size_t i = 0; i < all.size(); ++i) all[i] = (int)i;
    std::vector<std::vector<int>> simplices;
    std::vector<int> chain;
    pull_triangulate(*body, all, body->dim, chain, simplices);

    Rat vol(0);
    QVec bary(p.dim, Rat(0));
    for (const auto& s : simplices) {
        Rat v = simplex_volume(*body, s);
        if (v == 0) continue;
        vol += v;
        for (int c = 0; c < p.dim; ++c) {
            Rat centroid(0);
            for (int i : s) centroid += body->vertices[i][c];
            centroid /= (int)s.size();
            bary[c] += v * centroid;
        }
    }
    out.volume = vol;
    if (vol > 0) {
        for (int c = 0; c < p.dim; ++c) bary[c] /= vol;
        out.barycenter = bary;
    }
    return out;
}

Polytope affine_image(const Polytope& p, const QMat& a, const QVec& b) {
    if ((int)a.size() != p.dim)
        fail_validation("RankMismatch", "matrix size does not match the polytope dimension");
    auto ainv = qmat_inverse(a);
    if (!ainv) fail_math("SingularMap", "affine image under a singular matrix");
    QMat ainv_t = qmat_transpose(*ainv);
    Polytope out;
    out.dim = p.dim;
    out.full_dim = p.full_dim;
    for (const auto& v : p.vertices) {
        QVec w = qmat_apply(a, v);
        for (int c = 0; c < p.dim; ++c) w[c] += b[c];
        out.vertices.push_back(w);
    }
    std::sort(out.vertices.begin(), out.vertices.end(), qvec_lex_less);
    for (const auto& h : p.halfspaces) {
        HalfSpace nh;
        nh.normal = qmat_apply(ainv_t, h.normal);
        nh.offset = h.offset + dot(nh.normal, b);
        out.halfspaces.push_back(canonical_halfspace(nh));
    }
    std::sort(out.halfspaces.begin(), out.halfspaces.end(), halfspace_less);
    return out;
}

// --- polynomials ----------------------------------------------------------

Rat Poly::eval(const Rat& x) const {
    Rat y(0);
    for (size_t i = coef.size(); i-- > 0;) y = y * x + coef[i];
    return y;
}

Poly Poly::derivative() const {
    Poly d;
    for (size_t i = 1; i < coef.size(); ++i) d.coef.push_back(coef[i] * (long)i);
    return d;
}

Poly Poly::antiderivative() const {
    Poly a;
    a.coef.push_back(Rat(0));
    for (size_t i = 0; i < coef.size(); ++i) a.coef.push_back(coef[i] / (long)(i + 1));
    return a;
}

Rat Poly::integrate(const Rat& a, const Rat& b) const {
    Poly f = antiderivative();
    return f.eval(b) - f.eval(a);
}

Poly poly_add(const Poly& a, const Poly& b) {
    Poly c;
    c.coef.resize(std::max(a.coef.size(), b.coef.size()), Rat(0));
    for (size_t i = 0; i < a.coef.size(); ++i) c.coef[i] += a.coef[i];
    for (size_t i = 0; i < b.coef.size(); ++i) c.coef[i] += b.coef[i];
    return c;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.coef.empty() || b.coef.empty()) return {};
    Poly c;
    c.coef.assign(a.coef.size() + b.coef.size() - 1, Rat(0));
    for (size_t i = 0; i < a.coef.size(); ++i)
        for (size_t j = 0; j < b.coef.size(); ++j) c.coef[i + j] += a.coef[i] * b.coef[j];
    return c;
}

Poly poly_scale(const Poly& a, const Rat& s) {
    Poly c = a;
    for (auto& x : c.coef) x *= s;
    return c;
}

Poly poly_x() { return Poly{{Rat(0), Rat(1)}}; }

// --- slice profile ----------------------------------------------------------

Rat SliceProfile::eval(const Rat& x) const {
    if (x < t0 || x > t1) return Rat(0);
    for (size_t i = 0; i + 1 < breakpoints.size(); ++i)
        if (x <= breakpoints[i + 1]) return pieces[i].eval(x);
    return pieces.back().eval(x);
}

Rat SliceProfile::integrate(const Rat& a, const Rat& b) const {
    Rat total(0);
    for (size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        Rat lo = std::max(a, breakpoints[i]);
        Rat hi = std::min(b, breakpoints[i + 1]);
        if (lo < hi) total += pieces[i].integrate(lo, hi);
    }
    return total;
}

Rat SliceProfile::integrate_moment(const Rat& a, const Rat& b) const {
    Rat total(0);
    for (size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        Rat lo = std::max(a, breakpoints[i]);
        Rat hi = std::min(b, breakpoints[i + 1]);
        if (lo < hi) total += poly_mul(poly_x(), pieces[i]).integrate(lo, hi);
    }
    return total;
}

std::pair<Rat, Rat> SliceProfile::one_sided_derivatives(const Rat& x) const {
    Rat left(0), right(0);
    for (size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        if (breakpoints[i] < x && x <= breakpoints[i + 1]) left = pieces[i].derivative().eval(x);
        if (breakpoints[i] <= x && x < breakpoints[i + 1]) right = pieces[i].derivative().eval(x);
    }
    return {left, right};
}

SliceProfile slice_profile(const Polytope& p, int axis) {
    if (!p.full_dim) fail_math("NotFullDim", "slice profile of a lower-dimensional body");
    if (axis < 0 || axis >= p.dim) fail_validation("BadAxis", "axis out of range");

    std::set<Rat> bset;
    for (const auto& v : p.vertices) bset.insert(v[axis]);
    std::vector<Rat> bps(bset.begin(), bset.end());

    SliceProfile prof;
    prof.t0 = bps.front();
    prof.t1 = bps.back();
    prof.breakpoints = bps;

    auto slice_volume_at = [&](const Rat& x) -> Rat {
        if (p.dim == 1) return Rat(1); // 0-dimensional slice: a point
        std::vector<HalfSpace> hs;
        for (const auto& h : p.halfspaces) {
            HalfSpace s;
            for (int c = 0; c < p.dim; ++c)
                if (c != axis) s.normal.push_back(h.normal[c]);
            s.offset = h.offset - h.normal[axis] * x;
            bool zero = std::all_of(s.normal.begin(), s.normal.end(),
                                    [](const Rat& t) { return t == 0; });
            if (zero) continue; // constraint parallel to the slice
            hs.push_back(s);
        }
        Polytope sp = vertices_from_halfspaces(p.dim - 1, hs);
        return volume_and_barycenter(sp).volume;
    };

    for (size_t i = 0; i + 1 < bps.size(); ++i) {
        const Rat& a = bps[i];
        const Rat& b = bps[i + 1];
        // degree <= dim-1: interpolate through dim interior sample points
        int npts = p.dim;
        QVec xs(npts), ys(npts);
        for (int j = 0; j < npts; ++j) {
            xs[j] = a + (b - a) * Rat(j + 1) / Rat(npts + 1);
            ys[j] = slice_volume_at(xs[j]);
        }
        // Lagrange interpolation
        Poly piece;
        piece.coef.assign(npts, Rat(0));
        for (int j = 0; j < npts; ++j) {
            Poly basis{{Rat(1)}};
            Rat denom(1);
            for (int k = 0; k < npts; ++k) {
                if (k == j) continue;
                basis = poly_mul(basis, Poly{{-xs[k], Rat(1)}});
                denom *= xs[j] - xs[k];
            }
            piece = poly_add(piece, poly_scale(basis, ys[j] / denom));
        }
        while (!piece.coef.empty() && piece.coef.back() == 0) piece.coef.pop_back();
        if (piece.coef.empty()) piece.coef.push_back(Rat(0));
        prof.pieces.push_back(piece);
    }

    prof.volume = prof.integrate(prof.t0, prof.t1);
    MassData md = volume_and_barycenter(p);
    if (prof.volume != md.volume)
        fail_math("InternalError", "slice profile volume disagrees with triangulation");
    prof.barycenter_coordinate = prof.integrate_moment(prof.t0, prof.t1) / prof.volume;
    if ((*md.barycenter)[axis] != prof.barycenter_coordinate)
        fail_math("InternalError", "slice profile barycenter disagrees with triangulation");
    return prof;
}

} // namespace toric
