#include "toricstab/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace toric {

// --- rational.hpp pieces -------------------------------------------------

Rat parse_rat(const std::string& s) {
    if (s.empty()) fail_validation("BadRational", "empty rational literal");
    try {
        Rat r(s);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        fail_validation("BadRational", "cannot parse rational literal '" + s + "'");
    }
}

std::string rat_string(const Rat& r) {
    std::ostringstream os;
    os << r.get_num();
    if (r.get_den() != 1) os << "/" << r.get_den();
    return os.str();
}

std::string decimal_string(const Rat& r, int significant_digits) {
    if (r == 0) return "0";
    // Scale so that |r| * 10^k has the requested number of digits, round to
    // nearest, then place the point.
    Int num = abs(r.get_num());
    Int den = r.get_den();
    // decimal exponent e with 10^(e-1) <= |r| < 10^e
    int e = 0;
    Int lo = num, hi = den;
    while (lo >= hi) { hi *= 10; ++e; }
    while (lo * 10 < hi) { lo *= 10; --e; }
    int shift = significant_digits - e;
    Int scaled_num = num, scaled_den = den;
    if (shift >= 0) {
        Int p;
        mpz_ui_pow_ui(p.get_mpz_t(), 10, shift);
        scaled_num *= p;
    } else {
        Int p;
        mpz_ui_pow_ui(p.get_mpz_t(), 10, -shift);
        scaled_den *= p;
    }
    Int q, rem;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), scaled_num.get_mpz_t(), scaled_den.get_mpz_t());
    if (rem * 2 >= scaled_den) q += 1;
    std::string digits = q.get_str();
    if ((int)digits.size() > significant_digits) { // rounding overflowed, e.g. 999.. -> 1000..
        ++e;
        digits.resize(significant_digits);
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    std::string sign = (r < 0) ? "-" : "";
    std::ostringstream os;
    if (e <= 0 && e > -4) {
        os << sign << "0." << std::string(-e, '0') << digits;
    } else if (e <= 0 || e > significant_digits) {
        os << sign << digits.substr(0, 1);
        if (digits.size() > 1) os << "." << digits.substr(1);
        os << "e" << (e - 1);
    } else if ((int)digits.size() <= e) {
        os << sign << digits << std::string(e - digits.size(), '0');
    } else {
        os << sign << digits.substr(0, e) << "." << digits.substr(e);
    }
    return os.str();
}

Rat pow_rat(const Rat& base, long exp) {
    if (exp == 0) return Rat(1);
    Rat b = exp > 0 ? base : Rat(1) / base;
    long n = exp > 0 ? exp : -exp;
    Rat out(1);
    for (long i = 0; i < n; ++i) out *= b;
    return out;
}

Int binomial(long n, long k) {
    Int out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

std::string ivec_string(const IVec& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

std::string qvec_string(const QVec& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << rat_string(v[i]);
    os << ")";
    return os.str();
}

// --- linalg.hpp pieces ---------------------------------------------------

QMat qmat_mul(const QMat& a, const QMat& b) {
    size_t n = a.size(), p = b.size(), m = b.empty() ? 0 : b[0].size();
    QMat c(n, QVec(m, Rat(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < p; ++k)
            if (a[i][k] != 0)
                for (size_t j = 0; j < m; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

QVec qmat_apply(const QMat& a, const QVec& x) {
    QVec y(a.size(), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) y[i] = dot(a[i], x);
    return y;
}

QMat qmat_transpose(const QMat& a) {
    if (a.empty()) return {};
    QMat t(a[0].size(), QVec(a.size()));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
    return t;
}

Rat qmat_det(QMat a) {
    size_t n = a.size();
    Rat det(1);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return Rat(0);
        if (piv != col) { std::swap(a[piv], a[col]); det = -det; }
        det *= a[col][col];
        Rat inv = Rat(1) / a[col][col];
        for (size_t r = col + 1; r < n; ++r) {
            if (a[r][col] == 0) continue;
            Rat f = a[r][col] * inv;
            for (size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
        }
    }
    return det;
}

int qmat_rank(QMat a) {
    if (a.empty()) return 0;
    size_t rows = a.size(), cols = a[0].size();
    int rank = 0;
    for (size_t col = 0; col < cols && (size_t)rank < rows; ++col) {
        size_t piv = rank;
        while (piv < rows && a[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[rank]);
        Rat inv = Rat(1) / a[rank][col];
        for (size_t r = 0; r < rows; ++r) {
            if ((int)r == rank || a[r][col] == 0) continue;
            Rat f = a[r][col] * inv;
            for (size_t c = col; c < cols; ++c) a[r][c] -= f * a[rank][c];
        }
        ++rank;
    }
    return rank;
}

std::optional<QVec> solve_linear(QMat a, QVec b) {
    size_t n = a.size();
    for (size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(a[piv], a[col]);
        Rat inv = Rat(1) / a[col][col];
        for (size_t c = col; c <= n; ++c) a[col][c] *= inv;
        for (size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rat f = a[r][col];
            for (size_t c = col; c <= n; ++c) a[r][c] -= f * a[col][c];
        }
    }
    QVec x(n);
    for (size_t i = 0; i < n; ++i) x[i] = a[i][n];
    return x;
}

std::optional<QMat> qmat_inverse(QMat a) {
    size_t n = a.size();
    QMat inv = qmat_identity((int)n);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Rat f = Rat(1) / a[col][col];
        for (size_t c = 0; c < n; ++c) { a[col][c] *= f; inv[col][c] *= f; }
        for (size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rat g = a[r][col];
            for (size_t c = 0; c < n; ++c) { a[r][c] -= g * a[col][c]; inv[r][c] -= g * inv[col][c]; }
        }
    }
    return inv;
}

std::optional<QVec> kernel_line(const QMat& a, int ncols) {
    QMat m = a;
    size_t rows = m.size();
    std::vector<int> pivot_col;
    int rank = 0;
    for (int col = 0; col < ncols && (size_t)rank < rows; ++col) {
        size_t piv = rank;
        while (piv < rows && m[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[rank]);
        Rat inv = Rat(1) / m[rank][col];
        for (int c = 0; c < ncols; ++c) m[rank][c] *= inv;
        for (size_t r = 0; r < rows; ++r) {
            if ((int)r == rank || m[r][col] == 0) continue;
            Rat f = m[r][col];
            for (int c = 0; c < ncols; ++c) m[r][c] -= f * m[rank][c];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    if (rank != ncols - 1) return std::nullopt;
    std::vector<bool> is_pivot(ncols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    int free_col = 0;
    while (is_pivot[free_col]) ++free_col;
    QVec k(ncols, Rat(0));
    k[free_col] = 1;
    for (int r = 0; r < rank; ++r) k[pivot_col[r]] = -m[r][free_col];
    return k;
}

int affine_rank(const std::vector<QVec>& pts) {
    if (pts.size() <= 1) return 0;
    QMat diffs;
    for (size_t i = 1; i < pts.size(); ++i) {
        QVec d(pts[i].size());
        for (size_t j = 0; j < d.size(); ++j) d[j] = pts[i][j] - pts[0][j];
        diffs.push_back(d);
    }
    return qmat_rank(diffs);
}

// --- lattice.hpp ---------------------------------------------------------

Int content(const IVec& v) {
    Int g = 0;
    for (const Int& x : v) {
        Int a = abs(x);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    }
    return g;
}

bool is_zero(const IVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

bool is_primitive(const IVec& v) { return !is_zero(v) && content(v) == 1; }

IVec primitive_part(const IVec& v) {
    if (is_zero(v)) fail_math("ZeroVector", "primitive part of the zero vector");
    Int g = content(v);
    IVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
    return out;
}

std::vector<Int> smith_diagonal(IMat m) {
    size_t rows = m.size();
    size_t cols = rows ? m[0].size() : 0;
    std::vector<Int> diag;
    size_t top = 0, left = 0;
    while (top < rows && left < cols) {
        // find a nonzero pivot
        size_t pr = rows, pc = cols;
        for (size_t r = top; r < rows && pr == rows; ++r)
            for (size_t c = left; c < cols; ++c)
                if (m[r][c] != 0) { pr = r; pc = c; break; }
        if (pr == rows) break;
        std::swap(m[pr], m[top]);
        for (size_t r = 0; r < rows; ++r) std::swap(m[r][pc], m[r][left]);
        // clear row and column with gcd steps until both are clean
        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (size_t r = top + 1; r < rows; ++r) {
                while (m[r][left] != 0) {
                    Int q = m[top][left] == 0 ? Int(0) : Int(m[r][left] / m[top][left]);
                    for (size_t c = left; c < cols; ++c) m[r][c] -= q * m[top][c];
                    if (m[r][left] != 0) {
                        std::swap(m[r], m[top]);
                        dirty = true;
                    }
                }
            }
            for (size_t c = left + 1; c < cols; ++c) {
                while (m[top][c] != 0) {
                    Int q = m[top][left] == 0 ? Int(0) : Int(m[top][c] / m[top][left]);
                    for (size_t r = top; r < rows; ++r) m[r][c] -= q * m[r][left];
                    if (m[top][c] != 0) {
                        for (size_t r = top; r < rows; ++r) std::swap(m[r][c], m[r][left]);
                        dirty = true;
                    }
                }
            }
        }
        diag.push_back(abs(m[top][left]));
        ++top;
        ++left;
    }
    return diag;
}

Int lattice_index(const std::vector<IVec>& vectors) {
    if (vectors.empty()) return Int(1);
    size_t rank = vectors[0].size();
    size_t d = vectors.size();
    if (d > rank)
        fail_math("DependentGenerators", "more vectors than the ambient rank");
    // columns are the vectors
    IMat m(rank, IVec(d, Int(0)));
    for (size_t j = 0; j < d; ++j)
        for (size_t i = 0; i < rank; ++i) m[i][j] = vectors[j][i];
    std::vector<Int> diag = smith_diagonal(std::move(m));
    size_t nonzero = 0;
    Int prod(1);
    for (const Int& x : diag)
        if (x != 0) { ++nonzero; prod *= x; }
    if (nonzero != d)
        fail_math("DependentGenerators", "vectors are linearly dependent");
    return prod;
}

QuotientLattice quotient_lattice(int rank, const IVec& v,
                                 const std::vector<int>* coordinate_order) {
    if ((int)v.size() != rank)
        fail_validation("RankMismatch", "vector length does not match the lattice rank");
    if (!is_primitive(v)) fail_math("NotPrimitive", "quotient by a non-primitive vector");

    std::vector<int> order(rank);
    for (int i = 0; i < rank; ++i) order[i] = i;
    if (coordinate_order) order = *coordinate_order;

    // U.v = e_1 by pairwise extended-gcd row steps; Uinv accumulates the
    // inverse column operations.
    QMat u = qmat_identity(rank);
    QMat uinv = qmat_identity(rank);
    std::vector<Int> cur(rank);
    for (int i = 0; i < rank; ++i) cur[i] = v[order[i]];

    auto row_combine = [&](int i0, int i1, const Int& s, const Int& t,
                           const Int& p, const Int& q) {
        // rows: r0' = s r0 + t r1 ; r1' = -p r0 + q r1  with s q + t p = 1
        for (int c = 0; c < rank; ++c) {
            Rat a = u[i0][c], b = u[i1][c];
            u[i0][c] = Rat(s) * a + Rat(t) * b;
            u[i1][c] = Rat(-p) * a + Rat(q) * b;
        }
        // columns of the inverse: c0' = q c0 + p c1 ; c1' = -t c0 + s c1
        for (int r = 0; r < rank; ++r) {
            Rat a = uinv[r][i0], b = uinv[r][i1];
            uinv[r][i0] = Rat(q) * a + Rat(p) * b;
            uinv[r][i1] = Rat(-t) * a + Rat(s) * b;
        }
    };

    int r0 = order[0];
    for (int i = 1; i < rank; ++i) {
        int ri = order[i];
        Int a = cur[0], b = cur[i];
        if (b == 0) continue;
        Int g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        Int p = b / g, q = a / g; // s a + t b = g, det [[s,t],[-p,q]] = 1
        row_combine(r0, ri, s, t, p, q);
        cur[0] = g;
        cur[i] = 0;
    }
    if (cur[0] == -1) {
        for (int c = 0; c < rank; ++c) u[r0][c] = -u[r0][c];
        for (int r = 0; r < rank; ++r) uinv[r][r0] = -uinv[r][r0];
        cur[0] = 1;
    }
    // move the pivot row to position 0 so rows 2..rank are the projection
    if (r0 != 0) {
        std::swap(u[r0], u[0]);
        for (int r = 0; r < rank; ++r) std::swap(uinv[r][r0], uinv[r][0]);
    }

    QuotientLattice q;
    q.parent_rank = rank;
    q.modded_vector = v;
    q.projection.assign(rank - 1, IVec(rank));
    for (int r = 1; r < rank; ++r)
        for (int c = 0; c < rank; ++c) {
            if (!is_integer(u[r][c])) fail_math("InternalError", "non-integer unimodular row");
            q.projection[r - 1][c] = u[r][c].get_num();
        }
    q.lifted_basis.assign(rank - 1, IVec(rank));
    for (int j = 1; j < rank; ++j)
        for (int r = 0; r < rank; ++r) {
            if (!is_integer(uinv[r][j])) fail_math("InternalError", "non-integer unimodular column");
            q.lifted_basis[j - 1][r] = uinv[r][j].get_num();
        }
    return q;
}

IVec QuotientLattice::project(const IVec& w) const {
    IVec out(parent_rank - 1);
    for (int r = 0; r < parent_rank - 1; ++r) out[r] = dot(projection[r], w);
    return out;
}

std::optional<std::pair<IVec, Int>> QuotientLattice::project_ray(const IVec& w) const {
    IVec img = project(w);
    if (is_zero(img)) return std::nullopt;
    Int m = content(img);
    IVec prim(img.size());
    for (size_t i = 0; i < img.size(); ++i) prim[i] = img[i] / m;
    return std::make_pair(prim, m);
}

QVec cone_coordinates(const QVec& v, const RationalCone& cone) {
    size_t n = cone.ambient_rank;
    if (cone.generators.size() != n)
        fail_math("ConeNotFullDim", "cone coordinates need a full-dimensional simplicial cone");
    QMat a(n, QVec(n));
    for (size_t j = 0; j < n; ++j)
        for (size_t i = 0; i < n; ++i) a[i][j] = Rat(cone.generators[j][i]);
    auto x = solve_linear(std::move(a), v);
    if (!x) fail_math("DependentGenerators", "cone generators are linearly dependent");
    for (const Rat& c : *x)
        if (c < 0) fail_math("NotInCone", "vector lies outside the cone");
    return *x;
}

QVec cone_coordinates(const IVec& v, const RationalCone& cone) {
    return cone_coordinates(qvec_of(v), cone);
}

} // namespace toric
