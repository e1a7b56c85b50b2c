#pragma once

#include <optional>
#include <vector>

#include "toricstab/linalg.hpp"

namespace toric {

// <normal, u> >= offset
struct HalfSpace {
    QVec normal;
    Rat offset;
};

// scales so the normal is a primitive integer vector
HalfSpace canonical_halfspace(HalfSpace h);

struct Polytope {
    int dim = 0;
    std::vector<HalfSpace> halfspaces; // irredundant, canonical, sorted
    std::vector<QVec> vertices;        // sorted lexicographically
    bool full_dim = false;
};

// Exhaustive basis enumeration at desk scale (dim <= 6, <= 64 halfspaces).
// Errors: Unbounded (nontrivial recession cone), Empty (infeasible).
Polytope vertices_from_halfspaces(int dim, std::vector<HalfSpace> halfspaces);

// Supporting halfspaces of a full-dimensional vertex set.
std::vector<HalfSpace> hull_halfspaces(int dim, const std::vector<QVec>& vertices);

struct MassData {
    Rat volume;               // 0 for lower-dimensional bodies
    std::optional<QVec> barycenter;
};

// Exact volume (pulling triangulation) and volume-weighted barycenter; a
// lower-dimensional body gets volume 0 and the barycenter of its relative
// interior computed in an affine chart.
MassData volume_and_barycenter(const Polytope& p);

// u -> A u + b with A invertible; errors with SingularMap.
Polytope affine_image(const Polytope& p, const QMat& a, const QVec& b);

// Dense univariate polynomial, coefficients in ascending degree.
struct Poly {
    QVec coef;

    Rat eval(const Rat& x) const;
    Poly derivative() const;
    Poly antiderivative() const;
    Rat integrate(const Rat& a, const Rat& b) const;
    int degree() const { return (int)coef.size() - 1; }
};

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, const Rat& s);
Poly poly_x(); // the monomial x

// Slice-volume profile along one coordinate: on each interval between
// consecutive breakpoints the (dim-1)-volume of the slice is a polynomial of
// degree <= dim-1.
struct SliceProfile {
    Rat t0, t1;
    std::vector<Rat> breakpoints;   // includes t0 and t1
    std::vector<Poly> pieces;       // pieces[i] on [breakpoints[i], breakpoints[i+1]]
    Rat volume;                     // integral of the profile
    Rat barycenter_coordinate;      // (integral of x g) / volume

    Rat eval(const Rat& x) const;
    Rat integrate(const Rat& a, const Rat& b) const;          // of g
    Rat integrate_moment(const Rat& a, const Rat& b) const;   // of x g
    std::pair<Rat, Rat> one_sided_derivatives(const Rat& x) const; // (left, right)
};

SliceProfile slice_profile(const Polytope& p, int axis);

} // namespace toric
