#pragma once

#include <optional>
#include <vector>

#include "toricstab/lattice.hpp"

namespace toric {

// A simplicial fan given by primitive ray generators and max cones as sorted
// ray-index sets.  Completeness is certified by a finite probe set.
struct Fan {
    int rank = 0;
    std::vector<IVec> rays;
    std::vector<std::vector<int>> max_cones;
    bool simplicial = false;
    bool complete = false;
    bool smooth = false;
    bool validated = false;

    RationalCone cone(int c) const;
    int ray_index(const IVec& v) const; // -1 when absent
};

Fan validate_fan(Fan fan);

// Where a vector sits relative to the fan.
struct ConePosition {
    enum Kind { Outside, OnRay, InteriorMax, OnFace } kind = Outside;
    int max_cone = -1;  // a containing max cone when not Outside
    int ray = -1;       // for OnRay
};

// Coordinates of v in max cone c when contained (componentwise >= 0).
std::optional<QVec> cone_membership(const Fan& fan, int c, const IVec& v);
std::vector<int> containing_max_cones(const Fan& fan, const IVec& v);
ConePosition classify_position(const Fan& fan, const IVec& v);

bool in_support(const Fan& fan, const IVec& v);

// Star subdivision at a primitive v in the support: every max cone containing
// v is replaced by the joins of v with its facets not containing v; the fan is
// returned unchanged when v already spans a ray.
Fan star_subdivide(const Fan& fan, const IVec& v);

// Quotient of the star of a ray by its span, with bookkeeping linking child
// rays and cones back to the parent.
struct QuotientFan {
    Fan fan;                       // fan in N/Zv, rank-1 coordinates
    QuotientLattice lattice;
    std::vector<int> source_ray;   // child ray -> parent ray index
    std::vector<Int> ray_mult;     // pi(source) = mult * child ray
    // parent star max cone index -> child max cone index (same order)
    std::vector<std::pair<int, int>> cone_map;
};

QuotientFan quotient_fan(const Fan& fan, const IVec& v,
                         const std::vector<int>* coordinate_order = nullptr);

// Rays sorted counterclockwise (rank 2 only).
std::vector<int> cyclic_ray_order(const Fan& fan);

} // namespace toric
