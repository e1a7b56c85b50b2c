#pragma once

#include <optional>
#include <vector>

#include "toricstab/linalg.hpp"
#include "toricstab/rational.hpp"

namespace toric {

using IMat = std::vector<IVec>; // rows

Int content(const IVec& v);
bool is_primitive(const IVec& v);
bool is_zero(const IVec& v);

// v / gcd(|v_i|); errors on the zero vector.
IVec primitive_part(const IVec& v);

// [saturation of the Z-span : Z-span], the product of the elementary divisors
// of the matrix with the given columns; equals |det| at full rank.
// Errors with DependentGenerators on linearly dependent input.
Int lattice_index(const std::vector<IVec>& vectors);

// Integer Smith-style diagonalization (no divisibility ordering); returns the
// absolute diagonal entries of an equivalent diagonal matrix.
std::vector<Int> smith_diagonal(IMat m);

// The quotient N/Zv of N = Z^rank by a primitive vector, with a fixed
// deterministic basis: a unimodular U with U.v = e_1 is built by extended-gcd
// row reduction and rows 2..rank of U give the projection.  The optional
// coordinate permutation perturbs the reduction order; any choice yields a
// valid basis (downstream data must not depend on it).
struct QuotientLattice {
    int parent_rank = 0;
    IVec modded_vector;          // primitive
    IMat projection;             // (rank-1) x rank
    std::vector<IVec> lifted_basis; // rank-1 lifts, length rank each

    IVec project(const IVec& w) const;
    // Projects and primitivizes; multiplicity m with project(w) = m * ray.
    // nullopt when w projects to zero (w proportional to modded_vector).
    std::optional<std::pair<IVec, Int>> project_ray(const IVec& w) const;
};

QuotientLattice quotient_lattice(int rank, const IVec& v,
                                 const std::vector<int>* coordinate_order = nullptr);

// A simplicial rational cone given by primitive generators.
struct RationalCone {
    std::vector<IVec> generators;
    int ambient_rank = 0;
};

// Unique nonnegative rational coefficients of v in the generator basis of a
// full-dimensional simplicial cone; errors with NotInCone when some
// coefficient is negative.
QVec cone_coordinates(const IVec& v, const RationalCone& cone);
QVec cone_coordinates(const QVec& v, const RationalCone& cone);

} // namespace toric
