#pragma once

#include <vector>

#include "toric/class_group.hpp"
#include "toric/fan.hpp"

namespace toric {

// Submonoid of Cl(X) generated by the classes [D_i] of the rays NOT in the
// subset S.  For a cone of the fan, S is its ray set.
struct DivisorMonoid {
    const Fan* fan = nullptr;
    const ClassGroup* cg = nullptr;
    RaySubset complement;                 // the subset S
    std::vector<int> generator_rays;      // rays outside S, ascending
    std::vector<ClassElement> generators; // classes of the generator rays
};

// Throws ValidationError on out-of-range or repeated indices.
DivisorMonoid gamma(const Fan& fan, const ClassGroup& cg, const RaySubset& s);

// Exact membership.  The witness divisor must represent e; membership is
// decided by searching the lattice polytope {m : <m,v_j> = E_j on S,
// <m,v_j> <= E_j off S}, bounded whenever the fan is complete.
bool contains(const DivisorMonoid& m, const ClassElement& e, const IntVec& witness_divisor);

bool monoid_leq(const DivisorMonoid& m1, const DivisorMonoid& m2);
bool monoid_eq(const DivisorMonoid& m1, const DivisorMonoid& m2);

struct UpsilonEntry {
    DivisorMonoid monoid;      // representative: the first cone's monoid
    std::vector<int> cone_ids; // ids into fan.cones(), ascending
};

struct UpsilonCollection {
    std::vector<UpsilonEntry> entries;
};

// Distinct monoids over all cones of a complete fan, each with the cones
// sharing it.  Entries are ordered by their first cone in the fan's
// canonical cone order.
UpsilonCollection upsilon(const Fan& fan, const ClassGroup& cg);

} // namespace toric
