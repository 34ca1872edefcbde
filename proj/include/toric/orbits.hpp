#pragma once

#include <utility>
#include <vector>

#include "toric/class_group.hpp"
#include "toric/fan.hpp"
#include "toric/monoid.hpp"
#include "toric/roots.hpp"

namespace toric {

// Cones whose torus orbits lie in one orbit of the connected automorphism
// group.  Orbit dimensions are d - dim(cone).
struct OrbitClass {
    DivisorMonoid monoid;
    std::vector<int> cone_ids; // ids into fan.cones(), ascending
    int sigma_max_id = -1;
    int min_orbit_dim = 0;
    int max_orbit_dim = 0;
};

// Partition of all cones by equality of their monoids, each class annotated
// with its distinguished cone sigma_max.
std::vector<OrbitClass> classify_aut0(const Fan& fan, const ClassGroup& cg);

// Independent classifier: connected components of the graph whose edges are
// the H_m-connected cone pairs over all roots.  Components are ascending and
// ordered by smallest cone id.
std::vector<std::vector<int>> bfs_oracle_classification(const Fan& fan, const RootSet& rs);

// Annotates an arbitrary partition of all cone ids with the monoid of each
// part's first cone.  With the partition from either classifier above this
// reproduces classify_aut0's records.
std::vector<OrbitClass> orbit_classes_from_partition(const Fan& fan, const ClassGroup& cg,
                                                     const std::vector<std::vector<int>>& parts);

// The cone on the rays whose classes are outside the monoid.  Checks that
// the result is a fan cone with the same monoid and throws InternalError
// otherwise.
Cone sigma_max(const Fan& fan, const ClassGroup& cg, const DivisorMonoid& monoid);

struct OrbitPoset {
    std::vector<OrbitClass> classes;
    // (i, j) means closure(orbit of class i) strictly inside closure(class j).
    std::vector<std::pair<int, int>> order;
    std::vector<std::pair<int, int>> reduction; // transitive reduction of order
};

OrbitPoset closure_poset(const Fan& fan, const ClassGroup& cg,
                         std::vector<OrbitClass> classes);

// Whether the monoid of the given generator subset appears among the fan's
// monoids; by the reconstruction lemma this holds exactly for fan cones.
// The subset must generate a pointed cone extremally (throws ValidationError
// otherwise).
bool cone_recognition(const Fan& fan, const ClassGroup& cg, const UpsilonCollection& ups,
                      const RaySubset& s);

} // namespace toric
