#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toric/exact_linalg.hpp"

namespace toric {

// Sorted 0-based ray indices.  External formats and reports use 1-based
// indices; the conversion happens at the I/O boundary only.
using RaySubset = std::vector<int>;

struct Cone {
    RaySubset rays;
    int dim = 0;

    bool operator==(const Cone& rhs) const { return rays == rhs.rays; }
};

// Shared codimension-1 face between two maximal cones.
struct Wall {
    int wall_id; // index into Fan::cones()
    int max_a;   // positions in Fan::max_cone_ids(), max_a < max_b
    int max_b;
};

class Fan {
public:
    int dim() const { return dim_; }
    int ray_count() const { return static_cast<int>(rays_.size()); }
    const IntVec& ray(int i) const { return rays_.at(i); }
    const std::vector<IntVec>& rays() const { return rays_; }
    IntMatrix ray_matrix() const; // rows are the ray vectors, ray_count x dim

    // All cones including the zero cone, ordered by (dimension, ray set).
    const std::vector<Cone>& cones() const { return cones_; }
    const Cone& cone(int id) const { return cones_.at(id); }
    std::optional<int> find_cone(const RaySubset& rays) const;
    const std::vector<int>& max_cone_ids() const { return max_cone_ids_; }
    bool is_max_cone(int id) const;

    const std::vector<Wall>& walls() const { return walls_; }
    bool complete() const { return complete_; }
    const std::string& name() const { return name_; }

private:
    friend Fan build_fan(int, std::vector<IntVec>, std::vector<RaySubset>, std::string);

    int dim_ = 0;
    std::vector<IntVec> rays_;
    std::vector<Cone> cones_;
    std::vector<int> max_cone_ids_; // in input order
    std::vector<Wall> walls_;
    bool complete_ = false;
    std::string name_;
};

// v divided by the gcd of its entries.  Throws ValidationError on zero.
IntVec primitive_vector(const IntVec& v);

// Validates rays and maximal cones, closes under faces, computes walls and
// the completeness flag.  Throws ValidationError with a 1-based description
// of the offending ray or cone.
Fan build_fan(int dim, std::vector<IntVec> rays, std::vector<RaySubset> max_cones,
              std::string name = "");

// All faces of a fan cone, the zero cone and the cone itself included.
std::vector<Cone> faces_of(const Fan& fan, const Cone& cone);

bool is_complete(const Fan& fan);

struct FanProperties {
    bool simplicial;
    bool smooth;
};
FanProperties fan_properties(const Fan& fan);

Fan make_projective_space(int n);      // n >= 1
Fan make_hirzebruch(long long s);      // s >= 1
Fan make_weighted_p11s(long long s);   // s >= 2
Fan make_b_surface(long long s);       // s >= 1

// Fan of X1 x X2 in N1 + N2; rays of a first, then rays of b.
Fan product_fan(const Fan& a, const Fan& b);

// Rational cone membership and pointedness on explicit generator lists.
bool cone_contains_vector(const std::vector<IntVec>& gens, const IntVec& x, int dim);
bool is_pointed_cone(const std::vector<IntVec>& gens, int dim);

} // namespace toric
