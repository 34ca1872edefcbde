#pragma once

#include <optional>
#include <vector>

#include "toric/class_group.hpp"
#include "toric/fan.hpp"
#include "toric/orbits.hpp"
#include "toric/roots.hpp"

namespace toric {

// Lattice automorphism psi together with the ray permutation it induces:
// matrix * v_i = v_{perm[i]}, and every cone maps onto a cone.
struct FanSymmetry {
    std::vector<int> perm;
    IntMatrix matrix;
};

// The full finite group Aut(N, fan), sorted by permutation.  Requires the
// rays to span the ambient space (always true for complete fans).
std::vector<FanSymmetry> fan_symmetries(const Fan& fan);

// Automorphism of Cl(X) induced by a fan symmetry: [D_i] -> [D_{f(i)}].
class ClassAutomorphism {
public:
    const std::vector<int>& perm() const { return perm_; }
    ClassElement apply(const ClassElement& e) const;

    // Matrix on (free, residues) coordinates; torsion rows read mod d_j.
    const IntMatrix& matrix() const { return matrix_; }

private:
    friend ClassAutomorphism induced_class_map(const Fan& fan, const ClassGroup& cg,
                                               const FanSymmetry& sym);
    const ClassGroup* cg_ = nullptr;
    int ray_count_ = 0;
    std::vector<int> perm_;
    IntMatrix matrix_;
};

ClassAutomorphism induced_class_map(const Fan& fan, const ClassGroup& cg,
                                    const FanSymmetry& sym);

// Orbits of the symmetry group acting on the connected-group orbit classes.
// Components are ascending lists of class indices, ordered by first index.
std::vector<std::vector<int>> classify_aut(const Fan& fan, const ClassGroup& cg,
                                           const std::vector<OrbitClass>& classes);

// True when the full automorphism group has a single orbit on X.
bool is_transitive(const Fan& fan, const ClassGroup& cg);

// Factor dimensions when the fan is the fan of a product of projective
// spaces (ascending), nothing otherwise.  Verified by a constructed lattice
// isomorphism onto the model product fan.
std::optional<std::vector<int>> decompose_product(const Fan& fan, const ClassGroup& cg,
                                                  const RootSet& rs);

} // namespace toric
