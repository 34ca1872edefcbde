#pragma once

#include <string>
#include <vector>

#include "toric/exact_linalg.hpp"
#include "toric/fan.hpp"

namespace toric {

// Element of Z^k + sum_j Z/d_j with residues reduced to [0, d_j).
struct ClassElement {
    IntVec free;
    IntVec residues;

    bool operator==(const ClassElement&) const = default;
    bool operator<(const ClassElement& rhs) const {
        if (free != rhs.free) return free < rhs.free;
        return residues < rhs.residues;
    }
};

// Cl(X) presented in invariant-factor form, with the projection from
// T-invariant divisor coefficient vectors.
class ClassGroup {
public:
    int free_rank() const { return free_rank_; }
    const std::vector<Int>& torsion() const { return torsion_; }
    int torsion_rank() const { return static_cast<int>(torsion_.size()); }
    int ray_count() const { return ray_count_; }

    // Rows: the k free coordinates, then one row per torsion factor.
    const IntMatrix& projection() const { return projection_; }

    ClassElement divisor_class(int i) const; // 0-based ray index
    ClassElement class_of_divisor(const IntVec& coeffs) const;

    ClassElement zero() const;
    ClassElement add(const ClassElement& a, const ClassElement& b) const;
    ClassElement negate(const ClassElement& a) const;
    ClassElement scale(const Int& c, const ClassElement& a) const;
    bool is_zero(const ClassElement& a) const;

    // Some divisor coefficient vector whose class is e.
    IntVec lift(const ClassElement& e) const;

    std::string to_string(const ClassElement& e) const;
    std::string group_to_string() const; // e.g. "Z^2 + Z/4"

    bool operator==(const ClassGroup&) const = default;

private:
    friend ClassGroup compute_class_group(const Fan& fan);

    int free_rank_ = 0;
    std::vector<Int> torsion_;
    int ray_count_ = 0;
    int pivot_count_ = 0;           // rank of the ray-pairing matrix
    std::vector<int> torsion_rows_; // rows of u_ carrying the torsion residues
    IntMatrix projection_;
    IntMatrix u_;         // left Smith transform of the ray matrix
    IntMatrix u_inverse_;
};

// Cokernel of m -> (<m, v_i>)_i.  Requires a complete fan.
ClassGroup compute_class_group(const Fan& fan);

} // namespace toric
