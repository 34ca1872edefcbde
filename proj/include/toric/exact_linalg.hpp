#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toric/errors.hpp"

namespace toric {

// Arbitrary-precision integers and rationals.  All arithmetic in the
// library is exact; there is no floating-point fallback.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using IntVec = std::vector<Int>;

Int gcd(const Int& a, const Int& b);
Int vector_gcd(const IntVec& v);

// Canonical residue in [0, m) for m > 0.
Int mod_floor(const Int& a, const Int& m);

Rat rat_floor(const Rat& q);
Rat rat_ceil(const Rat& q);

Int dot(const IntVec& a, const IntVec& b);
IntVec vec_add(const IntVec& a, const IntVec& b);
IntVec vec_sub(const IntVec& a, const IntVec& b);
IntVec vec_scale(const Int& c, const IntVec& v);
bool is_zero_vec(const IntVec& v);

// Dense integer matrix, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}
    IntMatrix(int rows, int cols, std::vector<Int> data);

    static IntMatrix identity(int n);
    static IntMatrix from_rows(const std::vector<IntVec>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    const Int& at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

    IntVec row(int r) const;
    IntVec col(int c) const;

    IntMatrix transposed() const;
    IntMatrix operator*(const IntMatrix& rhs) const;
    IntVec apply(const IntVec& v) const; // matrix * column vector
    bool operator==(const IntMatrix& rhs) const = default;

    void swap_rows(int i, int j);
    void swap_cols(int i, int j);
    void add_row_multiple(int dst, int src, const Int& factor);
    void add_col_multiple(int dst, int src, const Int& factor);
    void negate_row(int i);
    void negate_col(int i);

    std::string to_string() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Int> data_;
};

// Fraction-free exact determinant (Bareiss).
Int determinant(const IntMatrix& a);
int rank(const IntMatrix& a);

// Inverse of a matrix with determinant +-1.  Throws InternalError if the
// matrix is not unimodular.
IntMatrix inverse_unimodular(const IntMatrix& a);

// U * A * V = S with U, V unimodular and S diagonal, diagonal entries
// positive and each dividing the next, followed by zeros.
struct SmithDecomposition {
    IntMatrix u;
    IntMatrix s;
    IntMatrix v;

    std::vector<Int> diagonal() const;
};

SmithDecomposition smith_normal_form(const IntMatrix& a);

// Solution of A x = b over the integers: one particular solution plus a
// basis of the integer kernel of A.
struct IntegerSolution {
    IntVec particular;
    std::vector<IntVec> kernel_basis;
};

std::optional<IntegerSolution> solve_integer_system(const IntMatrix& a, const IntVec& b);

// Linear constraint <coeffs, x> (<= | ==) bound with exact integer data.
struct LinearConstraint {
    IntVec coeffs;
    Int bound;
};

// Conjunction of inequalities <a,x> <= b and equalities <a,x> = b in a
// fixed ambient dimension.  An empty system denotes the whole space.
struct HalfspaceSystem {
    int dim = 0;
    std::vector<LinearConstraint> inequalities;
    std::vector<LinearConstraint> equalities;

    void add_le(IntVec coeffs, Int bound);
    void add_ge(IntVec coeffs, Int bound); // stored as the negated <=
    void add_eq(IntVec coeffs, Int bound);
};

// Exact interval of one coordinate over the rational solution set.
struct CoordinateInterval {
    std::optional<Rat> lower; // nullopt = unbounded below
    std::optional<Rat> upper; // nullopt = unbounded above
};

struct CoordinateBounds {
    bool empty = false;                       // rational solution set is empty
    std::vector<CoordinateInterval> intervals; // one per coordinate; meaningless if empty
};

// Per-coordinate exact bounds via Fourier-Motzkin elimination.
CoordinateBounds coordinate_bounds(const HalfspaceSystem& sys);

namespace detail {
// Same computation with an explicit variable elimination order (a
// permutation of 0..dim-1); the result must not depend on it.
CoordinateBounds coordinate_bounds_ordered(const HalfspaceSystem& sys, const std::vector<int>& order);
} // namespace detail

// Whether the system has a rational solution.
bool rational_feasible(const HalfspaceSystem& sys);

// All integer points of a bounded system, in lexicographic order.
// Throws UnboundedError if some coordinate is unbounded.
std::vector<IntVec> lattice_points(const HalfspaceSystem& sys);

// Existence-only variant; stops at the first point found.
bool has_lattice_point(const HalfspaceSystem& sys);

} // namespace toric
