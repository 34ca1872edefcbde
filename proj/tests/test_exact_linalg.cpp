#include "doctest.h"

#include <algorithm>
#include <functional>
#include <random>

#include "toric/exact_linalg.hpp"

using namespace toric;

namespace {

IntMatrix mat(int r, int c, std::vector<long long> vals) {
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = vals[static_cast<size_t>(i) * c + j];
    return m;
}

IntVec vec(std::vector<long long> vals) {
    IntVec v;
    for (long long x : vals) v.push_back(x);
    return v;
}

// Independent check used by the randomized suite: enumerate the integer
// bounding box directly and filter by the raw constraints.
std::vector<IntVec> box_filter_points(const HalfspaceSystem& sys) {
    CoordinateBounds b = coordinate_bounds(sys);
    std::vector<IntVec> out;
    if (b.empty) return out;
    std::vector<Int> lo(sys.dim), hi(sys.dim);
    for (int j = 0; j < sys.dim; ++j) {
        REQUIRE(b.intervals[j].lower.has_value());
        REQUIRE(b.intervals[j].upper.has_value());
        lo[j] = numerator(rat_ceil(*b.intervals[j].lower));
        hi[j] = numerator(rat_floor(*b.intervals[j].upper));
    }
    IntVec x(sys.dim);
    auto satisfies = [&](const IntVec& p) {
        for (const auto& c : sys.inequalities)
            if (dot(c.coeffs, p) > c.bound) return false;
        for (const auto& c : sys.equalities)
            if (dot(c.coeffs, p) != c.bound) return false;
        return true;
    };
    // odometer over the box
    std::function<void(int)> rec = [&](int j) {
        if (j == sys.dim) {
            if (satisfies(x)) out.push_back(x);
            return;
        }
        for (Int c = lo[j]; c <= hi[j]; ++c) {
            x[j] = c;
            rec(j + 1);
        }
    };
    rec(0);
    return out;
}

const std::vector<IntVec> kP2Rays = {vec({1, 0}), vec({0, -1}), vec({-1, 1})};

} // namespace

TEST_CASE("smith normal form of the zero matrix") {
    auto d = smith_normal_form(IntMatrix(2, 2));
    CHECK(d.s == IntMatrix(2, 2));
    CHECK(d.u == IntMatrix::identity(2));
    CHECK(d.v == IntMatrix::identity(2));
}

TEST_CASE("smith normal form invariant factors") {
    // d1 = gcd of entries = 2, d1*d2 = |det| = 8
    auto d = smith_normal_form(mat(2, 2, {2, 4, 6, 8}));
    CHECK(d.s.at(0, 0) == 2);
    CHECK(d.s.at(1, 1) == 4);
    CHECK(d.s.at(0, 1) == 0);
    CHECK(d.s.at(1, 0) == 0);
    CHECK(d.u * mat(2, 2, {2, 4, 6, 8}) * d.v == d.s);
}

TEST_CASE("smith normal form of the triangle fan ray matrix has free cokernel of rank one") {
    IntMatrix a = IntMatrix::from_rows(kP2Rays);
    auto d = smith_normal_form(a);
    CHECK(d.s.at(0, 0) == 1);
    CHECK(d.s.at(1, 1) == 1);
    CHECK(d.s.row(2) == vec({0, 0}));
    CHECK(d.u * a * d.v == d.s);
}

TEST_CASE("solve_integer_system on the identity") {
    auto sol = solve_integer_system(IntMatrix::identity(2), vec({3, -1}));
    REQUIRE(sol.has_value());
    CHECK(sol->particular == vec({3, -1}));
    CHECK(sol->kernel_basis.empty());
}

TEST_CASE("solve_integer_system recovers a character from its pairings") {
    IntMatrix a = IntMatrix::from_rows(kP2Rays);
    auto sol = solve_integer_system(a, vec({-1, 0, 1}));
    REQUIRE(sol.has_value());
    CHECK(sol->particular == vec({-1, 0}));
    CHECK(sol->kernel_basis.empty());
    CHECK(a.apply(sol->particular) == vec({-1, 0, 1}));
}

TEST_CASE("solve_integer_system detects a parity obstruction") {
    CHECK_FALSE(solve_integer_system(mat(1, 1, {2}), vec({1})).has_value());
}

TEST_CASE("coordinate_bounds on a segment") {
    HalfspaceSystem sys;
    sys.dim = 1;
    sys.add_ge(vec({1}), 0);
    sys.add_le(vec({1}), 3);
    auto b = coordinate_bounds(sys);
    REQUIRE_FALSE(b.empty);
    CHECK(*b.intervals[0].lower == Rat(0));
    CHECK(*b.intervals[0].upper == Rat(3));
}

TEST_CASE("coordinate_bounds of the pairing-at-least-minus-one polytope") {
    // <m, v> >= -1 for the three triangle-fan rays: a in [-1,2], b in [-2,1].
    HalfspaceSystem sys;
    sys.dim = 2;
    for (const auto& r : kP2Rays) sys.add_ge(r, -1);
    auto b = coordinate_bounds(sys);
    REQUIRE_FALSE(b.empty);
    CHECK(*b.intervals[0].lower == Rat(-1));
    CHECK(*b.intervals[0].upper == Rat(2));
    CHECK(*b.intervals[1].lower == Rat(-2));
    CHECK(*b.intervals[1].upper == Rat(1));
}

TEST_CASE("coordinate_bounds reports empty systems") {
    HalfspaceSystem sys;
    sys.dim = 1;
    sys.add_ge(vec({1}), 1);
    sys.add_le(vec({1}), 0);
    CHECK(coordinate_bounds(sys).empty);
    CHECK(lattice_points(sys).empty());
    CHECK_FALSE(rational_feasible(sys));
}

TEST_CASE("coordinate_bounds flags unbounded coordinates") {
    HalfspaceSystem sys;
    sys.dim = 2;
    sys.add_ge(vec({1, 0}), 0);
    sys.add_le(vec({1, 0}), 5);
    sys.add_ge(vec({0, 1}), 0); // y unbounded above
    auto b = coordinate_bounds(sys);
    REQUIRE_FALSE(b.empty);
    CHECK(b.intervals[0].lower.has_value());
    CHECK(b.intervals[0].upper.has_value());
    CHECK(b.intervals[1].lower.has_value());
    CHECK_FALSE(b.intervals[1].upper.has_value());
    CHECK_THROWS_AS(lattice_points(sys), UnboundedError);
}

TEST_CASE("lattice_points of the unit square") {
    HalfspaceSystem sys;
    sys.dim = 2;
    sys.add_ge(vec({1, 0}), 0);
    sys.add_le(vec({1, 0}), 1);
    sys.add_ge(vec({0, 1}), 0);
    sys.add_le(vec({0, 1}), 1);
    auto pts = lattice_points(sys);
    REQUIRE(pts.size() == 4);
    CHECK(pts[0] == vec({0, 0})); // lexicographic order
    CHECK(pts[1] == vec({0, 1}));
    CHECK(pts[2] == vec({1, 0}));
    CHECK(pts[3] == vec({1, 1}));
    CHECK(has_lattice_point(sys));
}

TEST_CASE("lattice_points of a root polytope slice") {
    // <m, v1> = -1, <m, v2> >= 0, <m, v3> >= 0 for the triangle fan.
    HalfspaceSystem sys;
    sys.dim = 2;
    sys.add_eq(kP2Rays[0], -1);
    sys.add_ge(kP2Rays[1], 0);
    sys.add_ge(kP2Rays[2], 0);
    auto pts = lattice_points(sys);
    REQUIRE(pts.size() == 2);
    CHECK(pts[0] == vec({-1, -1}));
    CHECK(pts[1] == vec({-1, 0}));
}

TEST_CASE("determinant and unimodular inverse") {
    CHECK(determinant(mat(2, 2, {2, 4, 6, 8})) == -8);
    CHECK(determinant(IntMatrix::identity(3)) == 1);
    IntMatrix u = mat(2, 2, {2, 1, 1, 1});
    IntMatrix inv = inverse_unimodular(u);
    CHECK(u * inv == IntMatrix::identity(2));
    CHECK_THROWS_AS(inverse_unimodular(mat(2, 2, {2, 0, 0, 2})), InternalError);
}

TEST_CASE("rank of ray matrices") {
    CHECK(rank(IntMatrix::from_rows(kP2Rays)) == 2);
    CHECK(rank(mat(2, 2, {1, 2, 2, 4})) == 1);
    CHECK(rank(IntMatrix(3, 3)) == 0);
}

TEST_CASE("randomized smith decomposition properties") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<int> size_dist(1, 5), entry_dist(-9, 9);
    for (int trial = 0; trial < 300; ++trial) {
        int m = size_dist(rng), n = size_dist(rng);
        IntMatrix a(m, n);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) a.at(i, j) = entry_dist(rng);
        auto d = smith_normal_form(a);
        REQUIRE(d.u * a * d.v == d.s);
        REQUIRE(abs(determinant(d.u)) == 1);
        REQUIRE(abs(determinant(d.v)) == 1);
        auto diag = d.diagonal();
        for (size_t i = 0; i + 1 < diag.size(); ++i) {
            REQUIRE(diag[i] >= 0);
            if (diag[i] == 0) REQUIRE(diag[i + 1] == 0);
            else REQUIRE(diag[i + 1] % diag[i] == 0);
        }
        for (int i = 0; i < d.s.rows(); ++i)
            for (int j = 0; j < d.s.cols(); ++j)
                if (i != j) REQUIRE(d.s.at(i, j) == 0);
    }
}

TEST_CASE("integer solvability matches the invariant-factor divisibility criterion") {
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> size_dist(1, 4), entry_dist(-6, 6);
    for (int trial = 0; trial < 200; ++trial) {
        int m = size_dist(rng), n = size_dist(rng);
        IntMatrix a(m, n);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) a.at(i, j) = entry_dist(rng);
        IntVec b(m);
        for (int i = 0; i < m; ++i) b[i] = entry_dist(rng);

        auto d = smith_normal_form(a);
        IntVec c = d.u.apply(b);
        bool feasible_by_snf = true;
        int t = 0;
        while (t < std::min(m, n) && d.s.at(t, t) != 0) ++t;
        for (int i = 0; i < t; ++i)
            if (c[i] % d.s.at(i, i) != 0) feasible_by_snf = false;
        for (int i = t; i < m; ++i)
            if (c[i] != 0) feasible_by_snf = false;

        auto sol = solve_integer_system(a, b);
        REQUIRE(sol.has_value() == feasible_by_snf);
        if (sol) {
            REQUIRE(a.apply(sol->particular) == b);
            for (const auto& k : sol->kernel_basis) REQUIRE(is_zero_vec(a.apply(k)));
        }
    }
}

TEST_CASE("lattice_points equals brute force over the bounding box") {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> dim_dist(1, 3), entry_dist(-4, 4), bound_dist(0, 6), extra_dist(0, 4);
    for (int trial = 0; trial < 60; ++trial) {
        int dim = dim_dist(rng);
        HalfspaceSystem sys;
        sys.dim = dim;
        // a bounding box keeps the system bounded; random cuts on top
        for (int j = 0; j < dim; ++j) {
            IntVec e(dim, 0);
            e[j] = 1;
            sys.add_ge(e, -bound_dist(rng));
            sys.add_le(e, bound_dist(rng));
        }
        int extras = extra_dist(rng);
        for (int k = 0; k < extras; ++k) {
            IntVec a(dim);
            for (int j = 0; j < dim; ++j) a[j] = entry_dist(rng);
            if (is_zero_vec(a)) continue;
            sys.add_le(a, bound_dist(rng) - 2);
        }
        auto expected = box_filter_points(sys);
        auto got = lattice_points(sys);
        REQUIRE(got == expected);
        REQUIRE(has_lattice_point(sys) == !expected.empty());
    }
}

TEST_CASE("elimination order does not change coordinate bounds") {
    std::mt19937 rng(9001);
    std::uniform_int_distribution<int> dim_dist(2, 4), entry_dist(-3, 3), bound_dist(-2, 5), n_dist(2, 7);
    for (int trial = 0; trial < 50; ++trial) {
        int dim = dim_dist(rng);
        HalfspaceSystem sys;
        sys.dim = dim;
        int n = n_dist(rng);
        for (int k = 0; k < n; ++k) {
            IntVec a(dim);
            for (int j = 0; j < dim; ++j) a[j] = entry_dist(rng);
            if (is_zero_vec(a)) continue;
            sys.add_le(a, bound_dist(rng));
        }
        std::vector<int> order(dim);
        for (int j = 0; j < dim; ++j) order[j] = j;
        auto reference = detail::coordinate_bounds_ordered(sys, order);
        for (int shuffle = 0; shuffle < 4; ++shuffle) {
            std::shuffle(order.begin(), order.end(), rng);
            auto alt = detail::coordinate_bounds_ordered(sys, order);
            REQUIRE(alt.empty == reference.empty);
            if (!reference.empty) {
                for (int j = 0; j < dim; ++j) {
                    REQUIRE(alt.intervals[j].lower == reference.intervals[j].lower);
                    REQUIRE(alt.intervals[j].upper == reference.intervals[j].upper);
                }
            }
        }
    }
}

TEST_CASE("primitive gcd helpers") {
    CHECK(gcd(Int(12), Int(-8)) == 4);
    CHECK(vector_gcd(vec({0, -3, 6})) == 3);
    CHECK(mod_floor(Int(-7), Int(5)) == 3);
    CHECK(rat_floor(Rat(-3, 2)) == Rat(-2));
    CHECK(rat_ceil(Rat(-3, 2)) == Rat(-1));
    CHECK(rat_floor(Rat(7, 2)) == Rat(3));
}
