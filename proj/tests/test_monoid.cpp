#include <random>
#include <vector>

#include "doctest.h"
#include "toric/class_group.hpp"
#include "toric/errors.hpp"
#include "toric/fan.hpp"
#include "toric/monoid.hpp"

using namespace toric;

namespace {

IntVec vec(std::initializer_list<long long> xs) {
    IntVec v;
    for (long long x : xs) v.push_back(Int(x));
    return v;
}

Fan p2_fan() {
    return build_fan(2, {vec({1, 0}), vec({0, -1}), vec({-1, 1})}, {{0, 1}, {1, 2}, {0, 2}});
}

IntVec indicator(int len, int i) {
    IntVec v(len);
    v[i] = 1;
    return v;
}

} // namespace

TEST_CASE("gamma collects the classes of the complementary rays") {
    Fan fan = p2_fan();
    ClassGroup cg = compute_class_group(fan);

    DivisorMonoid m = gamma(fan, cg, {0, 1});
    CHECK(m.generator_rays == std::vector<int>{2});
    REQUIRE(m.generators.size() == 1);
    CHECK(m.generators[0] == cg.divisor_class(2));

    DivisorMonoid full = gamma(fan, cg, {});
    CHECK(full.generator_rays == std::vector<int>{0, 1, 2});

    DivisorMonoid trivial = gamma(fan, cg, {0, 1, 2});
    CHECK(trivial.generators.empty());

    CHECK_THROWS_AS(gamma(fan, cg, {0, 3}), ValidationError);
    CHECK_THROWS_AS(gamma(fan, cg, {1, 1}), ValidationError);
}

TEST_CASE("membership in the weighted plane monoids") {
    Fan fan = make_weighted_p11s(2);
    ClassGroup cg = compute_class_group(fan);
    DivisorMonoid sing = gamma(fan, cg, {0, 2});

    CHECK(contains(sing, cg.divisor_class(1), indicator(3, 1)));
    CHECK_FALSE(contains(sing, cg.divisor_class(0), indicator(3, 0)));
    CHECK_FALSE(contains(sing, cg.divisor_class(2), indicator(3, 2)));

    DivisorMonoid full = gamma(fan, cg, {});
    for (int i = 0; i < 3; ++i) CHECK(contains(full, cg.divisor_class(i), indicator(3, i)));

    DivisorMonoid trivial = gamma(fan, cg, {0, 1, 2});
    CHECK(contains(trivial, cg.zero(), IntVec(3)));
    CHECK_FALSE(contains(trivial, cg.divisor_class(0), indicator(3, 0)));
}

TEST_CASE("membership in the b surface monoids") {
    for (long long s : {1, 2, 3}) {
        Fan fan = make_b_surface(s);
        ClassGroup cg = compute_class_group(fan);
        DivisorMonoid corner = gamma(fan, cg, {0, 1});
        CHECK_FALSE(contains(corner, cg.divisor_class(0), indicator(4, 0)));
        CHECK_FALSE(contains(corner, cg.divisor_class(1), indicator(4, 1)));
        CHECK(contains(corner, cg.divisor_class(2), indicator(4, 2)));
    }
}

TEST_CASE("witness choice within a class does not change membership") {
    Fan fan = make_weighted_p11s(3);
    ClassGroup cg = compute_class_group(fan);
    IntMatrix a = fan.ray_matrix();
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> coef(-3, 3);
    std::vector<DivisorMonoid> monoids = {gamma(fan, cg, {0, 2}), gamma(fan, cg, {1}),
                                          gamma(fan, cg, {})};
    for (int t = 0; t < 30; ++t) {
        IntVec witness(3);
        for (auto& c : witness) c = coef(rng);
        ClassElement e = cg.class_of_divisor(witness);
        IntVec m(2);
        for (auto& c : m) c = coef(rng);
        IntVec shifted = vec_add(witness, a.apply(m));
        for (const DivisorMonoid& mon : monoids)
            CHECK(contains(mon, e, witness) == contains(mon, e, shifted));
    }
}

TEST_CASE("monoid inclusion on hirzebruch surfaces") {
    for (long long s : {1, 2, 4}) {
        Fan fan = make_hirzebruch(s);
        ClassGroup cg = compute_class_group(fan);
        DivisorMonoid small = gamma(fan, cg, {2, 3});
        DivisorMonoid big = gamma(fan, cg, {0, 1});
        CHECK(monoid_leq(small, big));
        CHECK_FALSE(monoid_leq(big, small));
        CHECK_FALSE(monoid_eq(small, big));
        CHECK(monoid_leq(small, small));
        CHECK(monoid_eq(big, gamma(fan, cg, {1, 2})));
    }
}

TEST_CASE("monoid inclusion on the weighted plane") {
    Fan fan = make_weighted_p11s(3);
    ClassGroup cg = compute_class_group(fan);
    DivisorMonoid sing = gamma(fan, cg, {0, 2});
    DivisorMonoid full = gamma(fan, cg, {});
    CHECK(monoid_leq(sing, full));
    CHECK_FALSE(monoid_leq(full, sing));
}

TEST_CASE("monoids over different groups cannot be compared") {
    Fan f1 = p2_fan();
    Fan f2 = make_hirzebruch(1);
    ClassGroup c1 = compute_class_group(f1);
    ClassGroup c2 = compute_class_group(f2);
    CHECK_THROWS_AS(monoid_leq(gamma(f1, c1, {}), gamma(f2, c2, {})), ValidationError);
}

TEST_CASE("a wrong witness is rejected") {
    Fan fan = p2_fan();
    ClassGroup cg = compute_class_group(fan);
    DivisorMonoid full = gamma(fan, cg, {});
    // In this fan all divisor classes are equal, so any single indicator is a
    // valid witness for [D1]; a doubled divisor is not.
    CHECK_NOTHROW(contains(full, cg.divisor_class(0), indicator(3, 1)));
    CHECK_THROWS_AS(contains(full, cg.divisor_class(0), vec({2, 0, 0})), ValidationError);
}

TEST_CASE("upsilon entry counts for the example surfaces") {
    {
        Fan fan = p2_fan();
        ClassGroup cg = compute_class_group(fan);
        UpsilonCollection u = upsilon(fan, cg);
        REQUIRE(u.entries.size() == 1);
        CHECK(u.entries[0].cone_ids.size() == 7);
    }
    for (long long s : {1, 2, 3}) {
        Fan fan = make_hirzebruch(s);
        ClassGroup cg = compute_class_group(fan);
        UpsilonCollection u = upsilon(fan, cg);
        REQUIRE(u.entries.size() == 2);
        CHECK(u.entries[0].cone_ids.size() == 6);
        CHECK(u.entries[1].cone_ids.size() == 3);
        std::vector<int> small_class;
        for (int id : u.entries[1].cone_ids) small_class.push_back(id);
        RaySubset tau4 = {3};
        CHECK(fan.cone(small_class[0]).rays == tau4);
    }
    for (long long s : {2, 3, 4}) {
        Fan fan = make_weighted_p11s(s);
        ClassGroup cg = compute_class_group(fan);
        UpsilonCollection u = upsilon(fan, cg);
        REQUIRE(u.entries.size() == 2);
        CHECK(u.entries[0].cone_ids.size() == 6);
        REQUIRE(u.entries[1].cone_ids.size() == 1);
        CHECK(fan.cone(u.entries[1].cone_ids[0]).rays == RaySubset{0, 2});
    }
    for (long long s : {1, 2, 3}) {
        Fan fan = make_b_surface(s);
        ClassGroup cg = compute_class_group(fan);
        UpsilonCollection u = upsilon(fan, cg);
        CHECK(u.entries.size() == 9);
        for (const UpsilonEntry& e : u.entries) CHECK(e.cone_ids.size() == 1);
    }
}

TEST_CASE("every cone appears in exactly one upsilon entry") {
    std::vector<Fan> fans;
    fans.push_back(p2_fan());
    fans.push_back(make_hirzebruch(2));
    fans.push_back(make_b_surface(2));
    fans.push_back(product_fan(make_projective_space(1), make_projective_space(1)));
    for (const Fan& fan : fans) {
        ClassGroup cg = compute_class_group(fan);
        UpsilonCollection u = upsilon(fan, cg);
        std::vector<int> seen(fan.cones().size(), 0);
        for (const UpsilonEntry& e : u.entries)
            for (int id : e.cone_ids) ++seen[id];
        for (int c : seen) CHECK(c == 1);
        for (size_t i = 0; i < u.entries.size(); ++i)
            for (size_t j = i + 1; j < u.entries.size(); ++j)
                CHECK_FALSE(monoid_eq(u.entries[i].monoid, u.entries[j].monoid));
    }
}

TEST_CASE("face monotonicity of gamma") {
    std::vector<Fan> fans;
    fans.push_back(p2_fan());
    fans.push_back(make_hirzebruch(3));
    fans.push_back(make_weighted_p11s(2));
    fans.push_back(make_b_surface(2));
    for (const Fan& fan : fans) {
        ClassGroup cg = compute_class_group(fan);
        for (const Cone& big : fan.cones())
            for (const Cone& small : faces_of(fan, big))
                CHECK(monoid_leq(gamma(fan, cg, big.rays), gamma(fan, cg, small.rays)));
        DivisorMonoid top = gamma(fan, cg, {});
        for (const Cone& c : fan.cones()) CHECK(monoid_leq(gamma(fan, cg, c.rays), top));
    }
}

TEST_CASE("monoid order on upsilon entries is a partial order") {
    for (const Fan& fan : {make_hirzebruch(3), make_b_surface(2)}) {
        ClassGroup cg = compute_class_group(fan);
        UpsilonCollection u = upsilon(fan, cg);
        size_t n = u.entries.size();
        for (size_t i = 0; i < n; ++i) CHECK(monoid_leq(u.entries[i].monoid, u.entries[i].monoid));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                if (i == j) continue;
                bool ij = monoid_leq(u.entries[i].monoid, u.entries[j].monoid);
                bool ji = monoid_leq(u.entries[j].monoid, u.entries[i].monoid);
                bool both = ij && ji;
                CHECK_FALSE(both);
                for (size_t k = 0; k < n; ++k) {
                    bool jk = monoid_leq(u.entries[j].monoid, u.entries[k].monoid);
                    bool ik = monoid_leq(u.entries[i].monoid, u.entries[k].monoid);
                    if (ij && jk) CHECK(ik);
                }
            }
    }
}

TEST_CASE("upsilon requires a complete fan") {
    Fan open = build_fan(2, {vec({1, 0}), vec({0, 1})}, {{0, 1}});
    Fan closed = p2_fan();
    ClassGroup cg = compute_class_group(closed);
    CHECK_THROWS_AS(upsilon(open, cg), PreconditionError);
}
