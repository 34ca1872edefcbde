#include "toric/monoid.hpp"

#include <algorithm>

#include "toric/errors.hpp"

namespace toric {

namespace {

void check_same_home(const DivisorMonoid& a, const DivisorMonoid& b) {
    bool same_fan = a.fan == b.fan ||
                    (a.fan->dim() == b.fan->dim() && a.fan->rays() == b.fan->rays());
    if (!same_fan || !(*a.cg == *b.cg))
        throw ValidationError("monoids live in different class groups");
}

} // namespace

DivisorMonoid gamma(const Fan& fan, const ClassGroup& cg, const RaySubset& s) {
    RaySubset sorted = s;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] < 0 || sorted[i] >= fan.ray_count())
            throw ValidationError("ray index " + std::to_string(sorted[i] + 1) +
                                  " out of range");
        if (i > 0 && sorted[i] == sorted[i - 1])
            throw ValidationError("repeated ray index " + std::to_string(sorted[i] + 1));
    }
    DivisorMonoid m;
    m.fan = &fan;
    m.cg = &cg;
    m.complement = std::move(sorted);
    for (int i = 0; i < fan.ray_count(); ++i)
        if (!std::binary_search(m.complement.begin(), m.complement.end(), i)) {
            m.generator_rays.push_back(i);
            m.generators.push_back(cg.divisor_class(i));
        }
    return m;
}

bool contains(const DivisorMonoid& m, const ClassElement& e, const IntVec& witness_divisor) {
    const Fan& fan = *m.fan;
    if (!(m.cg->class_of_divisor(witness_divisor) == e))
        throw ValidationError("witness divisor does not represent the element");
    HalfspaceSystem sys;
    sys.dim = fan.dim();
    for (int j = 0; j < fan.ray_count(); ++j) {
        if (std::binary_search(m.complement.begin(), m.complement.end(), j))
            sys.add_eq(fan.ray(j), witness_divisor[j]);
        else
            sys.add_le(fan.ray(j), witness_divisor[j]);
    }
    return has_lattice_point(sys);
}

bool monoid_leq(const DivisorMonoid& m1, const DivisorMonoid& m2) {
    check_same_home(m1, m2);
    if (m1.generator_rays == m2.generator_rays) return true;
    for (size_t t = 0; t < m1.generator_rays.size(); ++t) {
        IntVec witness(m1.fan->ray_count());
        witness[m1.generator_rays[t]] = 1;
        if (!contains(m2, m1.generators[t], witness)) return false;
    }
    return true;
}

bool monoid_eq(const DivisorMonoid& m1, const DivisorMonoid& m2) {
    return monoid_leq(m1, m2) && monoid_leq(m2, m1);
}

UpsilonCollection upsilon(const Fan& fan, const ClassGroup& cg) {
    if (!fan.complete()) throw PreconditionError("upsilon requires a complete fan");
    UpsilonCollection out;
    for (size_t id = 0; id < fan.cones().size(); ++id) {
        DivisorMonoid g = gamma(fan, cg, fan.cones()[id].rays);
        bool placed = false;
        for (UpsilonEntry& entry : out.entries)
            if (monoid_eq(entry.monoid, g)) {
                entry.cone_ids.push_back(static_cast<int>(id));
                placed = true;
                break;
            }
        if (!placed)
            out.entries.push_back(UpsilonEntry{std::move(g), {static_cast<int>(id)}});
    }
    return out;
}

} // namespace toric
