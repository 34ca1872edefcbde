#include "toric/orbits.hpp"

#include <algorithm>
#include <numeric>

#include "toric/errors.hpp"

namespace toric {

Cone sigma_max(const Fan& fan, const ClassGroup& cg, const DivisorMonoid& monoid) {
    RaySubset outside;
    for (int i = 0; i < fan.ray_count(); ++i) {
        IntVec witness(fan.ray_count());
        witness[i] = 1;
        if (!contains(monoid, cg.divisor_class(i), witness)) outside.push_back(i);
    }
    auto id = fan.find_cone(outside);
    if (!id) throw InternalError("sigma_max ray set is not a fan cone");
    if (!monoid_eq(gamma(fan, cg, outside), monoid))
        throw InternalError("sigma_max monoid differs from the class monoid");
    return fan.cone(*id);
}

std::vector<OrbitClass> classify_aut0(const Fan& fan, const ClassGroup& cg) {
    UpsilonCollection ups = upsilon(fan, cg);
    std::vector<OrbitClass> out;
    for (UpsilonEntry& entry : ups.entries) {
        OrbitClass cls;
        cls.cone_ids = entry.cone_ids;
        Cone sm = sigma_max(fan, cg, entry.monoid);
        cls.sigma_max_id = *fan.find_cone(sm.rays);
        cls.min_orbit_dim = fan.dim();
        cls.max_orbit_dim = 0;
        for (int id : cls.cone_ids) {
            int od = fan.dim() - fan.cone(id).dim;
            cls.min_orbit_dim = std::min(cls.min_orbit_dim, od);
            cls.max_orbit_dim = std::max(cls.max_orbit_dim, od);
        }
        cls.monoid = std::move(entry.monoid);
        out.push_back(std::move(cls));
    }
    return out;
}

std::vector<OrbitClass> orbit_classes_from_partition(const Fan& fan, const ClassGroup& cg,
                                                     const std::vector<std::vector<int>>& parts) {
    std::vector<OrbitClass> out;
    for (const std::vector<int>& part : parts) {
        if (part.empty()) throw ValidationError("empty part in cone partition");
        OrbitClass cls;
        cls.cone_ids = part;
        std::sort(cls.cone_ids.begin(), cls.cone_ids.end());
        for (int id : cls.cone_ids)
            if (id < 0 || id >= (int)fan.cones().size())
                throw ValidationError("cone id out of range in partition");
        cls.monoid = gamma(fan, cg, fan.cone(cls.cone_ids.front()).rays);
        Cone sm = sigma_max(fan, cg, cls.monoid);
        cls.sigma_max_id = *fan.find_cone(sm.rays);
        cls.min_orbit_dim = fan.dim();
        cls.max_orbit_dim = 0;
        for (int id : cls.cone_ids) {
            int od = fan.dim() - fan.cone(id).dim;
            cls.min_orbit_dim = std::min(cls.min_orbit_dim, od);
            cls.max_orbit_dim = std::max(cls.max_orbit_dim, od);
        }
        out.push_back(std::move(cls));
    }
    return out;
}

std::vector<std::vector<int>> bfs_oracle_classification(const Fan& fan, const RootSet& rs) {
    int n = static_cast<int>(fan.cones().size());
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const DemazureRoot& r : rs.roots)
        for (const auto& [s1, s2] : hm_connected_pairs(fan, r)) {
            int a = find(*fan.find_cone(s1.rays));
            int b = find(*fan.find_cone(s2.rays));
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    std::vector<std::vector<int>> components;
    std::vector<int> slot(n, -1);
    for (int id = 0; id < n; ++id) {
        int root = find(id);
        if (slot[root] < 0) {
            slot[root] = static_cast<int>(components.size());
            components.emplace_back();
        }
        components[slot[root]].push_back(id);
    }
    return components;
}

OrbitPoset closure_poset(const Fan& fan, const ClassGroup& cg,
                         std::vector<OrbitClass> classes) {
    (void)fan;
    (void)cg;
    OrbitPoset poset;
    size_t n = classes.size();
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            leq[i][j] = monoid_leq(classes[i].monoid, classes[j].monoid);
        }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (leq[i][j]) poset.order.emplace_back(static_cast<int>(i), static_cast<int>(j));
    for (const auto& [i, j] : poset.order) {
        bool shortcut = false;
        for (size_t k = 0; k < n && !shortcut; ++k)
            if (leq[i][k] && leq[k][j]) shortcut = true;
        if (!shortcut) poset.reduction.emplace_back(i, j);
    }
    poset.classes = std::move(classes);
    return poset;
}

bool cone_recognition(const Fan& fan, const ClassGroup& cg, const UpsilonCollection& ups,
                      const RaySubset& s) {
    RaySubset sorted = s;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] < 0 || sorted[i] >= fan.ray_count())
            throw ValidationError("ray index " + std::to_string(sorted[i] + 1) +
                                  " out of range");
        if (i > 0 && sorted[i] == sorted[i - 1])
            throw ValidationError("repeated ray index " + std::to_string(sorted[i] + 1));
    }
    std::vector<IntVec> gens;
    for (int i : sorted) gens.push_back(fan.ray(i));
    if (!is_pointed_cone(gens, fan.dim()))
        throw ValidationError("generator subset does not span a pointed cone");
    for (size_t j = 0; j < gens.size(); ++j) {
        std::vector<IntVec> others;
        for (size_t i = 0; i < gens.size(); ++i)
            if (i != j) others.push_back(gens[i]);
        if (cone_contains_vector(others, gens[j], fan.dim()))
            throw ValidationError("ray " + std::to_string(sorted[j] + 1) +
                                  " is not extremal in the generator subset");
    }
    DivisorMonoid g = gamma(fan, cg, sorted);
    for (const UpsilonEntry& entry : ups.entries)
        if (monoid_eq(entry.monoid, g)) return true;
    return false;
}

} // namespace toric
