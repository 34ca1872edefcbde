#include "toric/roots.hpp"

#include <set>

#include "toric/errors.hpp"

namespace toric {

RootSet demazure_roots(const Fan& fan) {
    RootSet out;
    for (int t = 0; t < fan.ray_count(); ++t) {
        HalfspaceSystem sys;
        sys.dim = fan.dim();
        sys.add_eq(fan.ray(t), -1);
        for (int j = 0; j < fan.ray_count(); ++j)
            if (j != t) sys.add_ge(fan.ray(j), 0);
        for (IntVec& m : lattice_points(sys))
            out.roots.push_back(DemazureRoot{std::move(m), t, false});
    }
    std::set<IntVec> all;
    for (const DemazureRoot& r : out.roots) all.insert(r.m);
    for (DemazureRoot& r : out.roots) r.semisimple = all.count(vec_scale(-1, r.m)) > 0;
    return out;
}

std::vector<DemazureRoot> semisimple_roots(const RootSet& rs) {
    std::vector<DemazureRoot> out;
    for (const DemazureRoot& r : rs.roots)
        if (r.semisimple) out.push_back(r);
    return out;
}

std::vector<std::pair<Cone, Cone>> hm_connected_pairs(const Fan& fan,
                                                      const DemazureRoot& root) {
    if (root.eta_index < 0 || root.eta_index >= fan.ray_count() ||
        static_cast<int>(root.m.size()) != fan.dim())
        throw ValidationError("root does not belong to this fan");
    std::vector<Int> pairing(fan.ray_count());
    for (int j = 0; j < fan.ray_count(); ++j) pairing[j] = dot(root.m, fan.ray(j));
    if (pairing[root.eta_index] != -1)
        throw ValidationError("root does not belong to this fan");
    for (int j = 0; j < fan.ray_count(); ++j)
        if (j != root.eta_index && pairing[j] < 0)
            throw ValidationError("root does not belong to this fan");

    std::vector<std::pair<Cone, Cone>> out;
    for (const Cone& sigma2 : fan.cones()) {
        bool nonpositive = true;
        for (int i : sigma2.rays)
            if (pairing[i] > 0) {
                nonpositive = false;
                break;
            }
        if (!nonpositive) continue;
        RaySubset zero;
        for (int i : sigma2.rays)
            if (pairing[i] == 0) zero.push_back(i);
        auto id = fan.find_cone(zero);
        if (!id)
            throw InternalError("zero set of a supporting functional must be a fan cone");
        const Cone& sigma1 = fan.cone(*id);
        if (sigma1.dim == sigma2.dim - 1) out.emplace_back(sigma1, sigma2);
    }
    return out;
}

} // namespace toric
