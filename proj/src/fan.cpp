#include "toric/fan.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "toric/errors.hpp"

namespace toric {

namespace {

std::string subset_str(const RaySubset& s) {
    std::ostringstream out;
    out << '{';
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out << ',';
        out << s[i] + 1;
    }
    out << '}';
    return out.str();
}

std::vector<IntVec> gather(const std::vector<IntVec>& rays, const RaySubset& s) {
    std::vector<IntVec> out;
    out.reserve(s.size());
    for (int i : s) out.push_back(rays[i]);
    return out;
}

int subset_rank(const std::vector<IntVec>& rays, const RaySubset& s, int dim) {
    if (s.empty()) return 0;
    IntMatrix m(static_cast<int>(s.size()), dim);
    for (size_t i = 0; i < s.size(); ++i)
        for (int j = 0; j < dim; ++j) m.at(static_cast<int>(i), j) = rays[s[i]][j];
    return rank(m);
}

// A subset of the generators is a face exactly when some functional vanishes
// on it and is strictly positive on the remaining generators.
bool face_functional_exists(const std::vector<IntVec>& gens, const std::vector<bool>& in_face,
                            int dim) {
    HalfspaceSystem sys;
    sys.dim = dim;
    for (size_t i = 0; i < gens.size(); ++i) {
        if (in_face[i])
            sys.add_eq(gens[i], 0);
        else
            sys.add_ge(gens[i], 1);
    }
    return rational_feasible(sys);
}

IntVec iv(std::initializer_list<long long> xs) {
    IntVec v;
    v.reserve(xs.size());
    for (long long x : xs) v.push_back(Int(x));
    return v;
}

} // namespace

IntMatrix Fan::ray_matrix() const {
    IntMatrix m(ray_count(), dim_);
    for (int i = 0; i < ray_count(); ++i)
        for (int j = 0; j < dim_; ++j) m.at(i, j) = rays_[i][j];
    return m;
}

std::optional<int> Fan::find_cone(const RaySubset& rays) const {
    for (size_t id = 0; id < cones_.size(); ++id)
        if (cones_[id].rays == rays) return static_cast<int>(id);
    return std::nullopt;
}

bool Fan::is_max_cone(int id) const {
    return std::find(max_cone_ids_.begin(), max_cone_ids_.end(), id) != max_cone_ids_.end();
}

IntVec primitive_vector(const IntVec& v) {
    Int g = vector_gcd(v);
    if (g == 0) throw ValidationError("primitive_vector: zero vector");
    IntVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
    return out;
}

bool cone_contains_vector(const std::vector<IntVec>& gens, const IntVec& x, int dim) {
    int k = static_cast<int>(gens.size());
    if (k == 0) return is_zero_vec(x);
    HalfspaceSystem sys;
    sys.dim = k;
    for (int t = 0; t < dim; ++t) {
        IntVec row(k);
        for (int i = 0; i < k; ++i) row[i] = gens[i][t];
        sys.add_eq(std::move(row), x[t]);
    }
    for (int i = 0; i < k; ++i) {
        IntVec e(k);
        e[i] = 1;
        sys.add_ge(std::move(e), 0);
    }
    return rational_feasible(sys);
}

bool is_pointed_cone(const std::vector<IntVec>& gens, int dim) {
    int k = static_cast<int>(gens.size());
    if (k == 0) return true;
    HalfspaceSystem sys;
    sys.dim = k;
    for (int t = 0; t < dim; ++t) {
        IntVec row(k);
        for (int i = 0; i < k; ++i) row[i] = gens[i][t];
        sys.add_eq(std::move(row), 0);
    }
    sys.add_eq(IntVec(k, Int(1)), 1);
    for (int i = 0; i < k; ++i) {
        IntVec e(k);
        e[i] = 1;
        sys.add_ge(std::move(e), 0);
    }
    return !rational_feasible(sys);
}

Fan build_fan(int dim, std::vector<IntVec> rays, std::vector<RaySubset> max_cones,
              std::string name) {
    if (dim < 0) throw ValidationError("fan dimension must be nonnegative");
    int r = static_cast<int>(rays.size());
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rays[i].size()) != dim)
            throw ValidationError("ray " + std::to_string(i + 1) + " has length " +
                                  std::to_string(rays[i].size()) + ", expected " +
                                  std::to_string(dim));
        Int g = vector_gcd(rays[i]);
        if (g == 0) throw ValidationError("ray " + std::to_string(i + 1) + " is zero");
        if (g != 1) throw ValidationError("ray " + std::to_string(i + 1) + " is not primitive");
        for (int j = 0; j < i; ++j)
            if (rays[j] == rays[i])
                throw ValidationError("ray " + std::to_string(i + 1) + " duplicates ray " +
                                      std::to_string(j + 1));
    }

    if (max_cones.empty()) throw ValidationError("fan needs at least one maximal cone");
    for (size_t c = 0; c < max_cones.size(); ++c) {
        RaySubset& s = max_cones[c];
        std::sort(s.begin(), s.end());
        for (size_t i = 0; i < s.size(); ++i) {
            if (s[i] < 0 || s[i] >= r)
                throw ValidationError("maximal cone " + std::to_string(c + 1) +
                                      " has a ray index out of range");
            if (i > 0 && s[i] == s[i - 1])
                throw ValidationError("maximal cone " + std::to_string(c + 1) +
                                      " repeats ray " + std::to_string(s[i] + 1));
        }
    }
    for (size_t c = 0; c < max_cones.size(); ++c)
        for (size_t c2 = 0; c2 < c; ++c2) {
            if (max_cones[c] == max_cones[c2])
                throw ValidationError("duplicate maximal cone " + subset_str(max_cones[c]));
            bool new_in_old = std::includes(max_cones[c2].begin(), max_cones[c2].end(),
                                            max_cones[c].begin(), max_cones[c].end());
            bool old_in_new = std::includes(max_cones[c].begin(), max_cones[c].end(),
                                            max_cones[c2].begin(), max_cones[c2].end());
            if (new_in_old || old_in_new) {
                const RaySubset& inner = new_in_old ? max_cones[c] : max_cones[c2];
                const RaySubset& outer = new_in_old ? max_cones[c2] : max_cones[c];
                throw ValidationError("cone " + subset_str(inner) +
                                      " is not maximal: contained in " + subset_str(outer));
            }
        }

    std::vector<bool> used(r, false);
    for (const RaySubset& s : max_cones)
        for (int i : s) used[i] = true;
    for (int i = 0; i < r; ++i)
        if (!used[i])
            throw ValidationError("ray " + std::to_string(i + 1) +
                                  " does not appear in any maximal cone");

    for (const RaySubset& s : max_cones) {
        std::vector<IntVec> gens = gather(rays, s);
        if (!is_pointed_cone(gens, dim))
            throw ValidationError("cone " + subset_str(s) + " is not pointed");
        for (size_t j = 0; j < gens.size(); ++j) {
            std::vector<IntVec> others;
            for (size_t i = 0; i < gens.size(); ++i)
                if (i != j) others.push_back(gens[i]);
            if (cone_contains_vector(others, gens[j], dim))
                throw ValidationError("ray " + std::to_string(s[j] + 1) +
                                      " is not extremal in cone " + subset_str(s));
        }
    }

    // Any two cones must meet in a common face; certified by a functional
    // vanishing on the shared rays and strictly separating the rest.
    for (size_t c = 0; c < max_cones.size(); ++c)
        for (size_t c2 = c + 1; c2 < max_cones.size(); ++c2) {
            const RaySubset& s1 = max_cones[c];
            const RaySubset& s2 = max_cones[c2];
            RaySubset common;
            std::set_intersection(s1.begin(), s1.end(), s2.begin(), s2.end(),
                                  std::back_inserter(common));
            HalfspaceSystem sys;
            sys.dim = dim;
            for (int i : common) sys.add_eq(rays[i], 0);
            for (int i : s1)
                if (!std::binary_search(common.begin(), common.end(), i)) sys.add_ge(rays[i], 1);
            for (int i : s2)
                if (!std::binary_search(common.begin(), common.end(), i)) sys.add_le(rays[i], -1);
            if (!rational_feasible(sys))
                throw ValidationError("cones " + subset_str(s1) + " and " + subset_str(s2) +
                                      " do not intersect in a common face");
        }

    std::map<RaySubset, int> face_dims;
    for (const RaySubset& s : max_cones) {
        std::vector<IntVec> gens = gather(rays, s);
        int k = static_cast<int>(s.size());
        for (unsigned mask = 0; mask < (1u << k); ++mask) {
            std::vector<bool> in_face(k, false);
            RaySubset f;
            for (int b = 0; b < k; ++b)
                if (mask >> b & 1u) {
                    in_face[b] = true;
                    f.push_back(s[b]);
                }
            if (face_dims.count(f)) continue;
            if (!face_functional_exists(gens, in_face, dim)) continue;
            face_dims[f] = subset_rank(rays, f, dim);
        }
    }

    Fan fan;
    fan.dim_ = dim;
    fan.rays_ = std::move(rays);
    for (const auto& [s, d] : face_dims) fan.cones_.push_back(Cone{s, d});
    std::sort(fan.cones_.begin(), fan.cones_.end(), [](const Cone& a, const Cone& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        return a.rays < b.rays;
    });
    for (const RaySubset& s : max_cones) {
        auto id = fan.find_cone(s);
        if (!id) throw InternalError("build_fan: maximal cone lost during face closure");
        fan.max_cone_ids_.push_back(*id);
    }

    bool complete = true;
    for (int id : fan.max_cone_ids_)
        if (fan.cones_[id].dim != dim) complete = false;
    for (size_t id = 0; id < fan.cones_.size(); ++id) {
        if (fan.cones_[id].dim != dim - 1) continue;
        const RaySubset& w = fan.cones_[id].rays;
        std::vector<int> hosts;
        for (size_t p = 0; p < max_cones.size(); ++p)
            if (std::includes(max_cones[p].begin(), max_cones[p].end(), w.begin(), w.end()))
                hosts.push_back(static_cast<int>(p));
        if (hosts.size() == 2)
            fan.walls_.push_back(Wall{static_cast<int>(id), hosts[0], hosts[1]});
        else
            complete = false;
    }
    fan.complete_ = complete;
    fan.name_ = std::move(name);
    return fan;
}

std::vector<Cone> faces_of(const Fan& fan, const Cone& cone) {
    auto id = fan.find_cone(cone.rays);
    if (!id) throw ValidationError("cone " + subset_str(cone.rays) + " is not in the fan");
    std::vector<Cone> out;
    for (const Cone& c : fan.cones())
        if (std::includes(cone.rays.begin(), cone.rays.end(), c.rays.begin(), c.rays.end()))
            out.push_back(c);
    return out;
}

bool is_complete(const Fan& fan) { return fan.complete(); }

FanProperties fan_properties(const Fan& fan) {
    bool simplicial = true;
    for (const Cone& c : fan.cones())
        if (static_cast<int>(c.rays.size()) != c.dim) {
            simplicial = false;
            break;
        }
    bool smooth = simplicial;
    if (smooth) {
        for (int id : fan.max_cone_ids()) {
            const Cone& c = fan.cone(id);
            if (c.rays.empty()) continue;
            IntMatrix m(static_cast<int>(c.rays.size()), fan.dim());
            for (size_t i = 0; i < c.rays.size(); ++i)
                for (int j = 0; j < fan.dim(); ++j)
                    m.at(static_cast<int>(i), j) = fan.ray(c.rays[i])[j];
            auto diag = smith_normal_form(m).diagonal();
            int ones = 0;
            for (const Int& d : diag)
                if (d == 1) ++ones;
            if (ones != c.dim) {
                smooth = false;
                break;
            }
        }
    }
    return FanProperties{simplicial, smooth};
}

Fan make_projective_space(int n) {
    if (n < 1) throw ValidationError("projective_space: n must be >= 1");
    std::vector<IntVec> rays;
    for (int i = 0; i < n; ++i) {
        IntVec e(n);
        e[i] = 1;
        rays.push_back(e);
    }
    rays.push_back(IntVec(n, Int(-1)));
    std::vector<RaySubset> max_cones;
    for (int omit = 0; omit <= n; ++omit) {
        RaySubset s;
        for (int i = 0; i <= n; ++i)
            if (i != omit) s.push_back(i);
        max_cones.push_back(s);
    }
    return build_fan(n, rays, max_cones, "P^" + std::to_string(n));
}

Fan make_hirzebruch(long long s) {
    if (s < 1) throw ValidationError("hirzebruch: s must be >= 1");
    std::vector<IntVec> rays = {iv({1, 0}), iv({0, -1}), iv({-1, s}), iv({0, 1})};
    std::vector<RaySubset> max_cones = {{0, 1}, {1, 2}, {2, 3}, {0, 3}};
    return build_fan(2, rays, max_cones, "H_" + std::to_string(s));
}

Fan make_weighted_p11s(long long s) {
    if (s < 2) throw ValidationError("weighted_p11s: s must be >= 2");
    std::vector<IntVec> rays = {iv({1, 0}), iv({0, -1}), iv({-1, s})};
    std::vector<RaySubset> max_cones = {{0, 1}, {1, 2}, {0, 2}};
    return build_fan(2, rays, max_cones, "P(1,1," + std::to_string(s) + ")");
}

Fan make_b_surface(long long s) {
    if (s < 1) throw ValidationError("b_surface: s must be >= 1");
    std::vector<IntVec> rays = {iv({s, 1}), iv({s, -1}), iv({-s, -1}), iv({-s, 1})};
    std::vector<RaySubset> max_cones = {{0, 1}, {1, 2}, {2, 3}, {0, 3}};
    return build_fan(2, rays, max_cones, "B_" + std::to_string(s));
}

Fan product_fan(const Fan& a, const Fan& b) {
    int d = a.dim() + b.dim();
    std::vector<IntVec> rays;
    for (const IntVec& v : a.rays()) {
        IntVec w(d);
        for (int j = 0; j < a.dim(); ++j) w[j] = v[j];
        rays.push_back(w);
    }
    for (const IntVec& v : b.rays()) {
        IntVec w(d);
        for (int j = 0; j < b.dim(); ++j) w[a.dim() + j] = v[j];
        rays.push_back(w);
    }
    std::vector<RaySubset> max_cones;
    for (int ia : a.max_cone_ids())
        for (int ib : b.max_cone_ids()) {
            RaySubset s = a.cone(ia).rays;
            for (int i : b.cone(ib).rays) s.push_back(i + a.ray_count());
            max_cones.push_back(s);
        }
    std::string name;
    if (!a.name().empty() && !b.name().empty())
        name = a.name() + " x " + b.name();
    else
        name = a.name().empty() ? b.name() : a.name();
    return build_fan(d, rays, max_cones, name);
}

} // namespace toric
