#include "toric/symmetry.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "toric/errors.hpp"
#include "toric/monoid.hpp"

namespace toric {

namespace {

RaySubset permuted(const RaySubset& s, const std::vector<int>& perm) {
    RaySubset out;
    out.reserve(s.size());
    for (int i : s) out.push_back(perm[i]);
    std::sort(out.begin(), out.end());
    return out;
}

// Solves matrix * v_i = v_{perm[i]} for all rays at once.  The rays span, so
// the solution is unique when it exists over the integers.
std::optional<IntMatrix> symmetry_matrix(const Fan& fan, const std::vector<int>& perm) {
    const int r = fan.ray_count();
    const int d = fan.dim();
    IntMatrix psi(d, d);
    for (int c = 0; c < d; ++c) {
        IntVec target(r);
        for (int i = 0; i < r; ++i) target[i] = fan.ray(perm[i])[c];
        auto sol = solve_integer_system(fan.ray_matrix(), target);
        if (!sol) return std::nullopt;
        for (int t = 0; t < d; ++t) psi.at(c, t) = sol->particular[t];
    }
    return psi;
}

} // namespace

std::vector<FanSymmetry> fan_symmetries(const Fan& fan) {
    const int r = fan.ray_count();
    const int d = fan.dim();
    if (d == 0) return {FanSymmetry{{}, IntMatrix::identity(0)}};
    if (rank(fan.ray_matrix()) < d)
        throw PreconditionError("fan symmetries require rays that span the ambient space");

    // cooccur[i][j]: number of maximal cones containing both rays.  Any
    // symmetry preserves these counts, which prunes the permutation search.
    std::vector<std::vector<int>> cooccur(r, std::vector<int>(r, 0));
    for (int id : fan.max_cone_ids())
        for (int i : fan.cone(id).rays)
            for (int j : fan.cone(id).rays) ++cooccur[i][j];

    std::vector<int> wall_count(r, 0);
    for (const Wall& w : fan.walls())
        for (int i : fan.cone(w.wall_id).rays) ++wall_count[i];

    std::vector<std::vector<int>> sig(r);
    for (int i = 0; i < r; ++i) {
        sig[i] = {cooccur[i][i], wall_count[i]};
        std::vector<int> sizes;
        for (int id : fan.max_cone_ids()) {
            const RaySubset& s = fan.cone(id).rays;
            if (std::binary_search(s.begin(), s.end(), i)) sizes.push_back((int)s.size());
        }
        std::sort(sizes.begin(), sizes.end());
        sig[i].insert(sig[i].end(), sizes.begin(), sizes.end());
    }

    std::vector<FanSymmetry> out;
    std::vector<int> perm(r, -1);
    std::vector<bool> used(r, false);

    auto accept = [&]() {
        auto psi = symmetry_matrix(fan, perm);
        if (!psi) return;
        Int det = determinant(*psi);
        if (det != 1 && det != -1) return;
        for (int i = 0; i < r; ++i)
            if (psi->apply(fan.ray(i)) != fan.ray(perm[i])) return;
        for (int id : fan.max_cone_ids()) {
            auto image = fan.find_cone(permuted(fan.cone(id).rays, perm));
            if (!image || !fan.is_max_cone(*image)) return;
        }
        out.push_back(FanSymmetry{perm, *psi});
    };

    std::function<void(int)> extend = [&](int pos) {
        if (pos == r) {
            accept();
            return;
        }
        for (int j = 0; j < r; ++j) {
            if (used[j] || sig[j] != sig[pos]) continue;
            bool ok = true;
            for (int q = 0; q < pos && ok; ++q)
                if (cooccur[pos][q] != cooccur[j][perm[q]]) ok = false;
            if (!ok) continue;
            perm[pos] = j;
            used[j] = true;
            extend(pos + 1);
            used[j] = false;
            perm[pos] = -1;
        }
    };
    extend(0);
    return out;
}

ClassElement ClassAutomorphism::apply(const ClassElement& e) const {
    IntVec lifted = cg_->lift(e);
    IntVec moved(ray_count_, 0);
    for (int i = 0; i < ray_count_; ++i) moved[perm_[i]] = lifted[i];
    return cg_->class_of_divisor(moved);
}

ClassAutomorphism induced_class_map(const Fan& fan, const ClassGroup& cg,
                                    const FanSymmetry& sym) {
    const int r = fan.ray_count();
    const int d = fan.dim();
    if ((int)sym.perm.size() != r || sym.matrix.rows() != d)
        throw ValidationError("symmetry does not match the fan");
    {
        std::vector<bool> seen(r, false);
        for (int i = 0; i < r; ++i) {
            if (sym.perm[i] < 0 || sym.perm[i] >= r || seen[sym.perm[i]])
                throw ValidationError("symmetry does not match the fan");
            seen[sym.perm[i]] = true;
            if (sym.matrix.apply(fan.ray(i)) != fan.ray(sym.perm[i]))
                throw ValidationError("symmetry does not match the fan");
        }
    }

    // Well-definedness on Cl: permuting coordinates must carry the lattice of
    // principal divisors into itself.
    const IntMatrix a = fan.ray_matrix();
    for (int t = 0; t < d; ++t) {
        IntVec row(r, 0);
        for (int i = 0; i < r; ++i) row[sym.perm[i]] = a.at(i, t);
        if (!solve_integer_system(a, row))
            throw InternalError("permuted principal divisor left the principal lattice");
    }

    ClassAutomorphism phi;
    phi.cg_ = &cg;
    phi.ray_count_ = r;
    phi.perm_ = sym.perm;

    const int k = cg.free_rank();
    const int t = cg.torsion_rank();
    phi.matrix_ = IntMatrix(k + t, k + t);
    for (int c = 0; c < k + t; ++c) {
        ClassElement unit = cg.zero();
        if (c < k)
            unit.free[c] = 1;
        else
            unit.residues[c - k] = 1;
        ClassElement image = phi.apply(unit);
        for (int row = 0; row < k; ++row) phi.matrix_.at(row, c) = image.free[row];
        for (int row = 0; row < t; ++row) phi.matrix_.at(k + row, c) = image.residues[row];
    }
    return phi;
}

std::vector<std::vector<int>> classify_aut(const Fan& fan, const ClassGroup& cg,
                                           const std::vector<OrbitClass>& classes) {
    const auto syms = fan_symmetries(fan);
    const int n = (int)classes.size();

    std::vector<int> class_of_cone(fan.cones().size(), -1);
    for (int c = 0; c < n; ++c)
        for (int id : classes[c].cone_ids) class_of_cone[id] = c;

    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };

    for (const FanSymmetry& g : syms) {
        ClassAutomorphism phi = induced_class_map(fan, cg, g);
        for (int i = 0; i < fan.ray_count(); ++i) {
            ClassElement image = phi.apply(cg.divisor_class(i));
            if (!(image == cg.divisor_class(g.perm[i])))
                throw InternalError("induced map failed to permute the divisor classes");
        }

        // Every cone of a class must land in one common class.
        std::vector<int> image_class(n, -1);
        for (int id = 0; id < (int)fan.cones().size(); ++id) {
            auto iid = fan.find_cone(permuted(fan.cone(id).rays, g.perm));
            if (!iid) throw InternalError("symmetry failed to map a cone onto a cone");
            int c = class_of_cone[id];
            int c2 = class_of_cone[*iid];
            if (image_class[c] == -1)
                image_class[c] = c2;
            else if (image_class[c] != c2)
                throw InternalError("symmetry split an orbit class");
        }

        // The image class carries the image monoid.
        for (int c = 0; c < n; ++c) {
            RaySubset img = permuted(fan.cone(classes[c].sigma_max_id).rays, g.perm);
            if (!monoid_eq(gamma(fan, cg, img), classes[image_class[c]].monoid))
                throw InternalError("symmetry failed to carry a class monoid over");
        }

        for (int c = 0; c < n; ++c) {
            int a = find(c), b = find(image_class[c]);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    }

    std::map<int, std::vector<int>> groups;
    for (int c = 0; c < n; ++c) groups[find(c)].push_back(c);
    std::vector<std::vector<int>> out;
    for (auto& [root, members] : groups) out.push_back(std::move(members));
    return out;
}

bool is_transitive(const Fan& fan, const ClassGroup& cg) {
    auto classes = classify_aut0(fan, cg);
    return classify_aut(fan, cg, classes).size() == 1;
}

std::optional<std::vector<int>> decompose_product(const Fan& fan, const ClassGroup& cg,
                                                  const RootSet& rs) {
    const int r = fan.ray_count();
    const int d = fan.dim();
    if (d == 0) return std::nullopt;

    std::vector<const DemazureRoot*> ss;
    for (const DemazureRoot& root : rs.roots)
        if (root.semisimple) ss.push_back(&root);
    if (ss.empty()) return std::nullopt;
    {
        IntMatrix m((int)ss.size(), d);
        for (int i = 0; i < (int)ss.size(); ++i)
            for (int c = 0; c < d; ++c) m.at(i, c) = ss[i]->m[c];
        if (rank(m) < d) return std::nullopt;
    }

    // Rays i, j belong to the same factor when some semisimple root pairs to
    // -1 on one and +1 on the other.
    std::vector<int> parent(r);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (const DemazureRoot* root : ss)
        for (int j = 0; j < r; ++j)
            if (dot(root->m, fan.ray(j)) == 1) {
                int a = find(root->eta_index), b = find(j);
                if (a != b) parent[std::max(a, b)] = std::min(a, b);
            }

    std::map<int, std::vector<int>> by_root;
    for (int i = 0; i < r; ++i) by_root[find(i)].push_back(i);
    std::vector<std::vector<int>> groups;
    for (auto& [root, members] : by_root) groups.push_back(std::move(members));

    std::vector<int> dims;
    for (const auto& g : groups) {
        if ((int)g.size() < 2) return std::nullopt;
        IntVec sum(d, 0);
        for (int i : g) sum = vec_add(sum, fan.ray(i));
        if (!is_zero_vec(sum)) return std::nullopt;
        dims.push_back((int)g.size() - 1);
    }
    if (std::accumulate(dims.begin(), dims.end(), 0) != d) return std::nullopt;

    // Keep all but the last ray of each group; together they must form a
    // lattice basis, giving the coordinate change onto the model fan.
    std::vector<int> kept;
    std::vector<int> model_index(r, -1);
    int offset = 0;
    for (int g = 0; g < (int)groups.size(); ++g) {
        for (int j = 0; j < (int)groups[g].size(); ++j) model_index[groups[g][j]] = offset + j;
        for (int j = 0; j + 1 < (int)groups[g].size(); ++j) kept.push_back(groups[g][j]);
        offset += (int)groups[g].size();
    }
    IntMatrix basis(d, d);
    for (int row = 0; row < d; ++row)
        for (int c = 0; c < d; ++c) basis.at(row, c) = fan.ray(kept[row])[c];
    Int det = determinant(basis);
    if (det != 1 && det != -1) return std::nullopt;

    Fan model = make_projective_space(dims[0]);
    for (int g = 1; g < (int)groups.size(); ++g)
        model = product_fan(model, make_projective_space(dims[g]));

    std::set<RaySubset> model_cones;
    for (int id : model.max_cone_ids()) model_cones.insert(model.cone(id).rays);
    std::set<RaySubset> mapped;
    for (int id : fan.max_cone_ids()) mapped.insert(permuted(fan.cone(id).rays, model_index));
    if (mapped != model_cones) return std::nullopt;

    if (upsilon(fan, cg).entries.size() != 1) return std::nullopt;

    std::sort(dims.begin(), dims.end());
    return dims;
}

} // namespace toric
