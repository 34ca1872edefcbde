#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "toric/class_group.hpp"
#include "toric/errors.hpp"
#include "toric/fan.hpp"
#include "toric/io.hpp"
#include "toric/monoid.hpp"
#include "toric/orbits.hpp"
#include "toric/roots.hpp"
#include "toric/symmetry.hpp"

namespace py = pybind11;
using namespace toric;

namespace {

py::int_ int_out(const Int& x) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(x.str().c_str(), nullptr, 10));
}

Int int_in(py::handle h) {
    return Int(py::str(h).cast<std::string>());
}

py::tuple vec_out(const IntVec& v) {
    py::tuple t(v.size());
    for (size_t i = 0; i < v.size(); ++i) t[i] = int_out(v[i]);
    return t;
}

IntVec vec_in(py::sequence seq) {
    IntVec v;
    for (py::handle h : seq) v.push_back(int_in(h));
    return v;
}

py::list matrix_out(const IntMatrix& m) {
    py::list rows;
    for (int i = 0; i < m.rows(); ++i) rows.append(vec_out(m.row(i)));
    return rows;
}

py::tuple subset_out(const RaySubset& s) {
    py::tuple t(s.size());
    for (size_t i = 0; i < s.size(); ++i) t[i] = s[i];
    return t;
}

py::tuple class_out(const ClassElement& e) {
    return py::make_tuple(vec_out(e.free), vec_out(e.residues));
}

py::dict orbit_class_out(const Fan& fan, const OrbitClass& cls) {
    py::dict d;
    py::list cones;
    for (int id : cls.cone_ids) cones.append(subset_out(fan.cone(id).rays));
    d["cones"] = cones;
    d["sigma_max"] = subset_out(fan.cone(cls.sigma_max_id).rays);
    d["generator_rays"] = subset_out(cls.monoid.generator_rays);
    d["orbit_dims"] = py::make_tuple(cls.min_orbit_dim, cls.max_orbit_dim);
    return d;
}

std::vector<OrbitClass> classes_of(const Fan& fan, const ClassGroup& cg) {
    return classify_aut0(fan, cg);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Torus orbit classification for complete toric varieties";

    py::register_exception<ValidationError>(m, "FanError", PyExc_ValueError);
    py::register_exception<PreconditionError>(m, "IncompleteFanError", PyExc_ValueError);

    py::class_<Fan>(m, "Fan")
        .def_property_readonly("dim", &Fan::dim)
        .def_property_readonly("name", &Fan::name)
        .def_property_readonly("rays",
                               [](const Fan& f) {
                                   py::list out;
                                   for (int i = 0; i < f.ray_count(); ++i)
                                       out.append(vec_out(f.ray(i)));
                                   return out;
                               })
        .def_property_readonly("max_cones",
                               [](const Fan& f) {
                                   py::list out;
                                   for (size_t id = 0; id < f.cones().size(); ++id)
                                       if (f.is_max_cone(static_cast<int>(id)))
                                           out.append(subset_out(f.cones()[id].rays));
                                   return out;
                               })
        .def_property_readonly("cones",
                               [](const Fan& f) {
                                   py::list out;
                                   for (const Cone& c : f.cones()) out.append(subset_out(c.rays));
                                   return out;
                               })
        .def("__repr__", [](const Fan& f) { return "<" + fan_header(f) + ">"; });

    m.def(
        "build_fan",
        [](int dim, const std::vector<py::sequence>& rays,
           std::vector<RaySubset> max_cones, const std::string& name) {
            std::vector<IntVec> rs;
            for (const py::sequence& r : rays) rs.push_back(vec_in(r));
            return build_fan(dim, std::move(rs), std::move(max_cones), name);
        },
        py::arg("dim"), py::arg("rays"), py::arg("max_cones"), py::arg("name") = "",
        "Build a fan from rays and maximal cones given by 0-based ray indices");
    m.def("parse_fan", [](const std::string& text) {
        return document_to_fan(parse_fan_document(text));
    });
    m.def("serialize_fan",
          [](const Fan& f) { return serialize_fan_document(document_from_fan(f)); });
    m.def(
        "family",
        [](const std::string& expr, std::optional<long long> param) {
            return make_family(expr, param);
        },
        py::arg("expr"), py::arg("param") = std::nullopt);
    m.def("projective_space", &make_projective_space, py::arg("n"));
    m.def("hirzebruch", &make_hirzebruch, py::arg("s"));
    m.def("weighted_p11s", &make_weighted_p11s, py::arg("s"));
    m.def("b_surface", &make_b_surface, py::arg("s"));
    m.def("product", &product_fan, py::arg("a"), py::arg("b"));

    py::class_<ClassGroup>(m, "ClassGroup")
        .def_property_readonly("free_rank", &ClassGroup::free_rank)
        .def_property_readonly("torsion",
                               [](const ClassGroup& cg) {
                                   py::list t;
                                   for (const Int& d : cg.torsion()) t.append(int_out(d));
                                   return t;
                               })
        .def("divisor_class",
             [](const ClassGroup& cg, int i) { return class_out(cg.divisor_class(i)); },
             py::arg("ray"), "Class of the prime divisor of a ray, 0-based")
        .def("class_of_divisor",
             [](const ClassGroup& cg, py::sequence coeffs) {
                 return class_out(cg.class_of_divisor(vec_in(coeffs)));
             })
        .def("__repr__",
             [](const ClassGroup& cg) { return "<ClassGroup " + cg.group_to_string() + ">"; })
        .def("__str__", &ClassGroup::group_to_string);

    m.def("class_group", &compute_class_group, py::arg("fan"));

    py::class_<DemazureRoot>(m, "Root")
        .def_property_readonly("m", [](const DemazureRoot& r) { return vec_out(r.m); })
        .def_property_readonly("ray", [](const DemazureRoot& r) { return r.eta_index; })
        .def_property_readonly("semisimple",
                               [](const DemazureRoot& r) { return r.semisimple; })
        .def("__repr__", [](const DemazureRoot& r) {
            return "<Root m=" + py::str(vec_out(r.m)).cast<std::string>() + " ray=" +
                   std::to_string(r.eta_index) + (r.semisimple ? " semisimple>" : ">");
        });

    m.def("demazure_roots",
          [](const Fan& fan) { return demazure_roots(fan).roots; }, py::arg("fan"),
          "Demazure roots, grouped by distinguished ray");

    m.def(
        "upsilon",
        [](const Fan& fan) {
            ClassGroup cg = compute_class_group(fan);
            py::list out;
            for (const UpsilonEntry& e : upsilon(fan, cg).entries) {
                py::dict d;
                d["generator_rays"] = subset_out(e.monoid.generator_rays);
                py::list cones;
                for (int id : e.cone_ids) cones.append(subset_out(fan.cone(id).rays));
                d["cones"] = cones;
                out.append(d);
            }
            return out;
        },
        py::arg("fan"), "Distinct divisor class monoids with their cones");

    m.def(
        "classify",
        [](const Fan& fan) {
            ClassGroup cg = compute_class_group(fan);
            py::list out;
            for (const OrbitClass& cls : classes_of(fan, cg))
                out.append(orbit_class_out(fan, cls));
            return out;
        },
        py::arg("fan"), "Orbit classes of the connected automorphism group");

    m.def(
        "classify_aut",
        [](const Fan& fan) {
            ClassGroup cg = compute_class_group(fan);
            return classify_aut(fan, cg, classes_of(fan, cg));
        },
        py::arg("fan"),
        "Groups of connected-group class indices merged by fan symmetries");

    m.def(
        "closure_poset",
        [](const Fan& fan) {
            ClassGroup cg = compute_class_group(fan);
            OrbitPoset p = closure_poset(fan, cg, classes_of(fan, cg));
            py::dict d;
            py::list classes;
            for (const OrbitClass& cls : p.classes) classes.append(orbit_class_out(fan, cls));
            d["classes"] = classes;
            d["order"] = p.order;
            d["reduction"] = p.reduction;
            return d;
        },
        py::arg("fan"), "Orbit classes with the strict closure order and its reduction");

    m.def(
        "symmetries",
        [](const Fan& fan) {
            py::list out;
            for (const FanSymmetry& sym : fan_symmetries(fan)) {
                py::dict d;
                d["perm"] = sym.perm;
                d["matrix"] = matrix_out(sym.matrix);
                out.append(d);
            }
            return out;
        },
        py::arg("fan"), "Lattice automorphisms preserving the fan, as ray permutations");

    m.def(
        "is_transitive",
        [](const Fan& fan) { return is_transitive(fan, compute_class_group(fan)); },
        py::arg("fan"));

    m.def(
        "decompose_product",
        [](const Fan& fan) {
            ClassGroup cg = compute_class_group(fan);
            return decompose_product(fan, cg, demazure_roots(fan));
        },
        py::arg("fan"),
        "Factor dimensions if the variety is a product of projective spaces");

    m.def(
        "report",
        [](const Fan& fan, const std::string& kind) {
            ClassGroup cg = compute_class_group(fan);
            if (kind == "clgroup") return clgroup_text(fan, cg);
            if (kind == "roots") return roots_text(fan, demazure_roots(fan));
            if (kind == "upsilon") return upsilon_text(fan, upsilon(fan, cg));
            if (kind == "classify") return classify_text(fan, classes_of(fan, cg));
            if (kind == "classify-aut") {
                auto classes = classes_of(fan, cg);
                return classify_aut_text(fan, classes, classify_aut(fan, cg, classes));
            }
            if (kind == "poset")
                return poset_text(fan, closure_poset(fan, cg, classes_of(fan, cg)));
            if (kind == "symmetries") return symmetries_text(fan, fan_symmetries(fan));
            if (kind == "transitivity")
                return transitivity_text(fan, is_transitive(fan, cg),
                                         decompose_product(fan, cg, demazure_roots(fan)));
            throw ValidationError("unknown report kind: " + kind);
        },
        py::arg("fan"), py::arg("kind"),
        "Text report; kinds: clgroup, roots, upsilon, classify, classify-aut, poset, "
        "symmetries, transitivity");

    m.def("poset_dot",
          [](const Fan& fan) {
              ClassGroup cg = compute_class_group(fan);
              return poset_dot(fan, closure_poset(fan, cg, classes_of(fan, cg)));
          },
          py::arg("fan"), "Closure poset in DOT format");
}
