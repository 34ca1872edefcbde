#include "toric/io.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

#include "toric/errors.hpp"

namespace toric {

namespace {

using nlohmann::ordered_json;

ordered_json json_int(const Int& x) {
    if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
        return ordered_json(x.convert_to<long long>());
    return ordered_json(x.str());
}

ordered_json json_vec(const IntVec& v) {
    ordered_json arr = ordered_json::array();
    for (const Int& x : v) arr.push_back(json_int(x));
    return arr;
}

ordered_json json_subset(const RaySubset& s) {
    ordered_json arr = ordered_json::array();
    for (int i : s) arr.push_back(i + 1);
    return arr;
}

std::string vec_label(const IntVec& v) {
    std::string out = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += v[i].str();
    }
    return out + ")";
}

std::string generator_list(const std::vector<int>& rays) {
    if (rays.empty()) return "none";
    std::string out;
    for (size_t i = 0; i < rays.size(); ++i) {
        if (i) out += ", ";
        out += "[D_" + std::to_string(rays[i] + 1) + "]";
    }
    return out;
}

std::string cone_list(const Fan& fan, const std::vector<int>& ids) {
    std::string out;
    for (size_t i = 0; i < ids.size(); ++i) {
        if (i) out += " ";
        out += subset_label(fan.cone(ids[i]).rays);
    }
    return out;
}

std::string dim_range(int lo, int hi) {
    if (lo == hi) return std::to_string(lo);
    return std::to_string(lo) + ".." + std::to_string(hi);
}

std::string counted(size_t n, const std::string& singular, const std::string& plural) {
    return std::to_string(n) + " " + (n == 1 ? singular : plural);
}

ordered_json class_json(const Fan& fan, const OrbitClass& cls) {
    ordered_json j;
    ordered_json cones = ordered_json::array();
    for (int id : cls.cone_ids) cones.push_back(json_subset(fan.cone(id).rays));
    j["cones"] = cones;
    j["sigma_max"] = json_subset(fan.cone(cls.sigma_max_id).rays);
    j["generator_rays"] = json_subset(cls.monoid.generator_rays);
    j["orbit_dims"] = {cls.min_orbit_dim, cls.max_orbit_dim};
    return j;
}

std::string class_line(const Fan& fan, const OrbitClass& cls) {
    return counted(cls.cone_ids.size(), "cone", "cones") + " " + cone_list(fan, cls.cone_ids) +
           "; sigma_max " + subset_label(fan.cone(cls.sigma_max_id).rays) + "; generators " +
           generator_list(cls.monoid.generator_rays) + "; orbit dims " +
           dim_range(cls.min_orbit_dim, cls.max_orbit_dim);
}

// Family expression parsing: tiny recursive descent over
//   expr := name [integer] | "product" "(" expr ("," expr)+ ")"
struct FamilyParser {
    const std::string& text;
    size_t pos = 0;
    std::optional<long long> param;
    bool param_used = false;

    void skip_space() {
        while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
    }

    bool eat(char c) {
        skip_space();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    std::string ident() {
        skip_space();
        size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum((unsigned char)text[pos]) || text[pos] == '_'))
            ++pos;
        return text.substr(start, pos - start);
    }

    std::optional<long long> integer() {
        skip_space();
        size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        size_t digits = pos;
        while (pos < text.size() && std::isdigit((unsigned char)text[pos])) ++pos;
        if (pos == digits) {
            pos = start;
            return std::nullopt;
        }
        return std::stoll(text.substr(start, pos - start));
    }

    Fan expr() {
        skip_space();
        std::string name = ident();
        if (name.empty())
            throw ValidationError("expected a family name in \"" + text + "\"");
        if (name == "product") {
            if (!eat('('))
                throw ValidationError("expected '(' after product");
            std::vector<Fan> factors;
            factors.push_back(expr());
            while (eat(',')) factors.push_back(expr());
            if (!eat(')'))
                throw ValidationError("expected ')' closing product");
            if (factors.size() < 2)
                throw ValidationError("product needs at least two factors");
            Fan out = std::move(factors[0]);
            for (size_t i = 1; i < factors.size(); ++i) out = product_fan(out, factors[i]);
            return out;
        }
        std::optional<long long> n = integer();
        if (!n && param && !param_used) {
            n = param;
            param_used = true;
        }
        if (!n)
            throw ValidationError("family \"" + name + "\" requires a parameter");
        if (name == "pp") return make_projective_space((int)*n);
        if (name == "hirzebruch") return make_hirzebruch(*n);
        if (name == "wp11s") return make_weighted_p11s(*n);
        if (name == "bsurface") return make_b_surface(*n);
        throw ValidationError("unknown family \"" + name + "\"");
    }
};

} // namespace

std::string subset_label(const RaySubset& rays) {
    std::string out = "{";
    for (size_t i = 0; i < rays.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(rays[i] + 1);
    }
    return out + "}";
}

std::string fan_header(const Fan& fan) {
    std::string out = "fan: ";
    if (!fan.name().empty()) out += fan.name() + ", ";
    out += "dim " + std::to_string(fan.dim()) + ", " + counted(fan.ray_count(), "ray", "rays") + ", " +
           counted(fan.max_cone_ids().size(), "maximal cone", "maximal cones");
    return out;
}

FanDocument parse_fan_document(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const ordered_json::parse_error& e) {
        throw ValidationError(std::string("fan document ") + e.what());
    }
    if (!j.is_object()) throw ValidationError("fan document must be a JSON object");
    for (const auto& item : j.items()) {
        const std::string& key = item.key();
        if (key != "dim" && key != "rays" && key != "max_cones" && key != "name")
            throw ValidationError("unknown key \"" + key + "\" in fan document");
    }
    for (const char* key : {"dim", "rays", "max_cones"})
        if (!j.contains(key))
            throw ValidationError(std::string("fan document requires \"") + key + "\"");

    FanDocument doc;
    if (!j["dim"].is_number_integer())
        throw ValidationError("\"dim\" must be an integer");
    long long dim = j["dim"].get<long long>();
    if (dim < -1000 || dim > 1000)
        throw ValidationError("\"dim\" out of range");
    doc.dim = (int)dim;

    if (!j["rays"].is_array()) throw ValidationError("\"rays\" must be an array");
    for (size_t i = 0; i < j["rays"].size(); ++i) {
        const auto& row = j["rays"][i];
        if (!row.is_array())
            throw ValidationError("ray " + std::to_string(i + 1) + " must be an array");
        IntVec v;
        for (size_t c = 0; c < row.size(); ++c) {
            if (!row[c].is_number_integer())
                throw ValidationError("ray " + std::to_string(i + 1) + " coordinate " +
                                      std::to_string(c + 1) + " must be an integer");
            v.push_back(Int(row[c].get<long long>()));
        }
        doc.rays.push_back(std::move(v));
    }

    if (!j["max_cones"].is_array()) throw ValidationError("\"max_cones\" must be an array");
    for (size_t i = 0; i < j["max_cones"].size(); ++i) {
        const auto& row = j["max_cones"][i];
        if (!row.is_array())
            throw ValidationError("maximal cone " + std::to_string(i + 1) + " must be an array");
        RaySubset s;
        for (const auto& entry : row) {
            if (!entry.is_number_integer())
                throw ValidationError("maximal cone " + std::to_string(i + 1) +
                                      " must list integer ray indices");
            long long idx = entry.get<long long>();
            if (idx < 1 || idx > (long long)doc.rays.size())
                throw ValidationError("maximal cone " + std::to_string(i + 1) + " uses ray index " +
                                      std::to_string(idx) + " out of range");
            s.push_back((int)idx - 1);
        }
        doc.max_cones.push_back(std::move(s));
    }

    if (j.contains("name")) {
        if (!j["name"].is_string()) throw ValidationError("\"name\" must be a string");
        doc.name = j["name"].get<std::string>();
        doc.has_name = true;
    }
    return doc;
}

Fan document_to_fan(const FanDocument& doc) {
    return build_fan(doc.dim, doc.rays, doc.max_cones, doc.name);
}

FanDocument document_from_fan(const Fan& fan) {
    FanDocument doc;
    doc.dim = fan.dim();
    doc.rays = fan.rays();
    for (int id : fan.max_cone_ids()) doc.max_cones.push_back(fan.cone(id).rays);
    doc.name = fan.name();
    doc.has_name = !fan.name().empty();
    return doc;
}

std::string serialize_fan_document(const FanDocument& doc) {
    std::ostringstream out;
    out << "{\n  \"dim\": " << doc.dim << ",\n  \"rays\": [";
    for (size_t i = 0; i < doc.rays.size(); ++i) {
        if (i) out << ", ";
        out << "[";
        for (size_t c = 0; c < doc.rays[i].size(); ++c) {
            if (c) out << ", ";
            out << doc.rays[i][c];
        }
        out << "]";
    }
    out << "],\n  \"max_cones\": [";
    for (size_t i = 0; i < doc.max_cones.size(); ++i) {
        if (i) out << ", ";
        out << "[";
        for (size_t c = 0; c < doc.max_cones[i].size(); ++c) {
            if (c) out << ", ";
            out << doc.max_cones[i][c] + 1;
        }
        out << "]";
    }
    out << "]";
    if (doc.has_name) out << ",\n  \"name\": " << ordered_json(doc.name).dump();
    out << "\n}\n";
    return out.str();
}

Fan make_family(const std::string& expr, std::optional<long long> param) {
    FamilyParser parser{expr, 0, param, false};
    Fan fan = parser.expr();
    parser.skip_space();
    if (parser.pos != expr.size())
        throw ValidationError("trailing input after family expression");
    if (param && !parser.param_used)
        throw ValidationError("--param given but the family expression has its own parameters");
    return fan;
}

nlohmann::ordered_json fan_document_json(const FanDocument& doc) {
    ordered_json j;
    j["dim"] = doc.dim;
    ordered_json rays = ordered_json::array();
    for (const IntVec& v : doc.rays) rays.push_back(json_vec(v));
    j["rays"] = rays;
    ordered_json cones = ordered_json::array();
    for (const RaySubset& s : doc.max_cones) cones.push_back(json_subset(s));
    j["max_cones"] = cones;
    if (doc.has_name) j["name"] = doc.name;
    return j;
}

std::string clgroup_text(const Fan& fan, const ClassGroup& cg) {
    std::string out = fan_header(fan) + "\n";
    out += "Cl(X) = " + cg.group_to_string() + "\n";
    for (int i = 0; i < fan.ray_count(); ++i)
        out += "[D_" + std::to_string(i + 1) + "] = " + cg.to_string(cg.divisor_class(i)) + "\n";
    return out;
}

nlohmann::ordered_json clgroup_json(const Fan& fan, const ClassGroup& cg) {
    ordered_json j;
    j["fan"] = fan_document_json(document_from_fan(fan));
    ordered_json group;
    group["free_rank"] = cg.free_rank();
    ordered_json torsion = ordered_json::array();
    for (const Int& d : cg.torsion()) torsion.push_back(json_int(d));
    group["torsion"] = torsion;
    group["group"] = cg.group_to_string();
    ordered_json classes = ordered_json::array();
    for (int i = 0; i < fan.ray_count(); ++i) {
        ordered_json c;
        c["free"] = json_vec(cg.divisor_class(i).free);
        c["residues"] = json_vec(cg.divisor_class(i).residues);
        c["display"] = cg.to_string(cg.divisor_class(i));
        classes.push_back(c);
    }
    group["divisor_classes"] = classes;
    j["class_group"] = group;
    return j;
}

std::string roots_text(const Fan& fan, const RootSet& rs) {
    size_t ss = 0;
    for (const DemazureRoot& r : rs.roots) ss += r.semisimple ? 1 : 0;
    std::string out = fan_header(fan) + "\n";
    out += counted(rs.roots.size(), "root", "roots") + " (" + std::to_string(ss) + " semisimple)\n";
    for (const DemazureRoot& r : rs.roots) {
        out += "m = " + vec_label(r.m) + ", ray " + std::to_string(r.eta_index + 1);
        if (r.semisimple) out += ", semisimple";
        out += "\n";
    }
    return out;
}

nlohmann::ordered_json roots_json(const Fan& fan, const RootSet& rs) {
    ordered_json j;
    j["fan"] = fan_document_json(document_from_fan(fan));
    size_t ss = 0;
    for (const DemazureRoot& r : rs.roots) ss += r.semisimple ? 1 : 0;
    j["count"] = rs.roots.size();
    j["semisimple_count"] = ss;
    ordered_json roots = ordered_json::array();
    for (const DemazureRoot& r : rs.roots) {
        ordered_json entry;
        entry["m"] = json_vec(r.m);
        entry["ray"] = r.eta_index + 1;
        entry["semisimple"] = r.semisimple;
        roots.push_back(entry);
    }
    j["roots"] = roots;
    return j;
}

std::string upsilon_text(const Fan& fan, const UpsilonCollection& ups) {
    std::string out = fan_header(fan) + "\n";
    out += "Upsilon has " + counted(ups.entries.size(), "monoid", "monoids") + "\n";
    for (size_t i = 0; i < ups.entries.size(); ++i) {
        const UpsilonEntry& e = ups.entries[i];
        out += "monoid " + std::to_string(i + 1) + ": generators " +
               generator_list(e.monoid.generator_rays) + "; cones " +
               cone_list(fan, e.cone_ids) + "\n";
    }
    return out;
}

nlohmann::ordered_json upsilon_json(const Fan& fan, const UpsilonCollection& ups) {
    ordered_json j;
    j["fan"] = fan_document_json(document_from_fan(fan));
    j["count"] = ups.entries.size();
    ordered_json monoids = ordered_json::array();
    for (const UpsilonEntry& e : ups.entries) {
        ordered_json entry;
        entry["generator_rays"] = json_subset(e.monoid.generator_rays);
        ordered_json cones = ordered_json::array();
        for (int id : e.cone_ids) cones.push_back(json_subset(fan.cone(id).rays));
        entry["cones"] = cones;
        monoids.push_back(entry);
    }
    j["monoids"] = monoids;
    return j;
}

std::string classify_text(const Fan& fan, const std::vector<OrbitClass>& classes) {
    std::string out = fan_header(fan) + "\n";
    out += counted(classes.size(), "class", "classes") + "\n";
    for (size_t i = 0; i < classes.size(); ++i)
        out += "class " + std::to_string(i + 1) + ": " + class_line(fan, classes[i]) + "\n";
    out += classes.size() == 1 ? "Aut⁰ acts transitively\n" : "Aut⁰ does not act transitively\n";
    return out;
}

nlohmann::ordered_json classify_json(const Fan& fan, const std::vector<OrbitClass>& classes) {
    ordered_json j;
    j["fan"] = fan_document_json(document_from_fan(fan));
    j["count"] = classes.size();
    ordered_json arr = ordered_json::array();
    for (const OrbitClass& cls : classes) arr.push_back(class_json(fan, cls));
    j["classes"] = arr;
    j["transitive_aut0"] = classes.size() == 1;
    return j;
}

std::string classify_aut_text(const Fan& fan, const std::vector<OrbitClass>& classes,
                              const std::vector<std::vector<int>>& merged) {
    std::string out = fan_header(fan) + "\n";
    out += "Aut⁰ classes: " + std::to_string(classes.size()) + "\n";
    out += "Aut classes: " + std::to_string(merged.size()) + "\n";
    for (size_t i = 0; i < merged.size(); ++i) {
        std::vector<int> ids;
        for (int c : merged[i])
            ids.insert(ids.end(), classes[c].cone_ids.begin(), classes[c].cone_ids.end());
        std::sort(ids.begin(), ids.end());
        out += "aut class " + std::to_string(i + 1) + ": cones " + cone_list(fan, ids) + "\n";
    }
    return out;
}

nlohmann::ordered_json classify_aut_json(const Fan& fan, const std::vector<OrbitClass>& classes,
                                         const std::vector<std::vector<int>>& merged) {
    ordered_json j;
    j["fan"] = fan_document_json(document_from_fan(fan));
    j["aut0_count"] = classes.size();
    j["count"] = merged.size();
    ordered_json arr = ordered_json::array();
    for (const std::vector<int>& part : merged) {
        ordered_json entry;
        ordered_json members = ordered_json::array();
        for (int c : part) members.push_back(c + 1);
        entry["aut0_classes"] = members;
        std::vector<int> ids;
        for (int c : part)
            ids.insert(ids.end(), classes[c].cone_ids.begin(), classes[c].cone_ids.end());
        std::sort(ids.begin(), ids.end());
        ordered_json cones = ordered_json::array();
        for (int id : ids) cones.push_back(json_subset(fan.cone(id).rays));
        entry["cones"] = cones;
        arr.push_back(entry);
    }
    j["classes"] = arr;
    return j;
}

std::string poset_text(const Fan& fan, const OrbitPoset& poset) {
    std::string out = fan_header(fan) + "\n";
    out += counted(poset.classes.size(), "class", "classes") + "\n";
    for (size_t i = 0; i < poset.classes.size(); ++i) {
        const OrbitClass& cls = poset.classes[i];
        out += "class " + std::to_string(i + 1) + ": sigma_max " +
               subset_label(fan.cone(cls.sigma_max_id).rays) + "; generators " +
               generator_list(cls.monoid.generator_rays) + "\n";
    }
    out += "closure order (u < v when the closure of u lies inside the closure of v):\n";
    for (const auto& [u, v] : poset.order)
        out += std::to_string(u + 1) + " < " + std::to_string(v + 1) + "\n";
    out += "transitive reduction:\n";
    for (const auto& [u, v] : poset.reduction)
        out += std::to_string(u + 1) + " -> " + std::to_string(v + 1) + "\n";
    return out;
}

nlohmann::ordered_json poset_json(const Fan& fan, const OrbitPoset& poset) {
    ordered_json j;
    j["fan"] = fan_document_json(document_from_fan(fan));
    ordered_json arr = ordered_json::array();
    for (const OrbitClass& cls : poset.classes) arr.push_back(class_json(fan, cls));
    j["classes"] = arr;
    ordered_json order = ordered_json::array();
    for (const auto& [u, v] : poset.order) order.push_back({u + 1, v + 1});
    j["order"] = order;
    ordered_json reduction = ordered_json::array();
    for (const auto& [u, v] : poset.reduction) reduction.push_back({u + 1, v + 1});
    j["reduction"] = reduction;
    return j;
}

std::string poset_dot(const Fan& fan, const OrbitPoset& poset) {
    std::string out = "digraph closure {\n  node [shape=box];\n";
    for (size_t i = 0; i < poset.classes.size(); ++i) {
        const OrbitClass& cls = poset.classes[i];
        out += "  c" + std::to_string(i + 1) + " [label=\"class " + std::to_string(i + 1) +
               "\\nsigma_max " + subset_label(fan.cone(cls.sigma_max_id).rays) +
               "\\ngenerators " + generator_list(cls.monoid.generator_rays) + "\"];\n";
    }
    for (const auto& [u, v] : poset.reduction)
        out += "  c" + std::to_string(u + 1) + " -> c" + std::to_string(v + 1) + ";\n";
    out += "}\n";
    return out;
}

std::string symmetries_text(const Fan& fan, const std::vector<FanSymmetry>& syms) {
    std::string out = fan_header(fan) + "\n";
    out += counted(syms.size(), "symmetry", "symmetries") + "\n";
    for (size_t i = 0; i < syms.size(); ++i) {
        std::string perm = "[";
        for (size_t p = 0; p < syms[i].perm.size(); ++p) {
            if (p) perm += ",";
            perm += std::to_string(syms[i].perm[p] + 1);
        }
        perm += "]";
        std::string matrix = "[";
        for (int row = 0; row < syms[i].matrix.rows(); ++row) {
            if (row) matrix += ",";
            matrix += "[";
            for (int col = 0; col < syms[i].matrix.cols(); ++col) {
                if (col) matrix += ",";
                matrix += syms[i].matrix.at(row, col).str();
            }
            matrix += "]";
        }
        matrix += "]";
        out += "symmetry " + std::to_string(i + 1) + ": perm " + perm + ", matrix " + matrix + "\n";
    }
    return out;
}

nlohmann::ordered_json symmetries_json(const Fan& fan, const std::vector<FanSymmetry>& syms) {
    ordered_json j;
    j["fan"] = fan_document_json(document_from_fan(fan));
    j["count"] = syms.size();
    ordered_json arr = ordered_json::array();
    for (const FanSymmetry& g : syms) {
        ordered_json entry;
        ordered_json perm = ordered_json::array();
        for (int p : g.perm) perm.push_back(p + 1);
        entry["perm"] = perm;
        ordered_json matrix = ordered_json::array();
        for (int row = 0; row < g.matrix.rows(); ++row) {
            ordered_json r = ordered_json::array();
            for (int col = 0; col < g.matrix.cols(); ++col)
                r.push_back(json_int(g.matrix.at(row, col)));
            matrix.push_back(r);
        }
        entry["matrix"] = matrix;
        arr.push_back(entry);
    }
    j["symmetries"] = arr;
    return j;
}

std::string transitivity_text(const Fan& fan, bool transitive,
                              const std::optional<std::vector<int>>& factors) {
    std::string out = fan_header(fan) + "\n";
    if (!transitive) {
        out += "not transitive\n";
        return out;
    }
    out += "transitive; X ≅ ";
    for (size_t i = 0; i < factors->size(); ++i) {
        if (i) out += " × ";
        out += "P^" + std::to_string((*factors)[i]);
    }
    out += "\n";
    return out;
}

nlohmann::ordered_json transitivity_json(const Fan& fan, bool transitive,
                                         const std::optional<std::vector<int>>& factors) {
    ordered_json j;
    j["fan"] = fan_document_json(document_from_fan(fan));
    j["transitive"] = transitive;
    if (factors)
        j["factors"] = *factors;
    else
        j["factors"] = nullptr;
    return j;
}

} // namespace toric
