#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "toric/class_group.hpp"
#include "toric/fan.hpp"
#include "toric/monoid.hpp"
#include "toric/orbits.hpp"
#include "toric/roots.hpp"
#include "toric/symmetry.hpp"

namespace toric {

// Fan interchange document.  Serialized ray indices are 1-based; in memory
// they are 0-based like everywhere else in the library.
struct FanDocument {
    int dim = 0;
    std::vector<IntVec> rays;
    std::vector<RaySubset> max_cones;
    std::string name;
    bool has_name = false;

    bool operator==(const FanDocument&) const = default;
};

// Structural parse of the strict JSON format {dim, rays, max_cones, name?}.
// Unknown keys, non-integer entries and out-of-range indices are rejected.
// Geometric validation happens in document_to_fan.
FanDocument parse_fan_document(const std::string& text);
Fan document_to_fan(const FanDocument& doc);
FanDocument document_from_fan(const Fan& fan);
std::string serialize_fan_document(const FanDocument& doc);

// Family expressions: "pp n", "hirzebruch s", "wp11s s", "bsurface s", or
// "product(expr, expr, ...)".  A bare family name takes its parameter from
// the second argument.
Fan make_family(const std::string& expr,
                std::optional<long long> param = std::nullopt);

// "{1,3}" with 1-based ray indices, "{}" for the zero cone.
std::string subset_label(const RaySubset& rays);

// "fan: P^2, dim 2, 3 rays, 3 maximal cones"
std::string fan_header(const Fan& fan);

nlohmann::ordered_json fan_document_json(const FanDocument& doc);

// Per-command reports.  Text and JSON variants are deterministic; equal
// inputs give byte-identical output.
std::string clgroup_text(const Fan& fan, const ClassGroup& cg);
nlohmann::ordered_json clgroup_json(const Fan& fan, const ClassGroup& cg);

std::string roots_text(const Fan& fan, const RootSet& rs);
nlohmann::ordered_json roots_json(const Fan& fan, const RootSet& rs);

std::string upsilon_text(const Fan& fan, const UpsilonCollection& ups);
nlohmann::ordered_json upsilon_json(const Fan& fan, const UpsilonCollection& ups);

std::string classify_text(const Fan& fan, const std::vector<OrbitClass>& classes);
nlohmann::ordered_json classify_json(const Fan& fan, const std::vector<OrbitClass>& classes);

std::string classify_aut_text(const Fan& fan, const std::vector<OrbitClass>& classes,
                              const std::vector<std::vector<int>>& merged);
nlohmann::ordered_json classify_aut_json(const Fan& fan, const std::vector<OrbitClass>& classes,
                                         const std::vector<std::vector<int>>& merged);

std::string poset_text(const Fan& fan, const OrbitPoset& poset);
nlohmann::ordered_json poset_json(const Fan& fan, const OrbitPoset& poset);
std::string poset_dot(const Fan& fan, const OrbitPoset& poset);

std::string symmetries_text(const Fan& fan, const std::vector<FanSymmetry>& syms);
nlohmann::ordered_json symmetries_json(const Fan& fan, const std::vector<FanSymmetry>& syms);

std::string transitivity_text(const Fan& fan, bool transitive,
                              const std::optional<std::vector<int>>& factors);
nlohmann::ordered_json transitivity_json(const Fan& fan, bool transitive,
                                         const std::optional<std::vector<int>>& factors);

} // namespace toric
