#pragma once

// JSON (de)serialization for configs and artifacts, DOT emission for crystal
// graphs, and a stable content hash for the build cache. All emission goes
// through nlohmann::json with sorted keys, so identical inputs give
// bit-identical files.

#include "symcry/cartan.hpp"
#include "symcry/crystal.hpp"
#include "symcry/global_basis.hpp"
#include "symcry/quiver.hpp"
#include "symcry/theta_module.hpp"

#include <json.hpp>

#include <string>

namespace symcry {

using Json = nlohmann::json;

// {"exponent": "p/q", ...}
Json laurent_to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j);

// {"ord": n, "num": [...], "den": [...]} with rational-string entries
Json ratfun_to_json(const RationalFunction& f);
RationalFunction ratfun_from_json(const Json& j);

Json vec_to_json(const Vec& u);
Vec vec_from_json(const Json& j);
Json mat_to_json(const Mat& a);
Mat mat_from_json(const Json& j);

// {"indices": [...], "pairing": [[...]], "theta": {name: name},
//  "lambda": {name: int}?}; validated and finalized
Json cartan_to_json(const CartanDatum& d);
CartanDatum cartan_from_json(const Json& j);
CartanDatum load_cartan(const std::string& path);

// {"vertices": [...], "arrows": [{"id","out","in"}], "bar": {id: id},
//  "theta_v": {name: name}, "theta_h": {id: id}, "omega": [id]?}
struct QuiverFile {
    ThetaQuiver quiver;
    Orientation omega;  // empty when the file omits it
    bool has_omega = false;
};
QuiverFile quiver_from_json(const Json& j);
QuiverFile load_quiver(const std::string& path);

Json weight_space_to_json(const ThetaWeightSpace& ws, const CartanDatum& d);
Json model_to_json(const ModuleModel& m);

Json graph_to_json(const CrystalGraph& g, const CartanDatum& d);
std::string graph_to_dot(const CrystalGraph& g, const CartanDatum& d);

Json global_table_to_json(const GlobalBasisTable& t);
Json report_to_json(const std::string& name, const CheckReport& rep);

std::string canonical_dump(const Json& j);  // sorted keys, 2-space indent, trailing newline
Json load_json(const std::string& path);
void write_text(const std::string& path, const std::string& text);

// FNV-1a over the canonical dump; stable across runs and platforms
std::string content_hash(const Json& j);

}  // namespace symcry
