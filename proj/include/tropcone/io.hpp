#pragma once

#include <nlohmann/json.hpp>

#include "tropcone/cells.hpp"

namespace tropcone {

// All file formats use rationals as strings ("p/q" or integer, "-inf" for
// bottom) and 1-based indices; ordered_json keeps field order deterministic.
using Json = nlohmann::ordered_json;

Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

Json point_to_json(const Point& p);
Point point_from_json(const Json& j);

Json indexset_to_json(IndexSet s);                 // sorted 1-based array
IndexSet indexset_from_json(const Json& j, int n); // validates range

// Cone file: { "dim": n, "generators": [[...], ...] }, all-finite rows.
Json cone_to_json(const Cone& c);
Cone cone_from_json(const Json& j);

// Half-space, two shapes: {"apex": [...], "sectors": [...]} or
// {"I": [...], "J": [...], "alpha": {"<1-based index>": rational}, "dim": n}.
Json halfspace_to_json(const HalfSpace& h);
Json general_halfspace_to_json(const GeneralHalfSpace& g);
bool json_is_general_halfspace(const Json& j);
HalfSpace halfspace_from_json(const Json& j);
GeneralHalfSpace general_halfspace_from_json(const Json& j, int dim_hint = 0);

// Half-space list file: { "dim": n, "halfspaces": [ ... ] }.
Json halfspace_list_to_json(int dim, const std::vector<HalfSpace>& hs);
std::vector<HalfSpace> halfspace_list_from_json(const Json& j, int* dim_out = nullptr);
// Same file shape, entries in either form, returned in general form.
std::vector<GeneralHalfSpace> general_list_from_json(const Json& j, int* dim_out = nullptr);

// Hypergraph dump: {"n": n, "arcs": [{"T": [...], "H": [...], "origin": k}]}.
Json tangent_hypergraph_to_json(const TangentHypergraph& g);

Json canonical_structure_to_json(const ApexStructure& s);
Json classification_to_json(const VertexClassification& vc);

// "meta" block present in every CLI report: command, FNV-1a digests of the
// inputs, seed, version. Identical inputs and seed give byte-identical output.
struct RunManifest {
    std::string command;
    std::vector<std::string> input_digests;
    unsigned long seed = 0;
    std::string version = "1.0.0";
};

std::string fnv1a_digest(const std::string& data);
Json manifest_to_json(const RunManifest& m);

Json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

} // namespace tropcone
