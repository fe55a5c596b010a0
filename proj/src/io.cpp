#include "tropcone/io.hpp"

#include <fstream>

namespace tropcone {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw ParseError(what); }

std::string need_string(const Json& j, const char* where) {
    if (!j.is_string()) parse_fail(std::string(where) + ": expected a string");
    return j.get<std::string>();
}

const Json& need_field(const Json& j, const char* key, const char* where) {
    if (!j.is_object() || !j.contains(key))
        parse_fail(std::string(where) + ": missing field \"" + key + "\"");
    return j.at(key);
}

} // namespace

Json scalar_to_json(const Scalar& s) { return Json(s.str()); }

Scalar scalar_from_json(const Json& j) {
    return parse_scalar(need_string(j, "scalar"));
}

Json point_to_json(const Point& p) {
    Json out = Json::array();
    for (int i = 0; i < p.dim(); ++i) out.push_back(scalar_to_json(p[i]));
    return out;
}

Point point_from_json(const Json& j) {
    if (!j.is_array()) parse_fail("point: expected an array");
    std::vector<Scalar> coords;
    for (const auto& e : j) coords.push_back(scalar_from_json(e));
    return Point(std::move(coords));
}

Json indexset_to_json(IndexSet s) {
    Json out = Json::array();
    for (int i : s.indices()) out.push_back(i + 1);
    return out;
}

IndexSet indexset_from_json(const Json& j, int n) {
    if (!j.is_array()) parse_fail("index set: expected an array");
    IndexSet s;
    for (const auto& e : j) {
        if (!e.is_number_integer()) parse_fail("index set: expected integers");
        long long k = e.get<long long>();
        if (k < 1 || k > n)
            parse_fail("index set: index " + std::to_string(k) + " out of range 1.." +
                       std::to_string(n));
        s.add(static_cast<int>(k) - 1);
    }
    if (s.empty()) parse_fail("index set: must be non-empty");
    return s;
}

Json cone_to_json(const Cone& c) {
    Json out;
    out["dim"] = c.dim();
    Json gens = Json::array();
    for (const auto& g : c.generators()) gens.push_back(point_to_json(g));
    out["generators"] = gens;
    return out;
}

Cone cone_from_json(const Json& j) {
    int n = 0;
    const Json& dim = need_field(j, "dim", "cone file");
    if (!dim.is_number_integer() || (n = dim.get<int>()) < 2)
        parse_fail("cone file: \"dim\" must be an integer >= 2");
    const Json& gens = need_field(j, "generators", "cone file");
    if (!gens.is_array() || gens.empty())
        parse_fail("cone file: \"generators\" must be a non-empty array");
    std::vector<Point> points;
    for (size_t r = 0; r < gens.size(); ++r) {
        Point p = point_from_json(gens[r]);
        if (p.dim() != n)
            parse_fail("cone file: generator row " + std::to_string(r + 1) +
                       " has " + std::to_string(p.dim()) + " coordinates, expected " +
                       std::to_string(n));
        if (!p.all_finite())
            parse_fail("cone file: generator row " + std::to_string(r + 1) +
                       " must be all-finite");
        points.push_back(std::move(p));
    }
    return Cone(std::move(points));
}

Json halfspace_to_json(const HalfSpace& h) {
    Json out;
    out["apex"] = point_to_json(h.apex());
    out["sectors"] = indexset_to_json(h.sectors());
    return out;
}

Json general_halfspace_to_json(const GeneralHalfSpace& g) {
    Json out;
    out["dim"] = g.dim();
    out["I"] = indexset_to_json(g.lhs());
    out["J"] = indexset_to_json(g.rhs());
    Json alpha = Json::object();
    for (int h : (g.lhs() | g.rhs()).indices())
        alpha[std::to_string(h + 1)] = format_rational(g.alpha(h));
    out["alpha"] = alpha;
    return out;
}

bool json_is_general_halfspace(const Json& j) {
    return j.is_object() && j.contains("I") && j.contains("J");
}

HalfSpace halfspace_from_json(const Json& j) {
    Point apex = point_from_json(need_field(j, "apex", "half-space"));
    if (!apex.all_finite()) parse_fail("half-space: apex must be all-finite");
    IndexSet sectors = indexset_from_json(need_field(j, "sectors", "half-space"),
                                          apex.dim());
    return HalfSpace(std::move(apex), sectors);
}

GeneralHalfSpace general_halfspace_from_json(const Json& j, int dim_hint) {
    int n = dim_hint;
    if (j.contains("dim")) {
        const Json& dim = j.at("dim");
        if (!dim.is_number_integer()) parse_fail("half-space: \"dim\" must be an integer");
        n = dim.get<int>();
    }
    if (n < 2) parse_fail("half-space: dimension unknown; supply \"dim\"");
    IndexSet I = indexset_from_json(need_field(j, "I", "half-space"), n);
    IndexSet J = indexset_from_json(need_field(j, "J", "half-space"), n);
    const Json& alpha_j = need_field(j, "alpha", "half-space");
    if (!alpha_j.is_object()) parse_fail("half-space: \"alpha\" must be an object");
    std::map<int, Rat> alpha;
    for (auto it = alpha_j.begin(); it != alpha_j.end(); ++it) {
        int k;
        try {
            k = std::stoi(it.key());
        } catch (...) {
            parse_fail("half-space: alpha key \"" + it.key() + "\" is not an index");
        }
        if (k < 1 || k > n)
            parse_fail("half-space: alpha index " + it.key() + " out of range");
        alpha[k - 1] = parse_rational(need_string(it.value(), "alpha"));
    }
    return GeneralHalfSpace(n, I, J, std::move(alpha));
}

Json halfspace_list_to_json(int dim, const std::vector<HalfSpace>& hs) {
    Json out;
    out["dim"] = dim;
    Json arr = Json::array();
    for (const auto& h : hs) arr.push_back(halfspace_to_json(h));
    out["halfspaces"] = arr;
    return out;
}

std::vector<HalfSpace> halfspace_list_from_json(const Json& j, int* dim_out) {
    const Json& dim = need_field(j, "dim", "half-space list");
    if (!dim.is_number_integer()) parse_fail("half-space list: \"dim\" must be an integer");
    int n = dim.get<int>();
    if (dim_out) *dim_out = n;
    const Json& arr = need_field(j, "halfspaces", "half-space list");
    if (!arr.is_array()) parse_fail("half-space list: \"halfspaces\" must be an array");
    std::vector<HalfSpace> out;
    for (size_t k = 0; k < arr.size(); ++k) {
        HalfSpace h = halfspace_from_json(arr[k]);
        if (h.dim() != n)
            parse_fail("half-space list: entry " + std::to_string(k + 1) +
                       " has dimension " + std::to_string(h.dim()) + ", expected " +
                       std::to_string(n));
        out.push_back(std::move(h));
    }
    return out;
}

std::vector<GeneralHalfSpace> general_list_from_json(const Json& j, int* dim_out) {
    const Json& dim = need_field(j, "dim", "half-space list");
    if (!dim.is_number_integer()) parse_fail("half-space list: \"dim\" must be an integer");
    int n = dim.get<int>();
    if (dim_out) *dim_out = n;
    const Json& arr = need_field(j, "halfspaces", "half-space list");
    if (!arr.is_array()) parse_fail("half-space list: \"halfspaces\" must be an array");
    std::vector<GeneralHalfSpace> out;
    for (size_t k = 0; k < arr.size(); ++k) {
        if (json_is_general_halfspace(arr[k]))
            out.push_back(general_halfspace_from_json(arr[k], n));
        else
            out.push_back(halfspace_from_json(arr[k]).general());
        if (out.back().dim() != n)
            parse_fail("half-space list: entry " + std::to_string(k + 1) +
                       " has the wrong dimension");
    }
    return out;
}

Json tangent_hypergraph_to_json(const TangentHypergraph& g) {
    Json out;
    out["n"] = g.graph.n;
    Json arcs = Json::array();
    for (size_t k = 0; k < g.graph.arcs.size(); ++k) {
        Json a;
        a["T"] = indexset_to_json(g.graph.arcs[k].tail);
        a["H"] = indexset_to_json(g.graph.arcs[k].head);
        a["origin"] = g.origin[k] + 1;
        arcs.push_back(a);
    }
    out["arcs"] = arcs;
    return out;
}

Json canonical_structure_to_json(const ApexStructure& s) {
    Json out;
    Json apices = Json::array();
    for (const auto& entry : s.apices) {
        Json e;
        e["apex"] = point_to_json(entry.apex);
        Json comps = Json::array();
        for (const auto& comp : entry.components) {
            Json c;
            Json members = Json::array();
            for (IndexSet m : comp.members) members.push_back(indexset_to_json(m));
            c["members"] = members;
            c["principal"] = indexset_to_json(comp.principal);
            c["representative"] = indexset_to_json(comp.representative);
            comps.push_back(c);
        }
        e["components"] = comps;
        apices.push_back(e);
    }
    out["apices"] = apices;
    return out;
}

Json classification_to_json(const VertexClassification& vc) {
    Json out;
    out["point"] = point_to_json(vc.point);
    out["is_vertex"] = vc.is_vertex;
    Json ws = Json::array();
    for (const auto& w : vc.witnesses) {
        Json e;
        e["I"] = indexset_to_json(w.I);
        e["j"] = w.j + 1;
        e["C4"] = w.C4;
        e["C5"] = w.C5;
        ws.push_back(e);
    }
    out["witnesses"] = ws;
    return out;
}

std::string fnv1a_digest(const std::string& data) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Json manifest_to_json(const RunManifest& m) {
    Json out;
    out["command"] = m.command;
    out["inputs"] = m.input_digests;
    out["seed"] = m.seed;
    out["version"] = m.version;
    return out;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open file for writing: " + path);
    out << j.dump(2) << "\n";
}

} // namespace tropcone
