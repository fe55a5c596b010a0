#include "tropcone/cells.hpp"

#include <algorithm>

namespace tropcone {

VertexClassification classify_vertex(const Cone& c, const Point& a) {
    VertexClassification out;
    out.point = a.normalized();
    std::vector<IndexSet> Ea = enumerate_Ea(c, a);  // checks a in c
    out.is_vertex = c.cell_dimension(a) == 0;
    const int n = c.dim();
    for (IndexSet I : Ea) {
        if (I == IndexSet::full(n)) continue;
        for (int j : I.complement(n).indices()) {
            ConditionFlags f = c.check_conditions(a, I, j);
            if (f.C1 && f.C2 && f.C4)
                out.witnesses.push_back(VertexWitness{I, j, f.C4, f.C5});
        }
    }
    return out;
}

ApexBoundsReport nonredundant_apex_bounds(const Cone& c, const Representation& rep,
                                          const ApexStructure& s) {
    ApexBoundsReport out;
    // necessity: every apex of the structure is an (I,j)-vertex
    for (const auto& entry : s.apices) {
        VertexClassification vc = classify_vertex(c, entry.apex);
        if (vc.witnesses.empty())
            out.violations.push_back("apex " + entry.apex.str() +
                                     " of the structure has no (I,j)-vertex witness");
        else
            out.vertex_apices.push_back(entry.apex);
    }
    // sufficiency: every C5-witnessed vertex among the representation's
    // apices belongs to the structure
    std::vector<Point> apices;
    for (const auto& h : rep.halfspaces()) {
        bool seen = false;
        for (const auto& a : apices)
            if (a.proj_equal(h.apex())) { seen = true; break; }
        if (!seen) apices.push_back(h.apex());
    }
    for (const auto& a : apices) {
        VertexClassification vc = classify_vertex(c, a);
        bool c5 = std::any_of(vc.witnesses.begin(), vc.witnesses.end(),
                              [](const VertexWitness& w) { return w.C5; });
        if (!c5) continue;
        out.sufficient_vertices.push_back(a);
        if (!s.find(a))
            out.violations.push_back("C5-witnessed vertex " + a.str() +
                                     " is missing from the structure");
    }
    return out;
}

Cone perturb_generic(const Cone& c, const Rat& eps) {
    if (eps <= 0)
        throw PreconditionError("perturb_generic: eps must be positive");
    std::vector<Point> gens;
    for (const auto& v : c.generators())
        for (int i = 0; i < c.dim(); ++i) {
            std::vector<Scalar> coords;
            coords.reserve(c.dim());
            for (int h = 0; h < c.dim(); ++h) {
                Rat val = v[h].value();
                if (h == i) val += eps;
                coords.emplace_back(Scalar(std::move(val)));
            }
            gens.emplace_back(std::move(coords));
        }
    return Cone(std::move(gens));
}

bool certify_generic_extremities(const Cone& c, const Rat& eps) {
    if (eps <= 0)
        throw PreconditionError("certify_generic_extremities: eps must be positive");
    const int n = c.dim();
    for (const auto& v : c.extreme_generators()) {
        bool certified = false;
        for (int l = 0; l < n && !certified; ++l) {
            // center = v with coordinate l lowered by eps; its ball extremes
            // are the center with each single coordinate raised by eps
            bool all_in = true;
            for (int i = 0; i < n && all_in; ++i) {
                std::vector<Scalar> coords;
                coords.reserve(n);
                for (int h = 0; h < n; ++h) {
                    Rat val = v[h].value();
                    if (h == l) val -= eps;
                    if (h == i) val += eps;
                    coords.emplace_back(Scalar(std::move(val)));
                }
                if (!c.contains(Point(std::move(coords)))) all_in = false;
            }
            certified = all_in;
        }
        if (!certified) return false;
    }
    return true;
}

Rat default_genericity_epsilon(const Cone& c) {
    std::vector<Rat> gaps;
    for (const auto& v : c.generators())
        for (int i = 0; i < c.dim(); ++i)
            for (int j = 0; j < c.dim(); ++j)
                if (i != j) gaps.push_back(v[i].value() - v[j].value());
    std::sort(gaps.begin(), gaps.end());
    Rat best(0);
    for (size_t k = 1; k < gaps.size(); ++k) {
        Rat d = gaps[k] - gaps[k - 1];
        if (d > 0 && (best == 0 || d < best)) best = d;
    }
    if (best == 0) return Rat(1, 2);
    return best / 2;
}

bool check_minor_genericity(const Cone& c) {
    const auto& g = c.generators();
    const int p = static_cast<int>(g.size());
    for (int r = 0; r < p; ++r)
        for (int s = r + 1; s < p; ++s)
            for (int i = 0; i < c.dim(); ++i)
                for (int j = i + 1; j < c.dim(); ++j)
                    if (g[r][i].value() + g[s][j].value() ==
                        g[r][j].value() + g[s][i].value())
                        return false;
    return true;
}

} // namespace tropcone
