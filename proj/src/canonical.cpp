#include "tropcone/canonical.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace tropcone {

namespace {

// Sampling falsifier for user-supplied lists: random points near generators
// and apices that pass every half-space must also pass cone membership.
void falsify_or_accept(const Cone& c, const std::vector<HalfSpace>& hs,
                       unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> num(-8, 8);
    std::vector<Point> anchors = c.generators();
    for (const auto& h : hs) anchors.push_back(h.apex());
    const int n = c.dim();
    for (int trial = 0; trial < 1000; ++trial) {
        const Point& base = anchors[trial % anchors.size()];
        std::vector<Scalar> coords;
        coords.reserve(n);
        for (int i = 0; i < n; ++i) {
            Rat noise(num(rng), 4);
            noise.canonicalize();
            coords.emplace_back(Scalar(base[i].value() + noise));
        }
        Point x(std::move(coords));
        bool in_all = true;
        for (const auto& h : hs)
            if (!h.member(x)) { in_all = false; break; }
        if (in_all && !c.contains(x))
            throw PreconditionError(
                "representation rejected: point " + x.str() +
                " lies in every half-space but outside the cone");
    }
}

} // namespace

Representation::Representation(Cone cone, std::vector<HalfSpace> halfspaces,
                               Provenance provenance, unsigned falsifier_seed)
    : cone_(std::move(cone)),
      halfspaces_(std::move(halfspaces)),
      provenance_(provenance) {
    for (const auto& h : halfspaces_) {
        if (!contains_cone(h, cone_))
            throw PreconditionError("Representation: half-space with apex " +
                                    h.apex().str() + " does not contain the cone");
        if (!cone_.contains(h.apex()))
            throw PreconditionError("Representation: apex " + h.apex().str() +
                                    " lies outside the cone");
    }
    if (provenance_ == Provenance::UserSupplied)
        falsify_or_accept(cone_, halfspaces_, falsifier_seed);
}

Representation Representation::from_initial(
    Cone cone, const std::vector<InitialHalfSpace>& initial) {
    std::vector<HalfSpace> hs;
    hs.reserve(initial.size());
    for (const auto& ih : initial) hs.push_back(ih.halfspace);
    return Representation(std::move(cone), std::move(hs),
                          Provenance::DerivedFromInitial);
}

std::vector<IndexSet> enumerate_Ea(const Cone& c, const Point& a) {
    if (!c.contains(a))
        throw PreconditionError("enumerate_Ea: apex " + a.str() +
                                " lies outside the cone");
    const int n = c.dim();
    std::vector<IndexSet> out;
    for (std::uint64_t bits = 1; bits < IndexSet::full(n).bits(); ++bits) {
        IndexSet I(bits);
        if (contains_cone(HalfSpace(a, I), c)) out.push_back(I);
    }
    out.push_back(IndexSet::full(n));
    return out;
}

Representation minimize(const Representation& rep,
                        const std::vector<int>& scan_order,
                        const RedundancyObserver& observer) {
    const auto& all = rep.halfspaces();
    const int m = static_cast<int>(all.size());
    std::vector<int> order = scan_order;
    if (order.empty()) {
        order.resize(m);
        std::iota(order.begin(), order.end(), 0);
    }
    if (static_cast<int>(order.size()) != m)
        throw PreconditionError("minimize: scan order size mismatch");

    std::vector<bool> alive(m, true);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int idx : order) {
            if (!alive[idx]) continue;
            std::vector<HalfSpace> rest;
            rest.reserve(m - 1);
            for (int k = 0; k < m; ++k)
                if (alive[k] && k != idx) rest.push_back(all[k]);
            if (rest.empty()) continue;
            bool redundant = is_redundant(all[idx], rest);
            if (observer) observer(all[idx], rest, redundant);
            if (redundant) {
                alive[idx] = false;
                changed = true;
            }
        }
    }
    std::vector<HalfSpace> kept;
    for (int k = 0; k < m; ++k)
        if (alive[k]) kept.push_back(all[k]);
    return Representation(rep.cone(), std::move(kept), rep.provenance());
}

ApexStructure canonical_structure(const Representation& rep) {
    // group half-spaces by canonical apex
    std::vector<Point> apices;
    for (const auto& h : rep.halfspaces()) {
        bool seen = false;
        for (const auto& a : apices)
            if (a.proj_equal(h.apex())) { seen = true; break; }
        if (!seen) apices.push_back(h.apex());
    }
    std::sort(apices.begin(), apices.end(),
              [](const Point& a, const Point& b) { return a.proj_less(b); });

    ApexStructure out;
    for (const auto& a : apices) {
        std::vector<HalfSpace> lambda;
        for (const auto& h : rep.halfspaces())
            if (!h.apex().proj_equal(a)) lambda.push_back(h);
        ApexDigraph dg = apex_digraph(lambda, a, enumerate_Ea(rep.cone(), a));
        SccQuotient q = scc_quotient(dg.adjacency);
        if (q.strongly_connected()) continue;  // a is not a non-redundant apex

        ApexEntry entry{a, {}};
        for (const auto& comp : q.components) {
            if (!comp.maximal) continue;
            ApexComponent ac;
            for (int v : comp.members) ac.members.push_back(dg.nodes[v]);
            std::sort(ac.members.begin(), ac.members.end(),
                      [](IndexSet x, IndexSet y) { return x.less_by_size_then_lex(y); });
            ac.principal = dg.nodes[principal_element(dg, comp)];
            ac.representative = ac.members.front();
            entry.components.push_back(std::move(ac));
        }
        if (entry.components.empty())
            throw InternalError("canonical_structure: non-strongly-connected digraph without maximal components");
        out.apices.push_back(std::move(entry));
    }
    return out;
}

bool mutually_redundant(const HalfSpace& h1, const HalfSpace& h2,
                        const std::vector<HalfSpace>& lambda) {
    if (!h1.apex().proj_equal(h2.apex()))
        throw PreconditionError("mutually_redundant: half-spaces must share an apex");
    for (const auto& h : lambda)
        if (h.apex().proj_equal(h1.apex()))
            throw PreconditionError("mutually_redundant: lambda contains the shared apex");
    TangentHypergraph g = tangent_hypergraph(lambda, h1.apex());
    return h2.sectors().subset_of(reachable_set(g.graph, h1.sectors())) &&
           h1.sectors().subset_of(reachable_set(g.graph, h2.sectors()));
}

Representation exchange(const Representation& rep, const HalfSpace& h_old,
                        const HalfSpace& h_new) {
    auto it = std::find(rep.halfspaces().begin(), rep.halfspaces().end(), h_old);
    if (it == rep.halfspaces().end())
        throw PreconditionError("exchange: h_old is not a member of the representation");
    if (h_old == h_new) return rep;
    std::vector<HalfSpace> lambda;
    for (const auto& h : rep.halfspaces())
        if (!h.apex().proj_equal(h_old.apex())) lambda.push_back(h);
    if (!mutually_redundant(h_old, h_new, lambda))
        throw PreconditionError("exchange: half-spaces are not in the same component");

    std::vector<HalfSpace> swapped = rep.halfspaces();
    swapped[it - rep.halfspaces().begin()] = h_new;
    Representation out(rep.cone(), std::move(swapped), rep.provenance());
    // the swap must preserve non-redundancy
    for (size_t k = 0; k < out.halfspaces().size(); ++k) {
        std::vector<HalfSpace> rest;
        for (size_t l = 0; l < out.halfspaces().size(); ++l)
            if (l != k) rest.push_back(out.halfspaces()[l]);
        if (!rest.empty() && is_redundant(out.halfspaces()[k], rest))
            throw InternalError("exchange: swapped representation became redundant");
    }
    return out;
}

bool verify_theorem_main(const Representation& rep, const ApexStructure& s) {
    // collect rep's sector sets per apex
    std::vector<std::pair<Point, std::vector<IndexSet>>> groups;
    for (const auto& h : rep.halfspaces()) {
        bool placed = false;
        for (auto& [a, sets] : groups)
            if (a.proj_equal(h.apex())) {
                sets.push_back(h.sectors());
                placed = true;
                break;
            }
        if (!placed) groups.push_back({h.apex(), {h.sectors()}});
    }
    if (groups.size() != s.apices.size()) return false;
    for (const auto& [a, sets] : groups) {
        const ApexEntry* entry = s.find(a);
        if (!entry) return false;
        if (sets.size() != entry->components.size()) return false;
        std::vector<bool> used(sets.size(), false);
        for (const auto& comp : entry->components) {
            int hits = 0;
            for (size_t k = 0; k < sets.size(); ++k) {
                bool in_comp = std::find(comp.members.begin(), comp.members.end(),
                                         sets[k]) != comp.members.end();
                if (in_comp) {
                    if (used[k]) return false;
                    used[k] = true;
                    ++hits;
                }
            }
            if (hits != 1) return false;
        }
        if (std::find(used.begin(), used.end(), false) != used.end()) return false;
    }
    return true;
}

} // namespace tropcone
