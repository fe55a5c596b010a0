#pragma once

#include <functional>
#include <optional>

#include "tropcone/hypergraph.hpp"
#include "tropcone/polar.hpp"

namespace tropcone {

enum class Provenance { DerivedFromInitial, UserSupplied };

// An external representation of a cone by half-spaces with apices in the
// cone. User-supplied lists are admitted after a sampling falsifier; only
// pipelines rooted at initial_representation carry exactness guarantees.
class Representation {
public:
    Representation(Cone cone, std::vector<HalfSpace> halfspaces,
                   Provenance provenance, unsigned falsifier_seed = 1);

    const Cone& cone() const { return cone_; }
    const std::vector<HalfSpace>& halfspaces() const { return halfspaces_; }
    Provenance provenance() const { return provenance_; }

    static Representation from_initial(Cone cone,
                                       const std::vector<InitialHalfSpace>& initial);

private:
    Cone cone_;
    std::vector<HalfSpace> halfspaces_;
    Provenance provenance_;
};

struct ApexComponent {
    std::vector<IndexSet> members;
    IndexSet principal;
    IndexSet representative;  // inclusion-minimal member, lex tie-break
};

struct ApexEntry {
    Point apex;
    std::vector<ApexComponent> components;
};

// The canonical structure (A, {C_a}): non-redundant apices with their
// per-apex exchange classes.
struct ApexStructure {
    std::vector<ApexEntry> apices;

    const ApexEntry* find(const Point& a) const {
        for (const auto& e : apices)
            if (e.apex.proj_equal(a)) return &e;
        return nullptr;
    }
};

// E_a: the sector sets I with C within H(a, I), plus [n]. Requires a in c.
std::vector<IndexSet> enumerate_Ea(const Cone& c, const Point& a);

// Reports every redundancy verdict taken during minimize: (tested half-space,
// the rest of the list at that moment, verdict).
using RedundancyObserver =
    std::function<void(const HalfSpace&, const std::vector<HalfSpace>&, bool)>;

// Greedy elimination: repeatedly drop any member redundant w.r.t. the rest,
// scanning in the given order (empty = input order) until a fixed point.
Representation minimize(const Representation& rep,
                        const std::vector<int>& scan_order = {},
                        const RedundancyObserver& observer = {});

ApexStructure canonical_structure(const Representation& rep);

// Same-apex half-spaces interchangeable in non-redundant representations:
// mutual reachability of their sector sets in the tangent hypergraph at the
// apex induced by lambda.
bool mutually_redundant(const HalfSpace& h1, const HalfSpace& h2,
                        const std::vector<HalfSpace>& lambda);

Representation exchange(const Representation& rep, const HalfSpace& h_old,
                        const HalfSpace& h_new);

// Theorem shape check: rep's apices are exactly the structure's, and per apex
// the sector multiset picks exactly one member of each component.
bool verify_theorem_main(const Representation& rep, const ApexStructure& s);

} // namespace tropcone
