#pragma once

#include <vector>

#include "tropcone/halfspace.hpp"

namespace tropcone {

struct Hyperarc {
    IndexSet tail;  // T
    IndexSet head;  // H
};

struct DirectedHypergraph {
    int n = 0;
    std::vector<Hyperarc> arcs;
};

// One entry per arc: the index in the originating half-space list.
using TangentArcOrigin = std::vector<int>;

struct TangentHypergraph {
    DirectedHypergraph graph;
    TangentArcOrigin origin;
};

// Greatest set reachable from I: worklist forward chaining with per-arc
// unsatisfied-tail counters, linear in the hypergraph size.
IndexSet reachable_set(const DirectedHypergraph& g, IndexSet I);

// One hyperarc (lhs argmax, rhs argmax) per member active at z. Errors if z
// lies outside some member, naming its index.
TangentHypergraph tangent_hypergraph(const std::vector<GeneralHalfSpace>& gamma,
                                     const Point& z);
TangentHypergraph tangent_hypergraph(const std::vector<HalfSpace>& gamma,
                                     const Point& z);

// H(a,I) redundant w.r.t. gamma iff [n] reachable from I in the tangent
// hypergraph at a. Requires apex(h) in every member.
bool is_redundant(const HalfSpace& h, const std::vector<HalfSpace>& gamma);
bool is_redundant(const HalfSpace& h, const std::vector<GeneralHalfSpace>& gamma);

// A verified separating point for a non-redundant half-space: inside every
// member of gamma, outside h.
Point witness_point(const HalfSpace& h, const std::vector<HalfSpace>& gamma);
Point witness_point(const HalfSpace& h, const std::vector<GeneralHalfSpace>& gamma);

// Reachability digraph over the sector sets of E_a induced by the half-spaces
// of lambda (all with apex distinct from a, all containing a).
struct ApexDigraph {
    std::vector<IndexSet> nodes;               // E_a
    std::vector<IndexSet> closure;             // per-node hypergraph closure
    std::vector<std::vector<int>> adjacency;   // arc u -> v iff nodes[v] within closure[u]
};

ApexDigraph apex_digraph(const std::vector<HalfSpace>& lambda, const Point& a,
                         const std::vector<IndexSet>& Ea);

struct SccComponent {
    std::vector<int> members;  // node indices
    bool maximal = false;      // sink in the condensation (maximal for the reach order)
};

struct SccQuotient {
    std::vector<SccComponent> components;
    std::vector<int> component_of;                // node -> component
    std::vector<std::vector<int>> order;          // condensation arcs (from -> to)
    bool strongly_connected() const { return components.size() == 1; }
};

SccQuotient scc_quotient(const std::vector<std::vector<int>>& adjacency);

// Inclusion-greatest node of a maximal component of an apex digraph; validated
// against the hypergraph closure of each member.
int principal_element(const ApexDigraph& g, const SccComponent& comp);

} // namespace tropcone
