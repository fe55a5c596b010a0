#pragma once

#include <string>

#include "tropcone/canonical.hpp"

namespace tropcone {

struct VertexWitness {
    IndexSet I;
    int j = 0;
    bool C4 = false;
    bool C5 = false;
};

// Witness list of (I, j)-vertex certificates at a point: every listed pair
// satisfies C1, C2 and C4 at the point; C5 is reported alongside.
struct VertexClassification {
    Point point;
    bool is_vertex = false;
    std::vector<VertexWitness> witnesses;
};

// Enumerates witnesses over I in E_a (minus [n]) and j outside I. Requires
// a in c.
VertexClassification classify_vertex(const Cone& c, const Point& a);

// Necessity/sufficiency report for the non-redundant apex set: every apex of
// the structure must be an (I,j)-vertex, and every C5-witnessed vertex among
// the representation's apices must occur in the structure. Violations signal
// an implementation bug, not bad input.
struct ApexBoundsReport {
    std::vector<Point> vertex_apices;        // apices of s, all (I,j)-vertices
    std::vector<Point> sufficient_vertices;  // C5-witnessed apices, all in s
    std::vector<std::string> violations;
};

ApexBoundsReport nonredundant_apex_bounds(const Cone& c, const Representation& rep,
                                          const ApexStructure& s);

// The cone generated by the radius-eps Hilbert balls around the generators:
// each generator with each single coordinate raised by eps.
Cone perturb_generic(const Cone& c, const Rat& eps);

// Certificate that every extreme generator sits in a radius-eps Hilbert ball
// inside the cone, with candidate centers restricted to the generator with
// one coordinate lowered by eps. True certifies generic extremities at this
// eps; false is inconclusive for other radii.
bool certify_generic_extremities(const Cone& c, const Rat& eps);

// Half the minimum positive pairwise difference among the coordinate gaps
// { v^r_i - v^r_j }; falls back to 1/2 when all gaps coincide.
Rat default_genericity_epsilon(const Cone& c);

// True iff no 2x2 minor is tropically singular:
// v^r_i + v^s_j != v^r_j + v^s_i for all i < j, r < s.
bool check_minor_genericity(const Cone& c);

} // namespace tropcone
