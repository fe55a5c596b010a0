#pragma once

#include <cstddef>
#include <vector>

#include "tropcone/halfspace.hpp"

namespace tropcone {

// A non-trivial element of the j-th polar: u_j finite, normalized to u_j = 0.
struct PolarVector {
    int j = 0;
    Point u;
};

struct PolarOptions {
    // Candidate grid cap per j; overridable via TROPCONE_CANDIDATE_CAP.
    std::size_t candidate_cap = 1'000'000;
    // Enumerate the candidate grid with OpenMP. The serial path is the
    // reference implementation; both produce identical output.
    bool parallel = false;
};

PolarOptions default_polar_options();

bool in_polar(const Cone& c, int j, const Point& u);

// Literal evaluation of the extremality criterion: for each i != j, u_i is
// bottom or some generator r has u_i + v^r_i = u_j + v^r_j strictly above
// every other term.
bool is_extreme_polar(const Cone& c, int j, const Point& u);

// All projectively distinct non-trivial extreme vectors of the j-th polar,
// by exhaustive choice of u_i in { v^r_j - v^r_i } u {bottom} per i != j.
std::vector<PolarVector> enumerate_polar_extremes(const Cone& c, int j,
                                                  const PolarOptions& opts = default_polar_options());

// Serial reference for the enumeration kernel; kept for testing and the
// benchmark target.
std::vector<PolarVector> enumerate_polar_extremes_serial(const Cone& c, int j,
                                                         const PolarOptions& opts = default_polar_options());

struct InitialHalfSpace {
    HalfSpace halfspace;
    int j;     // polar index the extreme vector came from (first occurrence)
    Point u;   // the extreme vector
};

// Saturations of all non-trivial polar extremes, deduplicated: the initial
// external representation, every member minimal with apex in the cone.
std::vector<InitialHalfSpace> initial_representation(const Cone& c,
                                                     const PolarOptions& opts = default_polar_options());

} // namespace tropcone
