#pragma once

#include <map>
#include <vector>

#include "tropcone/cone.hpp"

namespace tropcone {

// { x | max_{i in I}(x_i - alpha_i) >= max_{j in J}(x_j - alpha_j) } with I, J
// disjoint and non-empty; degenerate when I u J is a proper subset of [n].
class GeneralHalfSpace {
public:
    GeneralHalfSpace(int n, IndexSet I, IndexSet J, std::map<int, Rat> alpha);

    int dim() const { return n_; }
    IndexSet lhs() const { return I_; }
    IndexSet rhs() const { return J_; }
    const Rat& alpha(int h) const;
    bool degenerate() const { return (I_ | J_) != IndexSet::full(n_); }

    bool member(const Point& x) const;
    bool active_at(const Point& z) const;  // equality of the two maxima
    // argmax sets of the two sides at z (z assumed in the half-space boundary
    // computations; bottom-absorbing)
    IndexSet lhs_argmax(const Point& z) const;
    IndexSet rhs_argmax(const Point& z) const;

    bool operator==(const GeneralHalfSpace& o) const;  // up to a common additive constant

private:
    Scalar side_max(const Point& x, IndexSet K) const;
    int n_;
    IndexSet I_, J_;
    std::map<int, Rat> alpha_;
};

// Non-degenerate half-space H(a, I): apex a (finite, canonical) and proper
// non-empty sector set I.
class HalfSpace {
public:
    HalfSpace(Point apex, IndexSet sectors);

    int dim() const { return apex_.dim(); }
    const Point& apex() const { return apex_; }
    IndexSet sectors() const { return sectors_; }

    bool member(const Point& x) const;
    GeneralHalfSpace general() const;

    bool operator==(const HalfSpace& o) const {
        return sectors_ == o.sectors_ && apex_.proj_equal(o.apex_);
    }
    bool operator<(const HalfSpace& o) const {  // dedup/map order only
        if (!(apex_.proj_equal(o.apex_))) return apex_.proj_less(o.apex_);
        return sectors_.bits() < o.sectors_.bits();
    }

private:
    Point apex_;
    IndexSet sectors_;
};

bool contains_cone(const HalfSpace& h, const Cone& c);
bool contains_cone(const GeneralHalfSpace& h, const Cone& c);

struct SaturationResult {
    HalfSpace halfspace;      // H(b, I'), apex canonical
    Point raw_apex;           // b in the representative induced by the input alpha
    std::vector<Rat> lambda;  // per-generator scalings
};

// Replaces a containing half-space by a smaller one whose apex is the
// residuated projection of its coefficients onto the cone.
SaturationResult saturate(const GeneralHalfSpace& g, const Cone& c);

// Minimality of H with respect to c: conditions C1, C2, C3 on the apex type.
bool is_minimal(const HalfSpace& h, const Cone& c);

} // namespace tropcone
