#pragma once

// Shared cones, half-space lists, and small builders used across the test
// suites. Index-set helpers take 1-based indices to match the external
// convention used in the golden data.

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "tropcone/cells.hpp"

namespace fx {

using namespace tropcone;

inline Point pt(const std::vector<std::string>& coords) {
    std::vector<Scalar> s;
    for (const auto& c : coords) s.push_back(parse_scalar(c));
    return Point(std::move(s));
}

inline Point pt(std::initializer_list<long> coords) {
    std::vector<Rat> r(coords.begin(), coords.end());
    return Point::finite(std::move(r));
}

inline IndexSet sec(const std::vector<int>& one_based) {
    IndexSet s;
    for (int i : one_based) s.add(i - 1);
    return s;
}

// Triangle cone: generators (0,1,3), (0,4,1), (0,9,4).
inline Cone triangle_cone() {
    return Cone({pt({0, 1, 3}), pt({0, 4, 1}), pt({0, 9, 4})});
}

// 4th cyclic cone: generators (0, t, 2t, 3t), t = 1..4.
inline Cone cyclic_cone() {
    std::vector<Point> gens;
    for (long t = 1; t <= 4; ++t) gens.push_back(pt({0, t, 2 * t, 3 * t}));
    return Cone(std::move(gens));
}

inline GeneralHalfSpace ghs(int n, const std::vector<int>& I1,
                            const std::vector<int>& J1,
                            const std::vector<std::pair<int, std::string>>& alpha1) {
    std::map<int, Rat> alpha;
    for (const auto& [k, v] : alpha1) alpha[k - 1] = parse_rational(v);
    return GeneralHalfSpace(n, sec(I1), sec(J1), std::move(alpha));
}

// The five half-spaces of the triangle-cone representation used in the
// redundancy example (general form).
inline std::vector<GeneralHalfSpace> five_list() {
    return {
        ghs(3, {2}, {1}, {{2, "0"}, {1, "-1"}}),
        ghs(3, {2, 3}, {1}, {{2, "4"}, {3, "3"}, {1, "0"}}),
        ghs(3, {3}, {1, 2}, {{3, "1"}, {1, "0"}, {2, "6"}}),
        ghs(3, {1}, {3}, {{1, "0"}, {3, "4"}}),
        ghs(3, {1, 2}, {3}, {{1, "0"}, {2, "8"}, {3, "3"}}),
    };
}

// The initial representation Gamma of the 4th cyclic cone: 16 rows H1..H16.
inline std::vector<HalfSpace> cyclic_gamma() {
    auto H = [](const std::vector<std::string>& a, const std::vector<int>& I) {
        return HalfSpace(pt(a), sec(I));
    };
    return {
        H({"0", "1", "2", "3"}, {4}),       // H1
        H({"0", "3", "7", "11"}, {1, 3}),   // H2
        H({"0", "3", "7", "11"}, {1, 4}),   // H3
        H({"0", "1", "2", "6"}, {3}),       // H4
        H({"0", "1", "3", "5"}, {1, 4}),    // H5
        H({"0", "1", "3", "6"}, {2, 4}),    // H6
        H({"0", "1", "3", "7"}, {1, 3}),    // H7
        H({"0", "1", "4", "8"}, {2, 4}),    // H8
        H({"0", "1", "5", "9"}, {2}),       // H9
        H({"0", "2", "4", "7"}, {1, 4}),    // H10
        H({"0", "2", "5", "8"}, {1, 4}),    // H11
        H({"0", "2", "5", "9"}, {1, 3}),    // H12
        H({"0", "3", "6", "10"}, {1, 4}),   // H13
        H({"0", "1", "2", "4"}, {1, 4}),    // H14
        H({"0", "1", "2", "4"}, {2, 4}),    // H15
        H({"0", "4", "8", "12"}, {1}),      // H16
    };
}

// Apices of cyclic_gamma that are not non-redundant (the red vectors).
inline std::vector<Point> cyclic_red_apices() {
    return {pt({0, 1, 3, 5}), pt({0, 2, 4, 7}), pt({0, 2, 5, 8}), pt({0, 3, 6, 10})};
}

// Generic cone = the triangle cone perturbed with radius 1/2.
inline Cone generic_cone() { return perturb_generic(triangle_cone(), Rat(1, 2)); }

// Apex list of the generic cone's canonical representation with the sector
// set of the component representative.
inline std::vector<std::pair<Point, IndexSet>> generic_canonical() {
    return {
        {pt({"0", "1/2", "3"}), sec({2})},
        {pt({"0", "7/2", "5/2"}), sec({2, 3})},
        {pt({"0", "6", "1/2"}), sec({3})},
        {pt({"0", "19/2", "9/2"}), sec({1})},
        {pt({"0", "8", "7/2"}), sec({1, 2})},
    };
}

// The 10-generator perturbed cyclic cone of the purity remark.
inline Cone perturbed_cyclic_cone() {
    return Cone({
        pt({"0", "1", "2", "3"}),
        pt({"0", "1", "5/2", "7/2"}),
        pt({"0", "3/2", "5/2", "7/2"}),
        pt({"0", "3/2", "4", "6"}),
        pt({"0", "2", "4", "6"}),
        pt({"0", "5/2", "6", "9"}),
        pt({"0", "3", "6", "9"}),
        pt({"0", "7/2", "15/2", "12"}),
        pt({"0", "7/2", "8", "12"}),
        pt({"0", "4", "8", "12"}),
    });
}

// The 12-half-space non-redundant representation of the perturbed cyclic cone.
inline std::vector<HalfSpace> perturbed_cyclic_rep() {
    auto H = [](const std::vector<std::string>& a, const std::vector<int>& I) {
        return HalfSpace(pt(a), sec(I));
    };
    return {
        H({"0", "1", "2", "3"}, {4}),
        H({"0", "1", "2", "13/2"}, {3}),
        H({"0", "1", "7/2", "13/2"}, {2, 4}),
        H({"0", "1", "9/2", "17/2"}, {2, 4}),
        H({"0", "1", "11/2", "19/2"}, {2}),
        H({"0", "3/2", "5/2", "9/2"}, {1, 4}),
        H({"0", "3/2", "7/2", "8"}, {1, 3}),
        H({"0", "2", "4", "7"}, {1, 4}),
        H({"0", "2", "5", "19/2"}, {1, 3}),
        H({"0", "3", "6", "10"}, {1, 4}),
        H({"0", "3", "7", "23/2"}, {1, 3}),
        H({"0", "4", "8", "12"}, {1}),
    };
}

// Deterministic random cone generator for the property suites.
inline Cone random_cone(std::mt19937& rng, int n_lo = 3, int n_hi = 4,
                        int p_lo = 3, int p_hi = 6, int coord_hi = 8) {
    std::uniform_int_distribution<int> nd(n_lo, n_hi), pd(p_lo, p_hi),
        cd(0, coord_hi);
    int n = nd(rng), p = pd(rng);
    std::vector<Point> gens;
    for (int r = 0; r < p; ++r) {
        std::vector<Rat> coords;
        for (int i = 0; i < n; ++i) coords.emplace_back(cd(rng));
        gens.push_back(Point::finite(std::move(coords)));
    }
    return Cone(std::move(gens));
}

inline bool same_apex_multiset(const std::vector<HalfSpace>& a,
                               const std::vector<HalfSpace>& b) {
    if (a.size() != b.size()) return false;
    std::vector<Point> pa, pb;
    for (const auto& h : a) pa.push_back(h.apex());
    for (const auto& h : b) pb.push_back(h.apex());
    auto less = [](const Point& x, const Point& y) { return x.proj_less(y); };
    std::sort(pa.begin(), pa.end(), less);
    std::sort(pb.begin(), pb.end(), less);
    for (size_t k = 0; k < pa.size(); ++k)
        if (!pa[k].proj_equal(pb[k])) return false;
    return true;
}

} // namespace fx
