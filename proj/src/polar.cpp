#include "tropcone/polar.hpp"

#include <algorithm>
#include <cstdlib>

#ifdef TROPCONE_HAVE_OPENMP
#include <omp.h>
#endif

namespace tropcone {

PolarOptions default_polar_options() {
    PolarOptions opts;
    if (const char* cap = std::getenv("TROPCONE_CANDIDATE_CAP"))
        opts.candidate_cap = std::strtoull(cap, nullptr, 10);
    return opts;
}

bool in_polar(const Cone& c, int j, const Point& u) {
    if (u.dim() != c.dim())
        throw PreconditionError("in_polar: dimension mismatch");
    if (u[j].is_bottom()) return true;  // trivial elements e^i, i != j
    IndexSet off_j = IndexSet::full(c.dim()).minus(IndexSet::single(j));
    for (const auto& v : c.generators()) {
        Scalar lhs = Scalar::bottom();
        for (int i : off_j.indices()) lhs = trop_add(lhs, trop_mul(u[i], v[i]));
        if (!(lhs >= trop_mul(u[j], v[j]))) return false;
    }
    return true;
}

bool is_extreme_polar(const Cone& c, int j, const Point& u) {
    if (!in_polar(c, j, u))
        throw PreconditionError("is_extreme_polar: u is not in the j-th polar");
    const int n = c.dim();
    for (int i = 0; i < n; ++i) {
        if (i == j || u[i].is_bottom()) continue;
        bool witnessed = false;
        for (const auto& v : c.generators()) {
            Scalar ti = trop_mul(u[i], v[i]);
            if (ti != trop_mul(u[j], v[j])) continue;
            Scalar rest = Scalar::bottom();
            for (int k = 0; k < n; ++k)
                if (k != i && k != j) rest = trop_add(rest, trop_mul(u[k], v[k]));
            if (ti > rest) { witnessed = true; break; }
        }
        if (!witnessed) return false;
    }
    return true;
}

namespace {

// Per-coordinate candidate values for u_i: bottom plus the distinct
// v^r_j - v^r_i over the generators.
std::vector<std::vector<Scalar>> candidate_grid(const Cone& c, int j) {
    const int n = c.dim();
    std::vector<std::vector<Scalar>> grid(n);
    for (int i = 0; i < n; ++i) {
        if (i == j) { grid[i] = {Scalar::one()}; continue; }
        std::vector<Rat> vals;
        for (const auto& v : c.generators())
            vals.push_back(v[j].value() - v[i].value());
        std::sort(vals.begin(), vals.end());
        vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
        grid[i].push_back(Scalar::bottom());
        for (auto& q : vals) grid[i].emplace_back(std::move(q));
    }
    return grid;
}

Point candidate_at(const std::vector<std::vector<Scalar>>& grid, std::size_t flat) {
    std::vector<Scalar> coords(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        std::size_t k = grid[i].size();
        coords[i] = grid[i][flat % k];
        flat /= k;
    }
    return Point(std::move(coords));
}

bool keep_candidate(const Cone& c, int j, const Point& u) {
    // skip the all-bottom-off-j candidate and anything outside the polar
    bool any_off = false;
    for (int i = 0; i < u.dim(); ++i)
        if (i != j && u[i].is_finite()) { any_off = true; break; }
    if (!any_off) return false;
    return in_polar(c, j, u) && is_extreme_polar(c, j, u);
}

std::vector<PolarVector> dedupe(int j, std::vector<Point> found) {
    // candidates already carry the u_j = 0 scaling, so keep them verbatim
    std::vector<PolarVector> out;
    for (auto& u : found) {
        bool dup = false;
        for (const auto& kept : out)
            if (kept.u.proj_equal(u)) { dup = true; break; }
        if (!dup) out.push_back(PolarVector{j, std::move(u)});
    }
    return out;
}

std::size_t grid_size_checked(const std::vector<std::vector<Scalar>>& grid,
                              int j, const PolarOptions& opts) {
    std::size_t total = 1;
    for (const auto& g : grid) {
        if (total > opts.candidate_cap / g.size())
            throw CandidateCapExceeded("polar enumeration for j=" + std::to_string(j + 1) +
                                       " exceeds the candidate cap of " +
                                       std::to_string(opts.candidate_cap));
        total *= g.size();
    }
    return total;
}

} // namespace

std::vector<PolarVector> enumerate_polar_extremes_serial(const Cone& c, int j,
                                                         const PolarOptions& opts) {
    auto grid = candidate_grid(c, j);
    std::size_t total = grid_size_checked(grid, j, opts);
    std::vector<Point> found;
    for (std::size_t flat = 0; flat < total; ++flat) {
        Point u = candidate_at(grid, flat);
        if (keep_candidate(c, j, u)) found.push_back(std::move(u));
    }
    return dedupe(j, std::move(found));
}

std::vector<PolarVector> enumerate_polar_extremes(const Cone& c, int j,
                                                  const PolarOptions& opts) {
#ifdef TROPCONE_HAVE_OPENMP
    if (opts.parallel) {
        auto grid = candidate_grid(c, j);
        std::size_t total = grid_size_checked(grid, j, opts);
        std::vector<char> keep(total, 0);
#pragma omp parallel for schedule(dynamic, 64)
        for (std::ptrdiff_t flat = 0; flat < static_cast<std::ptrdiff_t>(total); ++flat) {
            Point u = candidate_at(grid, static_cast<std::size_t>(flat));
            if (keep_candidate(c, j, u)) keep[flat] = 1;
        }
        // merge in grid order so output matches the serial reference
        std::vector<Point> found;
        for (std::size_t flat = 0; flat < total; ++flat)
            if (keep[flat]) found.push_back(candidate_at(grid, flat));
        return dedupe(j, std::move(found));
    }
#endif
    return enumerate_polar_extremes_serial(c, j, opts);
}

std::vector<InitialHalfSpace> initial_representation(const Cone& c,
                                                     const PolarOptions& opts) {
    const int n = c.dim();
    std::vector<InitialHalfSpace> out;
    for (int j = 0; j < n; ++j) {
        for (auto& pv : enumerate_polar_extremes(c, j, opts)) {
            // half-space max_{i != j} u_i x_i >= u_j x_j, alpha_h = -u_h
            IndexSet I;
            std::map<int, Rat> alpha;
            for (int i = 0; i < n; ++i) {
                if (i == j || pv.u[i].is_bottom()) continue;
                I.add(i);
                alpha[i] = -pv.u[i].value();
            }
            alpha[j] = -pv.u[j].value();
            GeneralHalfSpace g(n, I, IndexSet::single(j), std::move(alpha));
            HalfSpace h = saturate(g, c).halfspace;
            bool dup = false;
            for (const auto& kept : out)
                if (kept.halfspace == h) { dup = true; break; }
            if (!dup) out.push_back(InitialHalfSpace{std::move(h), j, std::move(pv.u)});
        }
    }
    return out;
}

} // namespace tropcone
