#include "tropcone/cone.hpp"

#include <algorithm>
#include <numeric>

namespace tropcone {

namespace {

// lambda_r = min_i (a_i - v^r_i); both points all-finite.
Rat residuation_lambda(const Point& v, const Point& a) {
    Rat lam = a[0].value() - v[0].value();
    for (int i = 1; i < a.dim(); ++i) {
        Rat d = a[i].value() - v[i].value();
        if (d < lam) lam = d;
    }
    return lam;
}

Point residuated_projection(const std::vector<Point>& gens, const Point& a,
                            std::vector<Rat>* lambda_out) {
    std::vector<Scalar> acc(a.dim(), Scalar::bottom());
    for (const auto& v : gens) {
        Rat lam = residuation_lambda(v, a);
        if (lambda_out) lambda_out->push_back(lam);
        for (int i = 0; i < a.dim(); ++i)
            acc[i] = trop_add(acc[i], Scalar(lam + v[i].value()));
    }
    return Point(std::move(acc));
}

bool member_by_residuation(const std::vector<Point>& gens, const Point& x) {
    return residuated_projection(gens, x, nullptr).proj_equal(x);
}

} // namespace

Cone::Cone(std::vector<Point> generators) {
    if (generators.empty())
        throw PreconditionError("Cone: at least one generator required");
    n_ = generators.front().dim();
    for (const auto& g : generators) {
        if (g.dim() != n_)
            throw PreconditionError("Cone: generators of mixed dimension");
        if (!g.all_finite())
            throw PreconditionError("Cone: generator " + g.str() + " is not finite");
    }
    // projective dedup, preserving first-occurrence order
    for (const auto& g : generators) {
        Point c = g.normalized();
        bool dup = false;
        for (const auto& kept : generators_)
            if (kept.proj_equal(c)) { dup = true; break; }
        if (!dup) generators_.push_back(std::move(c));
    }
}

Projection Cone::project(const Point& a) const {
    if (!a.all_finite())
        throw PreconditionError("project: point must be finite");
    Projection out;
    out.point = residuated_projection(generators_, a, &out.lambda);
    return out;
}

bool Cone::contains(const Point& x) const {
    if (!x.all_finite())
        throw PreconditionError("contains: point must be finite");
    return member_by_residuation(generators_, x);
}

std::vector<Point> Cone::extreme_generators() const {
    std::vector<Point> out;
    if (generators_.size() == 1) return generators_;
    for (size_t r = 0; r < generators_.size(); ++r) {
        std::vector<Point> others;
        others.reserve(generators_.size() - 1);
        for (size_t s = 0; s < generators_.size(); ++s)
            if (s != r) others.push_back(generators_[s]);
        if (!member_by_residuation(others, generators_[r]))
            out.push_back(generators_[r]);
    }
    return out;
}

TypeVector Cone::type_of(const Point& x) const {
    if (!x.all_finite())
        throw PreconditionError("type_of: point must be finite");
    const int p = num_generators();
    TypeVector t;
    t.sectors.assign(n_, {});
    for (int r = 0; r < p; ++r) {
        const Point& v = generators_[r];
        Rat best = v[0].value() - x[0].value();
        for (int i = 1; i < n_; ++i) {
            Rat d = v[i].value() - x[i].value();
            if (d > best) best = d;
        }
        for (int j = 0; j < n_; ++j)
            if (v[j].value() - x[j].value() == best) t.sectors[j].push_back(r);
    }
    return t;
}

int Cone::cell_dimension(const Point& x) const {
    TypeVector t = type_of(x);
    // union-find over [n]; edge {i,j} iff S_i and S_j share a generator
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    const int p = num_generators();
    std::vector<std::vector<bool>> in_sector(n_, std::vector<bool>(p, false));
    for (int j = 0; j < n_; ++j)
        for (int r : t.sectors[j]) in_sector[j][r] = true;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j) {
            bool meet = false;
            for (int r : t.sectors[i])
                if (in_sector[j][r]) { meet = true; break; }
            if (meet) parent[find(i)] = find(j);
        }
    int components = 0;
    for (int i = 0; i < n_; ++i)
        if (find(i) == i) ++components;
    return components - 1;
}

ConditionFlags Cone::check_conditions(const Point& a, IndexSet I,
                                      std::optional<int> j) const {
    if (I.empty() || I == IndexSet::full(n_))
        throw PreconditionError("check_conditions: I must be a proper non-empty subset");
    if (j && I.contains(*j))
        throw PreconditionError("check_conditions: j must not belong to I");
    TypeVector t = type_of(a);
    const int p = num_generators();
    auto mask = [&](int h) {
        std::vector<bool> m(p, false);
        for (int r : t.sectors[h]) m[r] = true;
        return m;
    };
    std::vector<std::vector<bool>> S(n_);
    for (int h = 0; h < n_; ++h) S[h] = mask(h);

    auto union_over = [&](IndexSet K) {
        std::vector<bool> u(p, false);
        for (int k : K.indices())
            for (int r = 0; r < p; ++r) u[r] = u[r] || S[k][r];
        return u;
    };
    auto not_subset = [&](const std::vector<bool>& x, const std::vector<bool>& y) {
        for (int r = 0; r < p; ++r)
            if (x[r] && !y[r]) return true;
        return false;
    };
    auto intersection = [&](int i, int k) {
        std::vector<bool> m(p, false);
        for (int r = 0; r < p; ++r) m[r] = S[i][r] && S[k][r];
        return m;
    };

    ConditionFlags f;
    // C1: the sectors of I cover [p]
    {
        std::vector<bool> u = union_over(I);
        f.C1 = std::all_of(u.begin(), u.end(), [](bool b) { return b; });
    }
    // C2: every j' outside I meets some sector of I
    f.C2 = true;
    for (int jj : I.complement(n_).indices()) {
        bool meets = false;
        for (int i : I.indices())
            for (int r : t.sectors[jj])
                if (S[i][r]) { meets = true; break; }
        if (!meets) { f.C2 = false; break; }
    }
    // C3: each i in I contributes a generator no other sector of I covers
    f.C3 = true;
    for (int i : I.indices()) {
        IndexSet rest = I;
        rest.remove(i);
        std::vector<bool> u = union_over(rest);
        bool witness = false;
        for (int jj : I.complement(n_).indices())
            if (not_subset(intersection(i, jj), u)) { witness = true; break; }
        if (!witness) { f.C3 = false; break; }
    }
    if (j) {
        // C4: like C3 but the witness coordinate is fixed to j
        f.C4 = true;
        for (int i : I.indices()) {
            IndexSet rest = I;
            rest.remove(i);
            if (!not_subset(intersection(i, *j), union_over(rest))) {
                f.C4 = false;
                break;
            }
        }
        // C5: S_i(a) n S_j(a) not within the union over all k outside {i,j}
        f.C5 = true;
        for (int i : I.indices()) {
            IndexSet others = IndexSet::full(n_);
            others.remove(i);
            others.remove(*j);
            if (!not_subset(intersection(i, *j), union_over(others))) {
                f.C5 = false;
                break;
            }
        }
    }
    return f;
}

} // namespace tropcone
