#include "tropcone/halfspace.hpp"

namespace tropcone {

GeneralHalfSpace::GeneralHalfSpace(int n, IndexSet I, IndexSet J,
                                   std::map<int, Rat> alpha)
    : n_(n), I_(I), J_(J), alpha_(std::move(alpha)) {
    if (I_.empty() || J_.empty())
        throw PreconditionError("GeneralHalfSpace: I and J must be non-empty");
    if (I_.intersects(J_))
        throw PreconditionError("GeneralHalfSpace: I and J must be disjoint");
    if (!(I_ | J_).subset_of(IndexSet::full(n_)))
        throw PreconditionError("GeneralHalfSpace: index out of range");
    for (int h : (I_ | J_).indices())
        if (!alpha_.count(h))
            throw PreconditionError("GeneralHalfSpace: missing coefficient for index " +
                                    std::to_string(h + 1));
}

const Rat& GeneralHalfSpace::alpha(int h) const {
    auto it = alpha_.find(h);
    if (it == alpha_.end())
        throw PreconditionError("GeneralHalfSpace: no coefficient at index " +
                                std::to_string(h + 1));
    return it->second;
}

Scalar GeneralHalfSpace::side_max(const Point& x, IndexSet K) const {
    Scalar acc = Scalar::bottom();
    for (int h : K.indices()) {
        if (x[h].is_bottom()) continue;
        acc = trop_add(acc, Scalar(x[h].value() - alpha(h)));
    }
    return acc;
}

bool GeneralHalfSpace::member(const Point& x) const {
    if (x.dim() != n_)
        throw PreconditionError("GeneralHalfSpace::member: dimension mismatch");
    return side_max(x, I_) >= side_max(x, J_);
}

bool GeneralHalfSpace::active_at(const Point& z) const {
    return side_max(z, I_) == side_max(z, J_);
}

IndexSet GeneralHalfSpace::lhs_argmax(const Point& z) const {
    Scalar m = side_max(z, I_);
    IndexSet out;
    for (int h : I_.indices())
        if (z[h].is_finite() && Scalar(z[h].value() - alpha(h)) == m) out.add(h);
    return out;
}

IndexSet GeneralHalfSpace::rhs_argmax(const Point& z) const {
    Scalar m = side_max(z, J_);
    IndexSet out;
    for (int h : J_.indices())
        if (z[h].is_finite() && Scalar(z[h].value() - alpha(h)) == m) out.add(h);
    return out;
}

bool GeneralHalfSpace::operator==(const GeneralHalfSpace& o) const {
    if (n_ != o.n_ || I_ != o.I_ || J_ != o.J_) return false;
    // coefficients agree up to a common additive constant
    int h0 = (I_ | J_).indices().front();
    Rat shift = o.alpha(h0) - alpha(h0);
    for (int h : (I_ | J_).indices())
        if (o.alpha(h) - alpha(h) != shift) return false;
    return true;
}

HalfSpace::HalfSpace(Point apex, IndexSet sectors)
    : apex_(apex.normalized()), sectors_(sectors) {
    if (!apex_.all_finite())
        throw PreconditionError("HalfSpace: apex must be finite");
    if (sectors_.empty() || sectors_ == IndexSet::full(apex_.dim()))
        throw PreconditionError("HalfSpace: sectors must be a proper non-empty subset");
    if (!sectors_.subset_of(IndexSet::full(apex_.dim())))
        throw PreconditionError("HalfSpace: sector index out of range");
}

bool HalfSpace::member(const Point& x) const {
    return general().member(x);
}

GeneralHalfSpace HalfSpace::general() const {
    std::map<int, Rat> alpha;
    for (int h = 0; h < dim(); ++h) alpha[h] = apex_[h].value();
    return GeneralHalfSpace(dim(), sectors_, sectors_.complement(dim()),
                            std::move(alpha));
}

bool contains_cone(const HalfSpace& h, const Cone& c) {
    return contains_cone(h.general(), c);
}

bool contains_cone(const GeneralHalfSpace& h, const Cone& c) {
    // half-spaces are tropical cones, so generator membership is exact
    for (const auto& v : c.generators())
        if (!h.member(v)) return false;
    return true;
}

SaturationResult saturate(const GeneralHalfSpace& g, const Cone& c) {
    for (const auto& v : c.generators())
        if (!g.member(v))
            throw PreconditionError("saturate: generator " + v.str() +
                                    " violates the input half-space");
    const int n = c.dim();
    IndexSet IJ = g.lhs() | g.rhs();
    std::vector<Rat> lambda;
    std::vector<Scalar> beta(n, Scalar::bottom());
    for (const auto& v : c.generators()) {
        // lambda_r = -(max over I u J of v_h - alpha_h)
        bool first = true;
        Rat m;
        for (int h : IJ.indices()) {
            Rat d = v[h].value() - g.alpha(h);
            if (first || d > m) { m = d; first = false; }
        }
        lambda.push_back(-m);
        for (int i = 0; i < n; ++i)
            beta[i] = trop_add(beta[i], Scalar(lambda.back() + v[i].value()));
    }
    Point b(std::move(beta));
    IndexSet Iprime;
    for (int i : g.lhs().indices())
        if (b[i].value() == g.alpha(i)) Iprime.add(i);
    if (Iprime.empty())
        throw InternalError("saturate: empty saturated sector set");
    return SaturationResult{HalfSpace(b, Iprime), b, std::move(lambda)};
}

bool is_minimal(const HalfSpace& h, const Cone& c) {
    ConditionFlags f = c.check_conditions(h.apex(), h.sectors());
    return f.C1 && f.C2 && f.C3;
}

} // namespace tropcone
