#include "tropcone/semiring.hpp"

#include <cctype>
#include <sstream>

namespace tropcone {

namespace {

bool is_integer_token(const std::string& s, size_t begin, size_t end, bool allow_sign) {
    size_t i = begin;
    if (i < end && allow_sign && (s[i] == '+' || s[i] == '-')) ++i;
    if (i == end) return false;
    for (; i < end; ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

Rat parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!is_integer_token(text, 0, text.size(), true))
            throw ParseError("invalid rational: '" + text + "'");
    } else {
        if (!is_integer_token(text, 0, slash, true) ||
            !is_integer_token(text, slash + 1, text.size(), false))
            throw ParseError("invalid rational: '" + text + "'");
        if (text.compare(slash + 1, std::string::npos, "0") == 0)
            throw ParseError("invalid rational (zero denominator): '" + text + "'");
    }
    Rat q(text);
    q.canonicalize();
    return q;
}

std::string format_rational(const Rat& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

Scalar parse_scalar(const std::string& text) {
    if (text == "-inf") return Scalar::bottom();
    return Scalar(parse_rational(text));
}

Point::Point(std::vector<Scalar> coords) : coords_(std::move(coords)) {
    if (coords_.size() < 2)
        throw PreconditionError("Point: dimension must be >= 2");
    bool any_finite = false;
    for (const auto& c : coords_) any_finite = any_finite || c.is_finite();
    if (!any_finite)
        throw PreconditionError("Point: all coordinates are bottom");
}

Point Point::unit(int n, int i) {
    std::vector<Scalar> c(n, Scalar::bottom());
    c[i] = Scalar::one();
    return Point(std::move(c));
}

Point Point::finite(std::vector<Rat> coords) {
    std::vector<Scalar> c;
    c.reserve(coords.size());
    for (auto& q : coords) c.emplace_back(std::move(q));
    return Point(std::move(c));
}

bool Point::all_finite() const {
    for (const auto& c : coords_)
        if (c.is_bottom()) return false;
    return true;
}

IndexSet Point::support() const {
    IndexSet s;
    for (int i = 0; i < dim(); ++i)
        if (coords_[i].is_finite()) s.add(i);
    return s;
}

Point Point::normalized() const {
    const Rat* first = nullptr;
    for (const auto& c : coords_)
        if (c.is_finite()) { first = &c.value(); break; }
    std::vector<Scalar> out;
    out.reserve(coords_.size());
    for (const auto& c : coords_)
        out.push_back(c.is_finite() ? Scalar(c.value() - *first) : Scalar::bottom());
    return Point(std::move(out));
}

bool Point::proj_equal(const Point& o) const {
    if (dim() != o.dim()) return false;
    Point a = normalized(), b = o.normalized();
    for (int i = 0; i < dim(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

bool Point::proj_less(const Point& o) const {
    if (dim() != o.dim()) return dim() < o.dim();
    Point a = normalized(), b = o.normalized();
    for (int i = 0; i < dim(); ++i) {
        if (a[i] < b[i]) return true;
        if (b[i] < a[i]) return false;
    }
    return false;
}

std::string Point::str() const {
    std::string s = "(";
    for (int i = 0; i < dim(); ++i) {
        if (i) s += ",";
        s += coords_[i].str();
    }
    return s + ")";
}

Point trop_add(const Point& x, const Point& y) {
    if (x.dim() != y.dim())
        throw PreconditionError("trop_add: dimension mismatch");
    std::vector<Scalar> c;
    c.reserve(x.dim());
    for (int i = 0; i < x.dim(); ++i) c.push_back(trop_add(x[i], y[i]));
    return Point(std::move(c)).normalized();
}

Point scale(const Scalar& lambda, const Point& x) {
    if (lambda.is_bottom())
        throw PreconditionError("scale: bottom scalar would yield the zero vector");
    std::vector<Scalar> c;
    c.reserve(x.dim());
    for (int i = 0; i < x.dim(); ++i) c.push_back(trop_mul(lambda, x[i]));
    return Point(std::move(c));
}

Scalar inner(const Point& x, const Point& y) {
    if (x.dim() != y.dim())
        throw PreconditionError("inner: dimension mismatch");
    Scalar acc = Scalar::bottom();
    for (int i = 0; i < x.dim(); ++i) acc = trop_add(acc, trop_mul(x[i], y[i]));
    return acc;
}

HilbertDist hilbert_distance(const Point& x, const Point& y) {
    if (x.dim() != y.dim())
        throw PreconditionError("hilbert_distance: dimension mismatch");
    if (!(x.support() == y.support())) return HilbertDist::inf();
    bool first = true;
    Rat mx, mn;
    for (int i = 0; i < x.dim(); ++i) {
        if (x[i].is_bottom()) continue;
        Rat d = x[i].value() - y[i].value();
        if (first) { mx = mn = d; first = false; }
        else {
            if (d > mx) mx = d;
            if (d < mn) mn = d;
        }
    }
    return HilbertDist::of(mx - mn);
}

IndexSet argmax_terms(const Point& u, const Point& x, IndexSet K) {
    Scalar best = Scalar::bottom();
    for (int i : K.indices()) best = trop_add(best, trop_mul(u[i], x[i]));
    if (best.is_bottom())
        throw PreconditionError("argmax_terms: all terms are bottom on K");
    IndexSet out;
    for (int i : K.indices())
        if (trop_mul(u[i], x[i]) == best) out.add(i);
    return out;
}

} // namespace tropcone
