#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "tropcone/errors.hpp"
#include "tropcone/indexset.hpp"

namespace tropcone {

using Rat = mpq_class;

// Text encoding used by every file format: decimal integer or "p/q" with
// q > 0, bottom as "-inf".
Rat parse_rational(const std::string& text);
std::string format_rational(const Rat& q);

// An element of the max-plus semiring: a finite rational or bottom (-inf).
// Bottom is neutral for tropical addition (max) and absorbing for tropical
// multiplication (+).
class Scalar {
public:
    Scalar() : finite_(false) {}                 // bottom
    Scalar(Rat v) : finite_(true), v_(std::move(v)) {}
    Scalar(long v) : finite_(true), v_(v) {}

    static Scalar bottom() { return Scalar(); }
    static Scalar one() { return Scalar(Rat(0)); }

    bool is_bottom() const { return !finite_; }
    bool is_finite() const { return finite_; }
    const Rat& value() const {
        if (!finite_) throw PreconditionError("Scalar: value() on bottom");
        return v_;
    }

    friend Scalar trop_add(const Scalar& a, const Scalar& b) {  // max
        if (a.is_bottom()) return b;
        if (b.is_bottom()) return a;
        return Scalar(a.v_ >= b.v_ ? a.v_ : b.v_);
    }
    friend Scalar trop_mul(const Scalar& a, const Scalar& b) {  // +
        if (a.is_bottom() || b.is_bottom()) return bottom();
        return Scalar(a.v_ + b.v_);
    }
    Scalar neg() const {  // multiplicative inverse of a finite scalar
        if (!finite_) throw PreconditionError("Scalar: neg() on bottom");
        return Scalar(-v_);
    }

    bool operator==(const Scalar& o) const {
        if (finite_ != o.finite_) return false;
        return !finite_ || v_ == o.v_;
    }
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    // bottom compares below every finite value
    bool operator<(const Scalar& o) const {
        if (!finite_) return o.finite_;
        if (!o.finite_) return false;
        return v_ < o.v_;
    }
    bool operator<=(const Scalar& o) const { return *this < o || *this == o; }
    bool operator>(const Scalar& o) const { return o < *this; }
    bool operator>=(const Scalar& o) const { return o <= *this; }

    std::string str() const { return finite_ ? format_rational(v_) : "-inf"; }

private:
    bool finite_;
    Rat v_;
};

Scalar parse_scalar(const std::string& text);

// Hilbert distance result: a finite nonnegative rational or +inf (supports
// differ).
struct HilbertDist {
    bool infinite = false;
    Rat value;  // meaningful iff !infinite

    bool operator==(const HilbertDist& o) const {
        return infinite == o.infinite && (infinite || value == o.value);
    }
    bool operator<=(const HilbertDist& o) const {
        if (o.infinite) return true;
        if (infinite) return false;
        return value <= o.value;
    }
    static HilbertDist inf() { return HilbertDist{true, Rat(0)}; }
    static HilbertDist of(Rat v) { return HilbertDist{false, std::move(v)}; }
};

// A point of the tropical projective space: n >= 2 coordinates, at least one
// finite. Canonical form fixes the first finite coordinate to 0, which gives
// a unique comparable representative per projective class.
class Point {
public:
    Point() = default;
    explicit Point(std::vector<Scalar> coords);

    static Point unit(int n, int i);  // e^i: 0 at i, bottom elsewhere
    static Point finite(std::vector<Rat> coords);

    int dim() const { return static_cast<int>(coords_.size()); }
    const Scalar& operator[](int i) const { return coords_[i]; }
    const std::vector<Scalar>& coords() const { return coords_; }

    bool all_finite() const;
    IndexSet support() const;

    // Canonical projective representative (first finite coordinate = 0).
    Point normalized() const;
    bool proj_equal(const Point& o) const;
    // Total order on canonical representatives; use only for dedup/map keys.
    bool proj_less(const Point& o) const;

    std::string str() const;

private:
    std::vector<Scalar> coords_;
};

Point trop_add(const Point& x, const Point& y);
Point scale(const Scalar& lambda, const Point& x);
Scalar inner(const Point& x, const Point& y);
HilbertDist hilbert_distance(const Point& x, const Point& y);

// { i in K : u_i + x_i attains max over K }, exact ties included.
// Errors if the maximum over K is bottom.
IndexSet argmax_terms(const Point& u, const Point& x, IndexSet K);

} // namespace tropcone
