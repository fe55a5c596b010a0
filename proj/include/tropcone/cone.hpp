#pragma once

#include <optional>
#include <vector>

#include "tropcone/semiring.hpp"

namespace tropcone {

// The type of a point relative to a cone's generators: per coordinate j, the
// set S_j of generator indices r (0-based) with v^r_j - x_j maximal over all
// coordinates.
struct TypeVector {
    std::vector<std::vector<int>> sectors;  // size n, entries in [0, p)

    bool sector_nonempty_everywhere() const {
        for (const auto& s : sectors)
            if (s.empty()) return false;
        return true;
    }
};

struct Projection {
    Point point;              // the residuated projection onto the cone
    std::vector<Rat> lambda;  // per-generator scaling, relative to the stored
                              // canonical generators and the given representative of a
};

// Per-half-space minimality / vertex conditions evaluated on type_of(c, a).
struct ConditionFlags {
    bool C1 = false;
    bool C2 = false;
    bool C3 = false;
    bool C4 = false;  // only meaningful when j was supplied
    bool C5 = false;  // only meaningful when j was supplied
};

// A real polyhedral cone given by finitely many all-finite generators,
// stored canonically normalized and projectively deduplicated.
class Cone {
public:
    explicit Cone(std::vector<Point> generators);

    int dim() const { return n_; }
    int num_generators() const { return static_cast<int>(generators_.size()); }
    const std::vector<Point>& generators() const { return generators_; }

    Projection project(const Point& a) const;
    bool contains(const Point& x) const;
    std::vector<Point> extreme_generators() const;
    TypeVector type_of(const Point& x) const;
    int cell_dimension(const Point& x) const;
    ConditionFlags check_conditions(const Point& a, IndexSet I,
                                    std::optional<int> j = std::nullopt) const;

private:
    int n_ = 0;
    std::vector<Point> generators_;
};

} // namespace tropcone
