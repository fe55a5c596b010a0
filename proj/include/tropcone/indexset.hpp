#pragma once

#include <cstdint>
#include <vector>

#include "tropcone/errors.hpp"

namespace tropcone {

// A subset of [n] = {0, ..., n-1} as a bitmask. Dimensions are capped at 64,
// far above the desk scale this library targets.
class IndexSet {
public:
    IndexSet() = default;
    explicit IndexSet(std::uint64_t bits) : bits_(bits) {}

    static IndexSet full(int n) {
        if (n <= 0 || n > 64) throw PreconditionError("IndexSet: n out of range");
        return IndexSet(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }
    static IndexSet single(int i) { return IndexSet(std::uint64_t{1} << i); }
    static IndexSet from_indices(const std::vector<int>& idx) {
        IndexSet s;
        for (int i : idx) s.add(i);
        return s;
    }

    std::uint64_t bits() const { return bits_; }
    bool empty() const { return bits_ == 0; }
    int size() const { return __builtin_popcountll(bits_); }
    bool contains(int i) const { return (bits_ >> i) & 1; }
    void add(int i) { bits_ |= std::uint64_t{1} << i; }
    void remove(int i) { bits_ &= ~(std::uint64_t{1} << i); }
    bool subset_of(IndexSet other) const { return (bits_ & ~other.bits_) == 0; }
    bool intersects(IndexSet other) const { return (bits_ & other.bits_) != 0; }

    IndexSet operator|(IndexSet o) const { return IndexSet(bits_ | o.bits_); }
    IndexSet operator&(IndexSet o) const { return IndexSet(bits_ & o.bits_); }
    IndexSet minus(IndexSet o) const { return IndexSet(bits_ & ~o.bits_); }
    IndexSet complement(int n) const { return IndexSet(full(n).bits_ & ~bits_); }

    bool operator==(const IndexSet&) const = default;
    // Orders by cardinality first, then by the sorted index list; used as the
    // lexicographic tie-break when picking component representatives.
    bool less_by_size_then_lex(IndexSet o) const {
        if (size() != o.size()) return size() < o.size();
        return lex_less(o);
    }
    bool lex_less(IndexSet o) const {
        std::uint64_t a = bits_, b = o.bits_;
        while (a && b) {
            int ia = __builtin_ctzll(a), ib = __builtin_ctzll(b);
            if (ia != ib) return ia < ib;
            a &= a - 1;
            b &= b - 1;
        }
        return !a && b;
    }

    std::vector<int> indices() const {
        std::vector<int> out;
        for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(__builtin_ctzll(b));
        return out;
    }

private:
    std::uint64_t bits_ = 0;
};

struct IndexSetBitsLess {
    bool operator()(IndexSet a, IndexSet b) const { return a.bits() < b.bits(); }
};

} // namespace tropcone
