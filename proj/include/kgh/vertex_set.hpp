#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

#include "kgh/errors.hpp"

namespace kgh {

/// Largest vertex count handled by the single-word set representation.
inline constexpr int kMaxVertices = 63;

/// A subset of {1..63}. Vertex v occupies bit v-1.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
    VertexSet(std::initializer_list<int> ids) {
        for (int v : ids)
            insert(v);
    }
    explicit VertexSet(const std::vector<int>& ids) {
        for (int v : ids)
            insert(v);
    }

    /// {1..n}
    static constexpr VertexSet full(int n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool contains(int v) const {
        return v >= 1 && v <= kMaxVertices && (bits_ >> (v - 1)) & 1U;
    }
    constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }
    /// Largest member, 0 when empty.
    constexpr int max() const { return bits_ == 0 ? 0 : 64 - std::countl_zero(bits_); }
    /// Smallest member, 0 when empty.
    constexpr int min() const { return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1; }

    void insert(int v) {
        if (v < 1 || v > kMaxVertices)
            throw InputError("vertex id " + std::to_string(v) + " outside 1.." +
                             std::to_string(kMaxVertices));
        bits_ |= std::uint64_t{1} << (v - 1);
    }
    void erase(int v) {
        if (v >= 1 && v <= kMaxVertices)
            bits_ &= ~(std::uint64_t{1} << (v - 1));
    }

    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
    constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }
    constexpr bool operator==(const VertexSet&) const = default;

    class iterator {
    public:
        using value_type = int;
        using difference_type = std::ptrdiff_t;
        using iterator_category = std::forward_iterator_tag;
        constexpr iterator() = default;
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
        constexpr int operator*() const { return std::countr_zero(rest_) + 1; }
        constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
        constexpr iterator operator++(int) { auto t = *this; ++*this; return t; }
        constexpr bool operator==(const iterator&) const = default;
    private:
        std::uint64_t rest_ = 0;
    };
    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

    std::vector<int> to_vector() const { return {begin(), end()}; }

private:
    std::uint64_t bits_ = 0;
};

/// Canonical order: by size, then lexicographically on the sorted member lists.
constexpr bool canonical_less(VertexSet a, VertexSet b) {
    if (a.size() != b.size())
        return a.size() < b.size();
    const std::uint64_t diff = a.bits() ^ b.bits();
    if (diff == 0)
        return false;
    // The set owning the lowest differing element has the smaller list at that position.
    return (a.bits() & (diff & (~diff + 1))) != 0;
}

/// Calls fn(VertexSet) for every k-subset of the given universe, in increasing bit order.
template <typename Fn>
void for_each_k_subset(VertexSet universe, int k, Fn&& fn) {
    std::vector<int> members = universe.to_vector();
    const int m = static_cast<int>(members.size());
    if (k < 0 || k > m)
        return;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        std::uint64_t bits = 0;
        for (int i : idx)
            bits |= std::uint64_t{1} << (members[static_cast<std::size_t>(i)] - 1);
        fn(VertexSet(bits));
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - k + i)
            --i;
        if (i < 0)
            return;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

inline std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

/// ceil(a / b) for a >= 0, b > 0; negative a rounds toward +infinity as well.
constexpr long long ceil_div(long long a, long long b) {
    return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

} // namespace kgh
