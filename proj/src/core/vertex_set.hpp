#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace dominion {

inline constexpr int kMaxVertices = 128;

// Subset of {0,...,127} packed into two 64-bit words. Plain value type;
// the owning graph's vertex count bounds which bits are meaningful.
struct VertexSet {
    std::uint64_t w0 = 0;
    std::uint64_t w1 = 0;

    static VertexSet full(int n) {
        VertexSet s;
        if (n >= 64) {
            s.w0 = ~0ull;
            s.w1 = (n == 128) ? ~0ull : ((1ull << (n - 64)) - 1);
        } else {
            s.w0 = (n == 0) ? 0 : ((n == 64) ? ~0ull : ((1ull << n) - 1));
        }
        return s;
    }

    static VertexSet single(int v) {
        VertexSet s;
        s.set(v);
        return s;
    }

    void set(int v) {
        if (v < 64)
            w0 |= 1ull << v;
        else
            w1 |= 1ull << (v - 64);
    }

    void reset(int v) {
        if (v < 64)
            w0 &= ~(1ull << v);
        else
            w1 &= ~(1ull << (v - 64));
    }

    bool test(int v) const {
        return v < 64 ? ((w0 >> v) & 1) : ((w1 >> (v - 64)) & 1);
    }

    int count() const { return std::popcount(w0) + std::popcount(w1); }
    bool none() const { return (w0 | w1) == 0; }

    bool operator==(const VertexSet&) const = default;

    VertexSet operator|(VertexSet o) const { return {w0 | o.w0, w1 | o.w1}; }
    VertexSet operator&(VertexSet o) const { return {w0 & o.w0, w1 & o.w1}; }
    VertexSet& operator|=(VertexSet o) {
        w0 |= o.w0;
        w1 |= o.w1;
        return *this;
    }
    VertexSet minus(VertexSet o) const { return {w0 & ~o.w0, w1 & ~o.w1}; }
    bool subset_of(VertexSet o) const { return (w0 & ~o.w0) == 0 && (w1 & ~o.w1) == 0; }

    // lowest member, or -1 when empty
    int first() const {
        if (w0) return std::countr_zero(w0);
        if (w1) return 64 + std::countr_zero(w1);
        return -1;
    }

    // lowest member >= from, or -1 when none remain
    int next(int from) const {
        if (from < 64) {
            std::uint64_t m = w0 >> from;
            if (m) return from + std::countr_zero(m);
            from = 64;
        }
        if (from < 128) {
            std::uint64_t m = w1 >> (from - 64);
            if (m) return from + std::countr_zero(m);
        }
        return -1;
    }

    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for (int v = first(); v >= 0; v = (v + 1 < 128) ? next(v + 1) : -1) out.push_back(v);
        return out;
    }
};

// lowest index in {0,...,n-1} missing from s, or n when s covers all of them
inline int first_missing(VertexSet s, int n) {
    std::uint64_t m0 = ~s.w0;
    if (m0 && n > 0) {
        int v = std::countr_zero(m0);
        if (v < n) return v;
        return n;
    }
    std::uint64_t m1 = ~s.w1;
    if (m1 && n > 64) {
        int v = 64 + std::countr_zero(m1);
        if (v < n) return v;
    }
    return n;
}

// listing order used throughout: ascending index sequences compared
// lexicographically, so the set owning the lowest differing vertex is smaller
inline bool set_lex_less(VertexSet a, VertexSet b) {
    std::uint64_t d0 = a.w0 ^ b.w0;
    if (d0) return (a.w0 & (d0 & -d0)) != 0;
    std::uint64_t d1 = a.w1 ^ b.w1;
    if (d1) return (a.w1 & (d1 & -d1)) != 0;
    return false;
}

} // namespace dominion
