#include "core/oracle.hpp"

#include "core/error.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace dominion {

namespace {

// next subset of the same cardinality in increasing mask order (Gosper)
std::uint64_t next_same_popcount(std::uint64_t mask) {
    const std::uint64_t c = mask & (~mask + 1);
    const std::uint64_t r = mask + c;
    return (((r ^ mask) >> 2) / c) | r;
}

} // namespace

GammaReport brute_force_dominion(const Graph& g, bool materialize) {
    const int n = g.vertex_count();
    if (n > kOracleMaxVertices)
        fail(Errc::capacity, "reference check supports at most " +
                                 std::to_string(kOracleMaxVertices) + " vertices, got " +
                                 std::to_string(n));

    GammaReport report;
    if (materialize) report.sets.emplace();
    if (n == 0) {
        report.zeta = 1;
        if (report.sets) report.sets->push_back(VertexSet{});
        return report;
    }

    std::vector<std::uint64_t> cover(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
        cover[static_cast<std::size_t>(v)] = std::uint64_t{1} << v;
        for (int u = 0; u < n; ++u)
            if (u != v && g.adjacent(u, v)) cover[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    }
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    const auto dominates = [&](std::uint64_t mask) {
        std::uint64_t covered = 0;
        for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
            const int v = std::countr_zero(rest);
            covered |= cover[static_cast<std::size_t>(v)];
        }
        return covered == full;
    };

    for (int k = 1; k <= n; ++k) {
        u128 count = 0;
        for (std::uint64_t mask = (std::uint64_t{1} << k) - 1; mask <= full;
             mask = next_same_popcount(mask)) {
            if (dominates(mask)) {
                ++count;
                if (report.sets) report.sets->push_back(VertexSet{mask, 0});
            }
        }
        if (count != 0) {
            report.gamma = k;
            report.zeta = count;
            break;
        }
    }
    if (report.sets) std::sort(report.sets->begin(), report.sets->end(), set_lex_less);
    return report;
}

} // namespace dominion
