#include "core/closed_forms.hpp"

#include "core/error.hpp"

#include <algorithm>
#include <string>

namespace dominion {

namespace {

u128 checked_sum(u128 a, u128 b, const char* what) {
    u128 out = 0;
    if (!checked_add(a, b, out)) fail(Errc::overflow, std::string(what) + " exceeds 128 bits");
    return out;
}

} // namespace

FamilyValue path_dominion(int n) {
    if (n < 2) fail(Errc::invalid_argument, "path dominion formula needs n >= 2, got " + std::to_string(n));
    FamilyValue value;
    value.gamma = (n + 2) / 3;
    value.status = ProofStatus::proven;
    value.source = "path dominion theorem";
    const std::uint64_t un = static_cast<std::uint64_t>(n);
    switch (n % 3) {
    case 0: value.zeta = 1; break;
    case 1: value.zeta = (un + 2) * (un + 11) / 18 - 1; break;
    default: value.zeta = un / 3 + 2; break; // ceil(n/3) + 1 with n = 3k+2
    }
    return value;
}

FamilyValue cycle_dominion(int n) {
    if (n < 3) fail(Errc::invalid_argument, "cycle dominion formula needs n >= 3, got " + std::to_string(n));
    FamilyValue value;
    value.gamma = (n + 2) / 3;
    const std::uint64_t un = static_cast<std::uint64_t>(n);
    switch (n % 3) {
    case 0:
        value.zeta = 3;
        value.status = ProofStatus::proven;
        value.source = "cycle dominion corollary";
        break;
    case 1:
        value.zeta = (un * un + 5 * un) / 6;
        value.status = ProofStatus::conjectured;
        value.source = "cycle dominion conjecture";
        break;
    default:
        value.zeta = un;
        value.status = ProofStatus::conjectured;
        value.source = "cycle dominion conjecture";
        break;
    }
    return value;
}

FamilyValue sun_dominion(int n) {
    if (n < 3) fail(Errc::invalid_argument, "sun dominion formula needs n >= 3, got " + std::to_string(n));
    if (n > 64) fail(Errc::capacity, "sun on cycle length " + std::to_string(n) + " exceeds capacity");
    FamilyValue value;
    value.gamma = n;
    value.zeta = u128{1} << n;
    value.status = ProofStatus::proven;
    value.source = "sun dominion proposition";
    return value;
}

int join_gamma(int gamma1, int gamma2) {
    if (gamma1 < 1 || gamma2 < 1)
        fail(Errc::invalid_argument, "join gamma needs positive operand gammas");
    return std::min(gamma1, gamma2) == 1 ? 1 : 2;
}

FamilyValue join_dominion(const Graph& g1, const GammaReport& r1, const Graph& g2,
                          const GammaReport& r2) {
    if (!is_connected(g1) || !is_connected(g2))
        fail(Errc::hypothesis, "join dominion formula requires both operands connected");
    int gamma_lo = r1.gamma;
    int gamma_hi = r2.gamma;
    u128 zeta_lo = r1.zeta;
    u128 zeta_hi = r2.zeta;
    if (gamma_lo > gamma_hi) {
        std::swap(gamma_lo, gamma_hi);
        std::swap(zeta_lo, zeta_hi);
    }
    const u128 cross = static_cast<u128>(g1.vertex_count()) * static_cast<u128>(g2.vertex_count());

    FamilyValue value;
    value.gamma = join_gamma(r1.gamma, r2.gamma);
    value.status = ProofStatus::proven;
    value.source = "join dominion theorem";
    if (gamma_lo == 1) {
        // gamma-sets of the join are the dominating singletons
        value.zeta = gamma_hi == 1 ? checked_sum(zeta_lo, zeta_hi, "join dominion") : zeta_lo;
    } else if (gamma_lo == 2) {
        value.zeta = gamma_hi == 2 ? checked_sum(checked_sum(zeta_lo, zeta_hi, "join dominion"),
                                                 cross, "join dominion")
                                   : checked_sum(zeta_lo, cross, "join dominion");
    } else {
        value.zeta = cross; // only the cross pairs dominate
    }
    return value;
}

u128 iterated_join_dominion(int gamma, u128 zeta, int r) {
    if (gamma != 1)
        fail(Errc::hypothesis, "iterated join formula requires an operand with gamma = 1");
    if (r < 1) fail(Errc::invalid_argument, "iterated join needs r >= 1");
    u128 out = 0;
    if (!checked_mul(static_cast<u128>(r), zeta, out))
        fail(Errc::overflow, "iterated join dominion exceeds 128 bits");
    return out;
}

FamilyValue multipartite_dominion(const std::vector<int>& parts) {
    if (parts.size() < 2)
        fail(Errc::invalid_argument, "complete multipartite formula needs at least 2 parts");
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) fail(Errc::invalid_argument, "every part must have at least 1 vertex");
        if (i > 0 && parts[i - 1] > parts[i])
            fail(Errc::invalid_argument, "parts must be sorted ascending");
    }

    FamilyValue value;
    value.status = ProofStatus::proven;
    value.source = "complete multipartite dominion theorem";
    const auto singletons = static_cast<std::uint64_t>(
        std::count(parts.begin(), parts.end(), 1));
    if (singletons > 0) {
        // any vertex in a size-1 part dominates everything
        value.gamma = 1;
        value.zeta = singletons;
        return value;
    }
    // all parts >= 2: the gamma-sets are the cross pairs plus, for each part
    // of size exactly 2, the part itself
    value.gamma = 2;
    u128 pairs = 0;
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j)
            pairs += static_cast<u128>(parts[i]) * static_cast<u128>(parts[j]);
    pairs += static_cast<u128>(std::count(parts.begin(), parts.end(), 2));
    value.zeta = pairs;
    return value;
}

std::pair<u128, u128> dominion_bounds(int n, int gamma) {
    if (gamma < 1 || gamma > n)
        fail(Errc::invalid_argument, "bounds need 1 <= gamma <= n, got gamma=" +
                                         std::to_string(gamma) + " n=" + std::to_string(n));
    return {u128{1}, binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(gamma))};
}

u128 join_lower_bound(int n1, int n2) {
    return static_cast<u128>(n1) * static_cast<u128>(n2);
}

} // namespace dominion
