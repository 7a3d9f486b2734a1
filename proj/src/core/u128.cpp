#include "core/u128.hpp"

#include "core/error.hpp"

#include <algorithm>

namespace dominion {

std::string u128_to_string(u128 v) {
    if (v == 0) return "0";
    std::string out;
    while (v > 0) {
        out.push_back(static_cast<char>('0' + static_cast<unsigned>(v % 10)));
        v /= 10;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

bool checked_add(u128 a, u128 b, u128& out) {
    out = a + b;
    return out >= a;
}

bool checked_mul(u128 a, u128 b, u128& out) {
    return !__builtin_mul_overflow(a, b, &out);
}

namespace {

u128 gcd128(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

} // namespace

u128 binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    u128 c = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        // c * (n-k+i) / i is exact; cancel gcds first so the intermediate
        // product never exceeds the final value
        u128 div = i;
        u128 g = gcd128(c, div);
        u128 c_red = c / g;
        div /= g;
        u128 m = (n - k + i) / static_cast<std::uint64_t>(div);
        u128 next;
        if (!checked_mul(c_red, m, next))
            fail(Errc::overflow, "binomial(" + std::to_string(n) + ", " + std::to_string(k) +
                                     ") exceeds 128 bits");
        c = next;
    }
    return c;
}

} // namespace dominion
