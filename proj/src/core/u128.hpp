#pragma once

#include <cstdint>
#include <string>

namespace dominion {

// Set counts are kept in unsigned 128-bit integers. Arithmetic that could
// wrap goes through the checked helpers; overflow is reported, never silent.
using u128 = unsigned __int128;

std::string u128_to_string(u128 v);

bool checked_add(u128 a, u128 b, u128& out);
bool checked_mul(u128 a, u128 b, u128& out);

// C(n, k), exact; throws Errc::overflow if it cannot be held in 128 bits.
u128 binomial(std::uint64_t n, std::uint64_t k);

} // namespace dominion
