#pragma once

#include "qwalk/scalar.hpp"

#include <cstdint>
#include <optional>

namespace qwalk::modp {

using u64 = std::uint64_t;

inline u64 mulmod(u64 a, u64 b, u64 p)
{
    return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p);
}
inline u64 addmod(u64 a, u64 b, u64 p)
{
    u64 s = a + b;
    return s >= p ? s - p : s;
}
inline u64 submod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }
inline u64 negmod(u64 a, u64 p) { return a == 0 ? 0 : p - a; }

u64 powmod(u64 a, u64 e, u64 p);
inline u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

// i-th prime below 2^62 - 100000, descending; the list is shared and grows on demand.
u64 prime_at(std::size_t i);

// c mod p, or nullopt when p divides the denominator.
std::optional<u64> reduce(const Rational& c, u64 p);

std::optional<u64> sqrtmod(u64 a, u64 p);

} // namespace qwalk::modp
