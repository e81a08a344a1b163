#pragma once

#include <cstdint>
#include <string>

namespace simonq {

using uint128 = unsigned __int128;

std::string u128_to_string(uint128 value);

/// Magnitude in normalized mantissa * 2^exponent form, for resource counts
/// far beyond 64-bit range (up to ~2^146 here). The mantissa keeps long
/// double precision (>= 18 significant decimal digits on x86-64).
struct BigCount {
    long double mantissa = 0.0L; // in [1, 2) unless the value is 0
    int exponent = 0;

    static BigCount from_u64(std::uint64_t value);
    static BigCount from_u128(uint128 value);

    BigCount operator*(const BigCount& other) const;

    bool is_zero() const { return mantissa == 0.0L; }
    long double log2() const;
    /// "1.273 * 2^46" (mantissa to three decimals, integer exponent).
    std::string to_string() const;
};

/// floor(pi/4 * 2^(k/2)) for even k in [4, 256], computed exactly from a
/// frozen 128-bit floor(pi * 2^126): right-shifting an integer floor
/// preserves the floor, so every even k shares one constant.
uint128 nominal_iterations_exact(unsigned key_bits);

/// floor(sqrt(value)) over the full 128-bit range.
uint128 isqrt_u128(uint128 value);

/// floor(pi^2 * 2^(k-4)) for k in [4, 126], from a frozen floor(pi^2*2^122);
/// combined with isqrt this yields exact floor(pi/4 * sqrt(2^k / s)).
uint128 pi_squared_scaled(unsigned key_bits);

} // namespace simonq
