#include "simonq/bigcount.hpp"

#include "simonq/errors.hpp"

#include <cmath>
#include <sstream>

namespace simonq {

namespace {

// floor(pi * 2^126): dividing an integer floor by a power of two and
// flooring again equals flooring the original product, so one constant
// serves every even key width up to 256.
constexpr uint128 kPiShifted126 =
    (uint128{0xc90fdaa22168c234ull} << 64) | uint128{0xc4c6628b80dc1cd1ull};

// floor(pi^2 * 2^122), for the square-root-based iteration counts.
constexpr uint128 kPiSquaredShifted122 =
    (uint128{0x277a79937c8bbcb4ull} << 64) | uint128{0x95b89b36602306b1ull};

int bit_width_u128(uint128 v) {
    int w = 0;
    while (v) {
        v >>= 1;
        ++w;
    }
    return w;
}

} // namespace

std::string u128_to_string(uint128 value) {
    if (value == 0) {
        return "0";
    }
    std::string digits;
    while (value) {
        digits.push_back(static_cast<char>('0' + static_cast<unsigned>(value % 10)));
        value /= 10;
    }
    return std::string(digits.rbegin(), digits.rend());
}

BigCount BigCount::from_u64(std::uint64_t value) {
    return from_u128(value);
}

BigCount BigCount::from_u128(uint128 value) {
    if (value == 0) {
        return BigCount{0.0L, 0};
    }
    const int width = bit_width_u128(value);
    // long double carries a 64-bit mantissa, enough to take the value
    // exactly up to 2^64 and to ~19 digits beyond.
    long double m = 0.0L;
    for (int i = width - 1; i >= 0; --i) {
        m = m * 2.0L + static_cast<long double>(static_cast<unsigned>((value >> i) & 1));
    }
    return BigCount{std::ldexp(m, -(width - 1)), width - 1};
}

BigCount BigCount::operator*(const BigCount& other) const {
    if (is_zero() || other.is_zero()) {
        return BigCount{0.0L, 0};
    }
    long double m = mantissa * other.mantissa;
    int e = exponent + other.exponent;
    while (m >= 2.0L) {
        m /= 2.0L;
        ++e;
    }
    return BigCount{m, e};
}

long double BigCount::log2() const {
    if (is_zero()) {
        throw ParameterError("log2 of zero count");
    }
    return std::log2(mantissa) + static_cast<long double>(exponent);
}

std::string BigCount::to_string() const {
    if (is_zero()) {
        return "0";
    }
    std::ostringstream os;
    os.precision(3);
    os << std::fixed << static_cast<double>(mantissa) << " * 2^" << exponent;
    return os.str();
}

uint128 nominal_iterations_exact(unsigned key_bits) {
    if (key_bits < 4 || key_bits > 256 || key_bits % 2 != 0) {
        throw ParameterError("exact nominal iteration count needs an even key width in "
                             "[4, 256], got " + std::to_string(key_bits));
    }
    return kPiShifted126 >> (128 - key_bits / 2);
}

uint128 isqrt_u128(uint128 value) {
    if (value == 0) {
        return 0;
    }
    uint128 root = 0;
    uint128 bit = uint128{1} << ((bit_width_u128(value) - 1) / 2 * 2);
    while (bit) {
        const uint128 trial = root + bit;
        if (value >= trial) {
            value -= trial;
            root = (root >> 1) + bit;
        } else {
            root >>= 1;
        }
        bit >>= 2;
    }
    return root;
}

uint128 pi_squared_scaled(unsigned key_bits) {
    if (key_bits < 4 || key_bits > 126) {
        throw ParameterError("pi^2 scaling supports key widths in [4, 126], got " +
                             std::to_string(key_bits));
    }
    return kPiSquaredShifted122 >> (126 - key_bits);
}

} // namespace simonq
