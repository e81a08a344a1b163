#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace simonq {

/// Fixed-width word of 3..64 bits with the cipher's bit-vector conventions.
///
/// Bit index 0 is the *leftmost* (most significant) bit, matching the
/// x = [x(0), x(1), ..., x(n-1)] array notation used throughout: the word
/// [a_0, ..., a_{n-1}] has integer value a_0 * 2^(n-1) + ... + a_{n-1}.
///
/// S^j denotes the left circular shift by j positions: (S^j x)(i) =
/// x((i + j) mod n). Negative j rotates right.
class BitWord {
public:
    BitWord() : value_(0), size_(3) {}
    BitWord(std::uint64_t value, unsigned size);

    static BitWord zero(unsigned size) { return BitWord(0, size); }
    static BitWord ones(unsigned size);
    /// Build from explicit bits, index 0 first: {1,0,1} -> value 5, size 3.
    static BitWord from_bits(const std::vector<int>& bits);
    static BitWord from_bits(std::initializer_list<int> bits);
    /// Parse a binary string of exactly `size` characters '0'/'1'
    /// (leftmost character = bit 0).
    static BitWord parse_binary(std::string_view text);
    /// Parse a big-endian hex string into a word of `size` bits.
    static BitWord parse_hex(std::string_view text, unsigned size);

    unsigned size() const { return size_; }
    std::uint64_t value() const { return value_; }

    int bit(unsigned i) const;
    void set_bit(unsigned i, int b);

    /// Left circular shift by j (j may exceed the size; applied mod size).
    BitWord rotl(unsigned j) const;
    /// Right circular shift by j.
    BitWord rotr(unsigned j) const;

    unsigned hamming_weight() const;

    BitWord operator^(const BitWord& other) const;
    BitWord operator&(const BitWord& other) const;
    BitWord operator~() const;
    bool operator==(const BitWord& other) const = default;

    /// "b101" style only when useful in messages; plain bits here.
    std::string to_binary() const;
    /// Big-endian hex, zero-padded to ceil(size/4) digits.
    std::string to_hex() const;

private:
    void check_same_size(const BitWord& other, const char* op) const;

    std::uint64_t value_; // bit i of the word sits at integer bit (size-1-i)
    unsigned size_;
};

} // namespace simonq
