#include "simonq/bitword.hpp"
#include "simonq/errors.hpp"

#include <doctest.h>

#include <random>

using simonq::BitWord;
using simonq::ParameterError;

TEST_SUITE("bitword") {

TEST_CASE("construction enforces the 3..64 bit range and the value width") {
    CHECK_NOTHROW(BitWord(0, 3));
    CHECK_NOTHROW(BitWord(7, 3));
    CHECK_NOTHROW(BitWord(~std::uint64_t{0}, 64));
    CHECK_THROWS_AS(BitWord(0, 2), ParameterError);
    CHECK_THROWS_AS(BitWord(0, 65), ParameterError);
    CHECK_THROWS_AS(BitWord(8, 3), ParameterError); // needs 4 bits
}

TEST_CASE("bit 0 is the leftmost (most significant) position") {
    const BitWord w = BitWord::from_bits({1, 0, 1});
    CHECK(w.value() == 5);
    CHECK(w.bit(0) == 1);
    CHECK(w.bit(1) == 0);
    CHECK(w.bit(2) == 1);
    CHECK(w.to_binary() == "101");
    CHECK_THROWS_AS(w.bit(3), ParameterError);

    BitWord z = BitWord::zero(4);
    z.set_bit(0, 1);
    CHECK(z.value() == 8); // leftmost bit has weight 2^(n-1)
    z.set_bit(3, 1);
    CHECK(z.value() == 9);
    z.set_bit(0, 0);
    CHECK(z.value() == 1);
}

TEST_CASE("left rotation moves each bit toward index 0") {
    // (S^j x)(i) = x((i+j) mod n): rotl(1) of 011 is 110.
    CHECK(BitWord::parse_binary("011").rotl(1) == BitWord::parse_binary("110"));
    CHECK(BitWord::parse_binary("011").rotl(2) == BitWord::parse_binary("101"));
    CHECK(BitWord::parse_binary("011").rotl(3) == BitWord::parse_binary("011"));
    CHECK(BitWord::parse_binary("011").rotl(4) == BitWord::parse_binary("110"));
    CHECK(BitWord::parse_binary("0110").rotr(1) == BitWord::parse_binary("0011"));
    // rotr(j) equals rotl(n - j).
    CHECK(BitWord::parse_binary("0110").rotr(1) == BitWord::parse_binary("0110").rotl(3));
}

TEST_CASE("rotations are inverse pairs on random words") {
    std::mt19937_64 rng(7);
    for (unsigned size : {3u, 16u, 24u, 48u, 64u}) {
        const std::uint64_t mask =
            size == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size) - 1;
        for (int i = 0; i < 20; ++i) {
            const BitWord w(rng() & mask, size);
            const unsigned j = static_cast<unsigned>(rng() % (2 * size));
            CHECK(w.rotl(j).rotr(j) == w);
            CHECK(w.rotr(j).rotl(j) == w);
            CHECK(w.rotl(size) == w);
        }
    }
}

TEST_CASE("bitwise operators") {
    const BitWord a = BitWord::parse_binary("0110");
    const BitWord b = BitWord::parse_binary("0011");
    CHECK((a ^ b) == BitWord::parse_binary("0101"));
    CHECK((a & b) == BitWord::parse_binary("0010"));
    CHECK(~a == BitWord::parse_binary("1001"));
    CHECK((a ^ b ^ b) == a);
    CHECK_THROWS_AS(a ^ BitWord::parse_binary("011"), ParameterError);
}

TEST_CASE("hamming weight") {
    CHECK(BitWord::zero(16).hamming_weight() == 0);
    CHECK(BitWord::ones(16).hamming_weight() == 16);
    CHECK(BitWord::parse_binary("01001101").hamming_weight() == 4);
}

TEST_CASE("hex parsing and formatting") {
    CHECK(BitWord::parse_hex("1918", 16).value() == 0x1918);
    CHECK(BitWord(0x1918, 16).to_hex() == "1918");
    CHECK(BitWord(0x5, 3).to_hex() == "5");
    CHECK(BitWord(0x1, 16).to_hex() == "0001");
    CHECK(BitWord::parse_hex("0100090811101918", 64).value() == 0x0100090811101918ull);
    CHECK_THROWS_AS(BitWord::parse_hex("zz", 8), ParameterError);
    CHECK_THROWS_AS(BitWord::parse_hex("123", 8), ParameterError);  // 3 digits for 8 bits
    CHECK_THROWS_AS(BitWord::parse_hex("ff", 7), ParameterError);   // value too wide
}

TEST_CASE("binary parsing round-trips") {
    for (const char* s : {"010", "11111010", "0000000000000001"}) {
        CHECK(BitWord::parse_binary(s).to_binary() == s);
    }
    CHECK_THROWS_AS(BitWord::parse_binary("01x"), ParameterError);
    CHECK_THROWS_AS(BitWord::parse_binary("01"), ParameterError); // below minimum size
}

TEST_CASE("from_bits rejects non-bits and wrong sizes") {
    CHECK(BitWord::from_bits({0, 1, 1, 0}).value() == 6);
    CHECK_THROWS_AS(BitWord::from_bits({1, 2, 0}), ParameterError);
    CHECK_THROWS_AS(BitWord::from_bits({1, 0}), ParameterError);
}

} // TEST_SUITE
