#pragma once

#include "simonq/bitword.hpp"
#include "simonq/params.hpp"

#include <vector>

namespace simonq {

/// One block: the left and right n-bit halves (L_j, R_j).
struct Block {
    BitWord left;
    BitWord right;

    bool operator==(const Block& other) const = default;
};

/// The expanded sequence of round keys k_0 .. k_{T-1}.
struct KeySchedule {
    std::vector<BitWord> round_keys;
};

/// Round function F(x) = (S^a1 x & S^a2 x) ^ S^x0 x.
BitWord round_function(const CipherParams& params, const BitWord& x);

/// A single Feistel step (L, R) <- (R ^ F(L) ^ k, L).  With an all-zero round
/// key and an all-zero left half this degenerates to a pure swap, since
/// F(0) = 0.
Block round_step(const CipherParams& params, const Block& state, const BitWord& round_key);

/// Expand `key` = [k_0, ..., k_{m-1}] (k_0 is the first round key) to all
/// `rounds` round keys using the recurrence selected by params.key_words.
KeySchedule expand_key(const CipherParams& params, const std::vector<BitWord>& key);

/// T rounds of (L, R) <- (R ^ F(L) ^ k_j, L).
Block encrypt(const CipherParams& params, const std::vector<BitWord>& key,
              const Block& plaintext);
Block encrypt_with_schedule(const CipherParams& params, const KeySchedule& schedule,
                            const Block& plaintext);

/// Inverse: swap halves, run the rounds with reversed keys, swap back.
Block decrypt(const CipherParams& params, const std::vector<BitWord>& key,
              const Block& ciphertext);
Block decrypt_with_schedule(const CipherParams& params, const KeySchedule& schedule,
                            const Block& ciphertext);

/// Parse a concatenated big-endian hex block (left half first) of 2n bits.
Block parse_block_hex(const std::string& text, unsigned word_size);
std::string format_block_hex(const Block& block);

/// Parse a concatenated big-endian hex key k_0 || k_1 || ... || k_{m-1}.
std::vector<BitWord> parse_key_hex(const std::string& text, const CipherParams& params);
std::string format_key_hex(const std::vector<BitWord>& key);

} // namespace simonq
