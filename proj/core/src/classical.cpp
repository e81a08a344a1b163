#include "simonq/classical.hpp"

#include "simonq/errors.hpp"

#include <algorithm>

namespace simonq {

namespace {

void check_key(const CipherParams& params, const std::vector<BitWord>& key) {
    if (key.size() != params.key_words) {
        throw ParameterError("expected " + std::to_string(params.key_words) +
                             " key words, got " + std::to_string(key.size()));
    }
    for (const BitWord& w : key) {
        if (w.size() != params.word_size) {
            throw ParameterError("key word width " + std::to_string(w.size()) +
                                 " does not match word size " +
                                 std::to_string(params.word_size));
        }
    }
}

void check_block(const CipherParams& params, const Block& block) {
    if (block.left.size() != params.word_size || block.right.size() != params.word_size) {
        throw ParameterError("block halves must be " + std::to_string(params.word_size) +
                             "-bit words");
    }
}

Block run_rounds(const CipherParams& params, const std::vector<BitWord>& keys, Block state) {
    for (const BitWord& k : keys) {
        BitWord next_left = state.right ^ round_function(params, state.left) ^ k;
        state.right = state.left;
        state.left = next_left;
    }
    return state;
}

} // namespace

BitWord round_function(const CipherParams& params, const BitWord& x) {
    return (x.rotl(params.and_rotations[0]) & x.rotl(params.and_rotations[1])) ^
           x.rotl(params.xor_rotation);
}

Block round_step(const CipherParams& params, const Block& state, const BitWord& round_key) {
    check_block(params, state);
    if (round_key.size() != params.word_size) {
        throw ParameterError("round key width " + std::to_string(round_key.size()) +
                             " does not match word size " + std::to_string(params.word_size));
    }
    return Block{state.right ^ round_function(params, state.left) ^ round_key, state.left};
}

KeySchedule expand_key(const CipherParams& params, const std::vector<BitWord>& key) {
    params.validate();
    check_key(params, key);
    const unsigned m = params.key_words;
    std::vector<BitWord> ks = key;
    ks.reserve(params.rounds);
    for (unsigned i = 0; i < params.expansions(); ++i) {
        BitWord v = params.round_constants[i] ^ ks[i];
        if (m == 4) {
            // Official four-word recurrence: the bare k_{i+1} plus its
            // rotation, then the two rotations of the newest word.
            v = v ^ ks[i + 1] ^ ks[i + 1].rotr(params.key_rotations[0]) ^
                ks[i + 3].rotr(params.key_rotations[1]) ^
                ks[i + 3].rotr(params.key_rotations[2]);
        } else {
            v = v ^ ks[i + m - 1].rotr(params.key_rotations[0]) ^
                ks[i + m - 1].rotr(params.key_rotations[1]);
        }
        ks.push_back(v);
    }
    return KeySchedule{std::move(ks)};
}

Block encrypt(const CipherParams& params, const std::vector<BitWord>& key,
              const Block& plaintext) {
    return encrypt_with_schedule(params, expand_key(params, key), plaintext);
}

Block encrypt_with_schedule(const CipherParams& params, const KeySchedule& schedule,
                            const Block& plaintext) {
    check_block(params, plaintext);
    return run_rounds(params, schedule.round_keys, plaintext);
}

Block decrypt(const CipherParams& params, const std::vector<BitWord>& key,
              const Block& ciphertext) {
    return decrypt_with_schedule(params, expand_key(params, key), ciphertext);
}

Block decrypt_with_schedule(const CipherParams& params, const KeySchedule& schedule,
                            const Block& ciphertext) {
    check_block(params, ciphertext);
    std::vector<BitWord> reversed(schedule.round_keys.rbegin(), schedule.round_keys.rend());
    Block swapped{ciphertext.right, ciphertext.left};
    Block out = run_rounds(params, reversed, swapped);
    return Block{out.right, out.left};
}

Block parse_block_hex(const std::string& text, unsigned word_size) {
    const unsigned digits_per_word = (word_size + 3) / 4;
    if (text.size() != 2 * digits_per_word) {
        throw ParameterError("block hex must have " + std::to_string(2 * digits_per_word) +
                             " digits for word size " + std::to_string(word_size) + ", got " +
                             std::to_string(text.size()));
    }
    return Block{BitWord::parse_hex(text.substr(0, digits_per_word), word_size),
                 BitWord::parse_hex(text.substr(digits_per_word), word_size)};
}

std::string format_block_hex(const Block& block) {
    return block.left.to_hex() + block.right.to_hex();
}

std::vector<BitWord> parse_key_hex(const std::string& text, const CipherParams& params) {
    const unsigned digits_per_word = (params.word_size + 3) / 4;
    if (text.size() != params.key_words * digits_per_word) {
        throw ParameterError("key hex must have " +
                             std::to_string(params.key_words * digits_per_word) +
                             " digits (k_0 || ... || k_" + std::to_string(params.key_words - 1) +
                             "), got " + std::to_string(text.size()));
    }
    std::vector<BitWord> key;
    key.reserve(params.key_words);
    for (unsigned i = 0; i < params.key_words; ++i) {
        key.push_back(
            BitWord::parse_hex(text.substr(i * digits_per_word, digits_per_word),
                               params.word_size));
    }
    return key;
}

std::string format_key_hex(const std::vector<BitWord>& key) {
    std::string out;
    for (const BitWord& w : key) {
        out += w.to_hex();
    }
    return out;
}

} // namespace simonq
