#pragma once

#include "simonq/bitword.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace simonq {

/// Full parameterization of a SIMON-style Feistel cipher.
///
/// The standard family is SIMON 2n/mn: block of two n-bit words, key of m
/// n-bit words, `rounds` Feistel rounds with round function
///   F(x) = (S^a1 x & S^a2 x) ^ S^x0 x
/// and key expansion
///   m=2,3: k_{i+m} = c_i ^ k_i ^ S^-r0 k_{i+m-1} ^ S^-r1 k_{i+m-1}
///   m=4:   k_{i+4} = c_i ^ k_i ^ k_{i+1} ^ S^-r0 k_{i+1}
///                        ^ S^-r1 k_{i+3} ^ S^-r2 k_{i+3}
/// where {r...} = key_rotations and c_i = round_constants[i].
/// Reduced variants may override every field.
struct CipherParams {
    std::string name;
    unsigned word_size = 0;                 // n
    unsigned key_words = 0;                 // m, in {2, 3, 4}
    unsigned rounds = 0;                    // T, >= m
    std::array<unsigned, 2> and_rotations{} /* a1, a2 */;
    unsigned xor_rotation = 0;              // x0
    std::vector<unsigned> key_rotations;    // 2 entries for m=2,3; 3 for m=4
    std::vector<BitWord> round_constants;   // exactly T - m words of size n

    unsigned block_bits() const { return 2 * word_size; }
    unsigned key_bits() const { return key_words * word_size; }
    unsigned expansions() const { return rounds - key_words; }

    /// Throws ParameterError unless every structural invariant holds.
    void validate() const;
};

/// One row of the standard-variant table.
struct StandardVariant {
    std::string id;        // "simon32/64", ...
    unsigned word_size;    // n
    unsigned key_words;    // m
    unsigned rounds;       // T
    unsigned z_index;      // which of the five period-62 bit sequences
};

/// The ten standard variants, in block-size order.
const std::vector<StandardVariant>& standard_variants();

/// The five period-62 constant sequences z_0..z_4.
struct ZTable {
    std::array<std::string, 5> sequence; // each exactly 62 chars of '0'/'1'
    void validate() const;
};

/// Built-in copy of the constant sequences.
const ZTable& default_z_table();

/// Load the sequences from a data file (see data/simon_z_sequences.txt):
/// lines "<index> <62 bits>", '#' comments allowed. Throws FileError.
ZTable load_z_table(const std::string& path);

/// Round constants for a standard variant: c_i = (2^n - 4) ^ z[i mod 62],
/// the z bit occupying the least significant position.
std::vector<BitWord> standard_round_constants(unsigned word_size, unsigned count,
                                              const std::string& z_sequence);

/// Parameters for a standard variant id ("simon32/64" or the short "32/64").
CipherParams standard_params(const std::string& id, const ZTable& z = default_z_table());

/// Fully custom reduced variant. Rotation amounts are applied mod n.
CipherParams reduced_params(unsigned word_size, unsigned key_words, unsigned rounds,
                            std::array<unsigned, 2> and_rotations, unsigned xor_rotation,
                            std::vector<unsigned> key_rotations,
                            std::vector<BitWord> round_constants);

/// Parse the compact reduced-variant string
///   "n,m,T,a1,a2,x,r0:r1[:r2],c0:c1:...:c_{T-m-1}"
/// with binary round constants (n characters each); the final field is empty
/// when T == m. Example: "3,2,4,1,2,0,1:2,001:001".
CipherParams parse_reduced_spec(const std::string& text);

/// Render params back into the compact reduced-variant string form.
std::string format_reduced_spec(const CipherParams& params);

} // namespace simonq
