#pragma once

#include "simonq/circuit.hpp"
#include "simonq/classical.hpp"
#include "simonq/params.hpp"

#include <string>
#include <vector>

namespace simonq {

/// Register names used by one reversible cipher instance: m key-word
/// registers plus the two block halves, each of `word_size` qubits.
struct CipherRegisters {
    std::vector<std::string> key; // key[w] initially holds key word k_w
    std::string left;             // initially holds L_0
    std::string right;            // initially holds R_0
};

/// The stand-alone layout: "k0".."k{m-1}", "l", "r".
CipherRegisters default_cipher_registers(unsigned key_words);

/// Registers for instance i of a multi-instance assembly: messages "l{i}"
/// and "r{i}"; key registers "k0".."k{m-1}" for instance 0 and fan-out
/// copies "k{w}c{i}" for i >= 1.
CipherRegisters instance_cipher_registers(unsigned key_words, unsigned instance);

/// Declare the instance's registers on `circuit` (in key, left, right order).
void declare_cipher_registers(Circuit& circuit, const CipherParams& params,
                              const CipherRegisters& regs);

/// One Feistel round, in place. Round j reads the half currently holding
/// L_j (register `left` when j is even, `right` when j is odd) and XORs
/// F(L_j) ^ k_j onto the other half: n Toffoli + 2n CNOT (the AND layer
/// degenerates to CNOTs when the two AND-rotations coincide mod n).
/// Round key k_j is read in place from key register (j mod m).
void append_round(Circuit& circuit, const CipherParams& params, unsigned round_index,
                  const CipherRegisters& regs);

/// Key expansion step i, in place: overwrites key register (i mod m)
/// (holding k_i) with k_{i+m} via CNOT rotation layers from the registers
/// holding k_{i+m-1} (and k_{i+1} for m=4), then X gates for the 1-bits of
/// round constant c_i.
void append_key_expansion(Circuit& circuit, const CipherParams& params,
                          unsigned expansion_index, const CipherRegisters& regs);

/// The full in-place cipher: rounds interleaved with key expansions
/// (expansion i directly after round i while i < T-m). When the round
/// count is odd, a 3-CNOT-per-bit-pair swap restores the convention that
/// the `left` register ends holding L_T.
void append_cipher(Circuit& circuit, const CipherParams& params, const CipherRegisters& regs);

/// Stand-alone circuits over the default layout (useful for census checks;
/// round/expansion circuits contain just that step's gates).
Circuit round_circuit(const CipherParams& params, unsigned round_index);
Circuit key_expansion_circuit(const CipherParams& params, unsigned expansion_index);
Circuit cipher_circuit(const CipherParams& params);

} // namespace simonq
