#include "simonq/synth.hpp"

#include "simonq/errors.hpp"

namespace simonq {

CipherRegisters default_cipher_registers(unsigned key_words) {
    CipherRegisters regs;
    for (unsigned w = 0; w < key_words; ++w) {
        regs.key.push_back("k" + std::to_string(w));
    }
    regs.left = "l";
    regs.right = "r";
    return regs;
}

CipherRegisters instance_cipher_registers(unsigned key_words, unsigned instance) {
    CipherRegisters regs;
    for (unsigned w = 0; w < key_words; ++w) {
        regs.key.push_back(instance == 0
                               ? "k" + std::to_string(w)
                               : "k" + std::to_string(w) + "c" + std::to_string(instance));
    }
    regs.left = "l" + std::to_string(instance);
    regs.right = "r" + std::to_string(instance);
    return regs;
}

void declare_cipher_registers(Circuit& circuit, const CipherParams& params,
                              const CipherRegisters& regs) {
    if (regs.key.size() != params.key_words) {
        throw ParameterError("layout names " + std::to_string(regs.key.size()) +
                             " key registers but the cipher has " +
                             std::to_string(params.key_words) + " key words");
    }
    for (const std::string& name : regs.key) {
        circuit.add_register(name, params.word_size);
    }
    circuit.add_register(regs.left, params.word_size);
    circuit.add_register(regs.right, params.word_size);
}

namespace {

/// XOR S^shift(source-register word) onto the target register, one CNOT
/// per bit: target[i] ^= source[(i + shift) mod n].
void append_rotated_xor(Circuit& circuit, unsigned word_size, const std::string& source,
                        const std::string& target, unsigned left_shift) {
    for (unsigned i = 0; i < word_size; ++i) {
        circuit.cnot(circuit.qubit(source, (i + left_shift) % word_size),
                     circuit.qubit(target, i));
    }
}

} // namespace

void append_round(Circuit& circuit, const CipherParams& params, unsigned round_index,
                  const CipherRegisters& regs) {
    if (round_index >= params.rounds) {
        throw ParameterError("round index " + std::to_string(round_index) +
                             " out of range for " + std::to_string(params.rounds) + " rounds");
    }
    const unsigned n = params.word_size;
    const bool even = round_index % 2 == 0;
    const std::string& active = even ? regs.left : regs.right;  // holds L_j
    const std::string& target = even ? regs.right : regs.left;  // holds R_j
    const unsigned a1 = params.and_rotations[0] % n;
    const unsigned a2 = params.and_rotations[1] % n;
    if (a1 == a2) {
        // S^a x & S^a x = S^a x: the AND term is linear for this variant.
        append_rotated_xor(circuit, n, active, target, a1);
    } else {
        for (unsigned i = 0; i < n; ++i) {
            circuit.toffoli(circuit.qubit(active, (i + a1) % n),
                            circuit.qubit(active, (i + a2) % n), circuit.qubit(target, i));
        }
    }
    append_rotated_xor(circuit, n, active, target, params.xor_rotation);
    const std::string& key_reg = regs.key[round_index % params.key_words];
    append_rotated_xor(circuit, n, key_reg, target, 0);
}

void append_key_expansion(Circuit& circuit, const CipherParams& params,
                          unsigned expansion_index, const CipherRegisters& regs) {
    if (expansion_index >= params.expansions()) {
        throw ParameterError("expansion index " + std::to_string(expansion_index) +
                             " out of range for " + std::to_string(params.expansions()) +
                             " expansions");
    }
    const unsigned n = params.word_size;
    const unsigned m = params.key_words;
    const std::string& target = regs.key[expansion_index % m]; // holds k_i -> k_{i+m}
    // A right rotation by r reads source bit (i - r) mod n, i.e. a left
    // shift by n - (r mod n) in append_rotated_xor terms.
    auto right_shift = [n](unsigned r) { return (n - (r % n)) % n; };
    if (m == 4) {
        const std::string& second = regs.key[(expansion_index + 1) % m]; // k_{i+1}
        const std::string& newest = regs.key[(expansion_index + 3) % m]; // k_{i+3}
        append_rotated_xor(circuit, n, second, target, 0);
        append_rotated_xor(circuit, n, second, target, right_shift(params.key_rotations[0]));
        append_rotated_xor(circuit, n, newest, target, right_shift(params.key_rotations[1]));
        append_rotated_xor(circuit, n, newest, target, right_shift(params.key_rotations[2]));
    } else {
        const std::string& newest = regs.key[(expansion_index + m - 1) % m]; // k_{i+m-1}
        append_rotated_xor(circuit, n, newest, target, right_shift(params.key_rotations[0]));
        append_rotated_xor(circuit, n, newest, target, right_shift(params.key_rotations[1]));
    }
    const BitWord& constant = params.round_constants[expansion_index];
    for (unsigned i = 0; i < n; ++i) {
        if (constant.bit(i)) {
            circuit.x(circuit.qubit(target, i));
        }
    }
}

void append_cipher(Circuit& circuit, const CipherParams& params, const CipherRegisters& regs) {
    for (unsigned j = 0; j < params.rounds; ++j) {
        append_round(circuit, params, j, regs);
        if (j < params.expansions()) {
            append_key_expansion(circuit, params, j, regs);
        }
    }
    if (params.rounds % 2 == 1) {
        // L_T ended in the `right` register; swap the halves bitwise.
        for (unsigned i = 0; i < params.word_size; ++i) {
            const std::uint32_t a = circuit.qubit(regs.left, i);
            const std::uint32_t b = circuit.qubit(regs.right, i);
            circuit.cnot(a, b);
            circuit.cnot(b, a);
            circuit.cnot(a, b);
        }
    }
}

namespace {

Circuit standalone(const CipherParams& params,
                   void (*step)(Circuit&, const CipherParams&, unsigned,
                                const CipherRegisters&),
                   unsigned index) {
    params.validate();
    Circuit c;
    const CipherRegisters regs = default_cipher_registers(params.key_words);
    declare_cipher_registers(c, params, regs);
    step(c, params, index, regs);
    return c;
}

} // namespace

Circuit round_circuit(const CipherParams& params, unsigned round_index) {
    return standalone(params, &append_round, round_index);
}

Circuit key_expansion_circuit(const CipherParams& params, unsigned expansion_index) {
    return standalone(params, &append_key_expansion, expansion_index);
}

Circuit cipher_circuit(const CipherParams& params) {
    params.validate();
    Circuit c;
    const CipherRegisters regs = default_cipher_registers(params.key_words);
    declare_cipher_registers(c, params, regs);
    append_cipher(c, params, regs);
    return c;
}

} // namespace simonq
