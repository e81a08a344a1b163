#include "simonq/grover.hpp"

#include "simonq/bigcount.hpp"
#include "simonq/errors.hpp"
#include "simonq/synth.hpp"

#include <cmath>

namespace simonq {

unsigned required_pairs(const CipherParams& params) {
    return params.key_bits() / params.block_bits() + 1;
}

std::uint64_t nominal_iterations(unsigned key_bits) {
    if (key_bits < 4 || key_bits > 128 || (key_bits % 2 != 0 && key_bits > 125)) {
        throw ParameterError("nominal iteration count supports even key widths in [4, 128] "
                             "and odd widths in [5, 125], got " + std::to_string(key_bits) +
                             " (larger searches are estimator-only)");
    }
    const uint128 exact = key_bits % 2 == 0 ? nominal_iterations_exact(key_bits)
                                            : isqrt_u128(pi_squared_scaled(key_bits));
    return static_cast<std::uint64_t>(exact);
}

std::uint64_t iterations_for_marked(unsigned key_bits, std::uint64_t marked_count) {
    if (marked_count == 0) {
        throw ParameterError("marked-key count must be at least 1");
    }
    if (key_bits < 4 || key_bits > 126) {
        throw ParameterError("marked-count-aware iteration count supports key widths in "
                             "[4, 126], got " + std::to_string(key_bits));
    }
    return static_cast<std::uint64_t>(isqrt_u128(pi_squared_scaled(key_bits) / marked_count));
}

unsigned GroverPlan::qubit_count() const {
    const unsigned r = instances();
    return params.block_bits() * r + params.key_bits() * r + 1;
}

GroverPlan make_grover_plan(const CipherParams& params, std::vector<PlainCipherPair> pairs,
                            std::optional<std::uint64_t> iterations,
                            std::optional<std::uint64_t> marked_count) {
    params.validate();
    if (pairs.empty()) {
        throw ParameterError("a key search needs at least one plaintext/ciphertext pair");
    }
    for (const PlainCipherPair& p : pairs) {
        for (const BitWord& w :
             {p.plaintext.left, p.plaintext.right, p.ciphertext.left, p.ciphertext.right}) {
            if (w.size() != params.word_size) {
                throw ParameterError("pair word width " + std::to_string(w.size()) +
                                     " does not match word size " +
                                     std::to_string(params.word_size));
            }
        }
    }
    GroverPlan plan{params, std::move(pairs), 0};
    if (iterations) {
        plan.iterations = *iterations;
    } else if (marked_count) {
        plan.iterations = iterations_for_marked(params.key_bits(), *marked_count);
    } else {
        plan.iterations = nominal_iterations(params.key_bits());
    }
    return plan;
}

namespace {

void declare_plan_registers(Circuit& c, const GroverPlan& plan) {
    const CipherParams& p = plan.params;
    // Key words first, then the per-instance message halves, then the
    // fan-out copies, then the phase qubit; this order fixes the
    // simulators' basis-state layout.
    for (const std::string& name : instance_cipher_registers(p.key_words, 0).key) {
        c.add_register(name, p.word_size);
    }
    for (unsigned i = 0; i < plan.instances(); ++i) {
        const CipherRegisters regs = instance_cipher_registers(p.key_words, i);
        c.add_register(regs.left, p.word_size);
        c.add_register(regs.right, p.word_size);
    }
    for (unsigned i = 1; i < plan.instances(); ++i) {
        for (const std::string& name : instance_cipher_registers(p.key_words, i).key) {
            c.add_register(name, p.word_size);
        }
    }
    c.add_register("phase", 1);
}

void append_key_fanout(Circuit& c, const GroverPlan& plan) {
    const CipherParams& p = plan.params;
    const CipherRegisters original = instance_cipher_registers(p.key_words, 0);
    for (unsigned i = 1; i < plan.instances(); ++i) {
        const CipherRegisters copy = instance_cipher_registers(p.key_words, i);
        for (unsigned w = 0; w < p.key_words; ++w) {
            for (unsigned b = 0; b < p.word_size; ++b) {
                c.cnot(c.qubit(original.key[w], b), c.qubit(copy.key[w], b));
            }
        }
    }
}

/// X on every message qubit whose expected ciphertext bit is 0, so the
/// comparator's controls are all-ones exactly on a full match.
void append_comparator_conjugation(Circuit& c, const GroverPlan& plan) {
    for (unsigned i = 0; i < plan.instances(); ++i) {
        const CipherRegisters regs =
            instance_cipher_registers(plan.params.key_words, i);
        const Block& expect = plan.pairs[i].ciphertext;
        for (unsigned b = 0; b < plan.params.word_size; ++b) {
            if (expect.left.bit(b) == 0) {
                c.x(c.qubit(regs.left, b));
            }
            if (expect.right.bit(b) == 0) {
                c.x(c.qubit(regs.right, b));
            }
        }
    }
}

std::vector<std::uint32_t> message_qubits(const Circuit& c, const GroverPlan& plan) {
    std::vector<std::uint32_t> qs;
    for (unsigned i = 0; i < plan.instances(); ++i) {
        const CipherRegisters regs =
            instance_cipher_registers(plan.params.key_words, i);
        for (unsigned b = 0; b < plan.params.word_size; ++b) {
            qs.push_back(c.qubit(regs.left, b));
        }
        for (unsigned b = 0; b < plan.params.word_size; ++b) {
            qs.push_back(c.qubit(regs.right, b));
        }
    }
    return qs;
}

std::vector<std::uint32_t> key_qubits(const Circuit& c, const CipherParams& params) {
    std::vector<std::uint32_t> qs;
    for (const std::string& name : instance_cipher_registers(params.key_words, 0).key) {
        for (unsigned b = 0; b < params.word_size; ++b) {
            qs.push_back(c.qubit(name, b));
        }
    }
    return qs;
}

void append_oracle(Circuit& c, const GroverPlan& plan) {
    const CipherParams& p = plan.params;
    append_key_fanout(c, plan);
    Circuit forward;
    for (unsigned i = 0; i < plan.instances(); ++i) {
        const CipherRegisters regs = instance_cipher_registers(p.key_words, i);
        Circuit instance;
        declare_cipher_registers(instance, p, regs);
        append_cipher(instance, p, regs);
        forward.append_circuit(instance);
    }
    c.append_circuit(forward);
    append_comparator_conjugation(c, plan);
    c.mcx(message_qubits(c, plan), c.qubit("phase", 0));
    append_comparator_conjugation(c, plan);
    c.append_circuit(inverse(forward));
    append_key_fanout(c, plan);
}

void append_diffusion(Circuit& c, const std::vector<std::uint32_t>& qubits) {
    if (qubits.size() < 2) {
        throw ParameterError("diffusion needs at least two qubits, got " +
                             std::to_string(qubits.size()));
    }
    for (std::uint32_t q : qubits) {
        c.h(q);
    }
    for (std::uint32_t q : qubits) {
        c.x(q);
    }
    c.mcz(qubits);
    for (std::uint32_t q : qubits) {
        c.x(q);
    }
    for (std::uint32_t q : qubits) {
        c.h(q);
    }
}

} // namespace

Circuit oracle_circuit(const GroverPlan& plan) {
    plan.params.validate();
    Circuit c;
    declare_plan_registers(c, plan);
    append_oracle(c, plan);
    return c;
}

Circuit diffusion_circuit(unsigned key_bits) {
    if (key_bits < 2) {
        throw ParameterError("diffusion needs at least two key qubits");
    }
    Circuit c;
    c.add_register("key", key_bits);
    std::vector<std::uint32_t> qs;
    for (unsigned b = 0; b < key_bits; ++b) {
        qs.push_back(c.qubit("key", b));
    }
    append_diffusion(c, qs);
    return c;
}

Circuit grover_circuit(const GroverPlan& plan) {
    plan.params.validate();
    Circuit c;
    declare_plan_registers(c, plan);
    for (unsigned i = 0; i < plan.instances(); ++i) {
        const CipherRegisters regs =
            instance_cipher_registers(plan.params.key_words, i);
        const Block& pt = plan.pairs[i].plaintext;
        for (unsigned b = 0; b < plan.params.word_size; ++b) {
            if (pt.left.bit(b)) {
                c.x(c.qubit(regs.left, b));
            }
            if (pt.right.bit(b)) {
                c.x(c.qubit(regs.right, b));
            }
        }
    }
    c.x(c.qubit("phase", 0));
    c.h(c.qubit("phase", 0));
    const std::vector<std::uint32_t> keys = key_qubits(c, plan.params);
    for (std::uint32_t q : keys) {
        c.h(q);
    }
    for (std::uint64_t j = 0; j < plan.iterations; ++j) {
        append_oracle(c, plan);
        append_diffusion(c, keys);
    }
    return c;
}

double grover_success_probability(unsigned key_bits, std::uint64_t marked_count,
                                  std::uint64_t iterations) {
    if (key_bits >= 64) {
        throw ParameterError("closed-form success probability is for demo-scale key widths");
    }
    const double total = std::ldexp(1.0, static_cast<int>(key_bits));
    if (marked_count == 0 || static_cast<double>(marked_count) > total) {
        throw ParameterError("marked-key count must be in [1, 2^k]");
    }
    const double theta = std::asin(std::sqrt(static_cast<double>(marked_count) / total));
    const double s = std::sin(static_cast<double>(2 * iterations + 1) * theta);
    return s * s;
}

} // namespace simonq
