#pragma once

#include "simonq/circuit.hpp"
#include "simonq/classical.hpp"
#include "simonq/params.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace simonq {

/// One known plaintext/ciphertext pair under the searched-for key.
struct PlainCipherPair {
    Block plaintext;
    Block ciphertext;
};

/// Pairs needed for the expected-unique-key criterion: floor(k/(2n)) + 1.
unsigned required_pairs(const CipherParams& params);

/// floor(pi/4 * 2^(k/2)), the iteration count when the number of marked
/// keys is unknown. Exact for every k <= 128 (the result fits uint64).
std::uint64_t nominal_iterations(unsigned key_bits);

/// floor(pi/4 * sqrt(2^k / s)) for a known marked-key count s >= 1.
std::uint64_t iterations_for_marked(unsigned key_bits, std::uint64_t marked_count);

/// A fully specified key-search instance: the cipher, the pairs the oracle
/// tests (one parallel cipher instance each), and the iteration count.
/// The cost tables use required_pairs(); the builder accepts any pair
/// count >= 1 so that deliberately under-determined searches (which mark
/// several keys) can be assembled too.
struct GroverPlan {
    CipherParams params;
    std::vector<PlainCipherPair> pairs;
    std::uint64_t iterations = 0;

    unsigned instances() const { return static_cast<unsigned>(pairs.size()); }
    /// Qubits of the assembled circuit: 2n per instance, k for the key,
    /// k per fan-out copy (instances beyond the first), plus the phase
    /// qubit: 2nr + rk + 1.
    unsigned qubit_count() const;
};

/// Validates pair shapes and resolves the iteration count: `iterations`
/// wins if set, else the marked-count-aware count, else the nominal count.
GroverPlan make_grover_plan(const CipherParams& params, std::vector<PlainCipherPair> pairs,
                            std::optional<std::uint64_t> iterations = std::nullopt,
                            std::optional<std::uint64_t> marked_count = std::nullopt);

/// The phase-flip oracle on the plan's layout. Expects message registers
/// already loaded with the plaintexts and the phase qubit in |->:
/// fan-out the key to the copies, run every cipher instance in place,
/// X-conjugate the message qubits whose expected ciphertext bit is 0,
/// apply one (2nr)-controlled X onto the phase qubit, undo the
/// conjugation, uncompute the ciphers (exact gate reversal), undo the
/// fan-out. Flips the phase of exactly the key states consistent with
/// every pair; every other qubit is restored.
Circuit oracle_circuit(const GroverPlan& plan);

/// Inversion about the mean over `key_bits` qubits (register "key"):
/// H^k X^k MCZ X^k H^k, realizing -(2|s><s| - I). Requires k >= 2.
Circuit diffusion_circuit(unsigned key_bits);

/// The full search circuit: X-load the plaintexts, prepare the phase qubit
/// with X then H, put the key registers into uniform superposition, then
/// `iterations` repetitions of oracle followed by diffusion over the key
/// qubits.
Circuit grover_circuit(const GroverPlan& plan);

/// sin^2((2j+1) * asin(sqrt(s / 2^k))): success probability after j
/// iterations with s marked keys out of 2^k.
double grover_success_probability(unsigned key_bits, std::uint64_t marked_count,
                                  std::uint64_t iterations);

} // namespace simonq
