#pragma once

#include "simonq/bitword.hpp"
#include "simonq/circuit.hpp"

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace simonq {

/// A classical assignment of one bit per qubit, in flat qubit order.
class BasisState {
public:
    explicit BasisState(unsigned qubit_count);
    static BasisState zeros(const Circuit& circuit);

    unsigned size() const { return static_cast<unsigned>(bits_.size()); }
    int bit(std::uint32_t qubit) const;
    void set_bit(std::uint32_t qubit, int value);

    /// Write a word into a register: word bit i -> register qubit i.
    void set_register(const Circuit& circuit, const std::string& name, const BitWord& word);
    /// Read a register (3..64 qubits) back as a word.
    BitWord register_word(const Circuit& circuit, const std::string& name) const;

    /// Index into a dense amplitude vector: qubit 0 is the least
    /// significant bit. Requires at most 64 qubits.
    std::uint64_t index() const;
    /// Bits in flat order, qubit 0 first.
    std::string to_string() const;

    bool operator==(const BasisState& other) const = default;

private:
    std::vector<std::uint8_t> bits_;
};

/// Track a basis state through X/CNOT/Toffoli/MCX gates. H and MCZ raise
/// UnsupportedGateError: the classical tier only covers permutation gates.
BasisState run_basis(const Circuit& circuit, BasisState input);

/// Dense amplitude vector, little-endian in the circuit's flat qubit order.
class StateVector {
public:
    explicit StateVector(const BasisState& initial);

    unsigned qubit_count() const { return qubit_count_; }
    const std::vector<std::complex<double>>& amplitudes() const { return amps_; }
    std::complex<double> amplitude(const BasisState& state) const;

    void apply(const Gate& gate);
    double norm() const;

private:
    std::vector<std::complex<double>> amps_;
    unsigned qubit_count_;
};

/// Width limit for dense simulation (qubits). Defaults to 24; the
/// environment variable SIMONQ_STATEVECTOR_CAP overrides it.
unsigned statevector_qubit_cap();
extern const char* const kStatevectorCapEnvVar;

/// Apply the whole circuit; throws ResourceError when the circuit is wider
/// than the cap.
StateVector run_statevector(const Circuit& circuit, const BasisState& input);

/// Measurement statistics over the named registers (jointly, in the given
/// order). Labels concatenate each register's bits with qubit 0 leftmost,
/// matching the bit-array notation of BitWord.
struct Histogram {
    struct Entry {
        std::string bits;
        double probability = 0.0;   // exact marginal probability
        std::uint64_t count = 0;    // sampled count (0 when shots == 0)
    };
    std::vector<std::string> register_names;
    std::uint64_t shots = 0;
    std::vector<Entry> entries; // descending probability, ties lexicographic
};

/// shots == 0 returns exact probabilities only; otherwise `shots` samples
/// are drawn with the given seed (deterministic across runs and platforms).
Histogram measure_histogram(const StateVector& state, const Circuit& circuit,
                            const std::vector<std::string>& register_names,
                            std::uint64_t shots, std::uint64_t seed);

} // namespace simonq
