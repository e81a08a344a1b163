#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace simonq {

/// Gate kinds closed under inversion (every kind is self-inverse).
enum class GateKind { X, H, CNOT, Toffoli, MCX, MCZ };

std::string to_string(GateKind kind);

/// A gate over flat qubit indices; controls first, target last.
/// (MCZ is symmetric under permutation; the layout is kept uniform anyway.)
struct Gate {
    GateKind kind;
    std::vector<std::uint32_t> qubits;

    unsigned control_count() const;
    std::uint32_t target() const { return qubits.back(); }
    std::span<const std::uint32_t> controls() const {
        return {qubits.data(), qubits.size() - 1};
    }
};

/// A named, contiguous group of qubits.
struct Register {
    std::string name;
    unsigned size;
    std::uint32_t offset; // flat index of qubit 0 of this register
};

/// A qubit address in register terms (for messages and exports).
struct QubitRef {
    std::string register_name;
    unsigned index;
};

/// Depth accounting modes for the scheduler.
enum class DepthMetric {
    /// Every gate occupies one layer regardless of kind.
    GateLayers,
    /// Clifford+T lowering: X/H/CNOT/CZ cost 1 layer, a Toffoli costs 8,
    /// and a t-controlled X (t >= 3) costs 8*(2t-3), the serial Toffoli
    /// count of its clean-ancilla ladder decomposition. A t-controlled Z
    /// (t >= 2) costs 2 more than the matching X for the basis-change H
    /// pair on its target.
    LoweredDepth,
    /// Same lowering, counting only T layers: Clifford gates cost 0, a
    /// Toffoli costs 4, a t-controlled gate (t >= 3) costs 4*(2t-3).
    LoweredTDepth,
};

/// Aggregated gate counts keyed by kind (and control arity for MCX/MCZ).
struct GateCensus {
    std::uint64_t x = 0;
    std::uint64_t h = 0;
    std::uint64_t cnot = 0;
    std::uint64_t toffoli = 0;
    std::map<unsigned, std::uint64_t> mcx; // control count -> occurrences
    std::map<unsigned, std::uint64_t> mcz;

    std::uint64_t total() const;
    GateCensus& operator+=(const GateCensus& other);
};

/// A gate list over named registers. Register declaration order fixes the
/// flat qubit numbering (register r's qubit i has flat index
/// r.offset + i) and thereby the basis-state bit order of the simulators.
/// Register names must match [a-z][a-z0-9_]* so circuits always export
/// cleanly to OpenQASM 2.0.
class Circuit {
public:
    void add_register(const std::string& name, unsigned size);
    bool has_register(const std::string& name) const;
    const Register& find_register(const std::string& name) const;
    const std::vector<Register>& registers() const { return registers_; }

    unsigned qubit_count() const { return qubit_count_; }
    std::uint32_t qubit(const std::string& register_name, unsigned index) const;
    QubitRef ref(std::uint32_t flat_index) const;

    void x(std::uint32_t q);
    void h(std::uint32_t q);
    void cnot(std::uint32_t control, std::uint32_t target);
    void toffoli(std::uint32_t control_a, std::uint32_t control_b, std::uint32_t target);
    /// Normalizes arity: 1 control -> CNOT, 2 -> Toffoli, >= 3 -> MCX.
    void mcx(std::vector<std::uint32_t> controls, std::uint32_t target);
    /// Phase flip on |1...1> of >= 2 qubits.
    void mcz(std::vector<std::uint32_t> qubits);
    /// Validated append of an arbitrary gate.
    void append(Gate gate);
    /// Appends every gate of `other`; registers of `other` must already
    /// exist here with identical sizes, or are created on first use.
    void append_circuit(const Circuit& other);

    const std::vector<Gate>& gates() const { return gates_; }
    std::size_t size() const { return gates_.size(); }

private:
    std::vector<Register> registers_;
    std::vector<Gate> gates_;
    unsigned qubit_count_ = 0;
};

/// a followed by b on the merged register space. Registers sharing a name
/// must have equal sizes; new registers of b are appended after a's.
Circuit compose(const Circuit& a, const Circuit& b);

/// Reversed gate list (every supported kind is its own inverse).
Circuit inverse(const Circuit& circuit);

GateCensus census(const Circuit& circuit);

/// ASAP-scheduled weighted depth: gates sharing a qubit are serialized,
/// disjoint gates overlap; the weight per gate is set by `metric`.
std::uint64_t depth(const Circuit& circuit, DepthMetric metric);

/// Serial Toffoli count of the clean-ancilla ladder for a t-controlled
/// gate: 2(t-2)+1 for t >= 3 (a Toffoli itself for t = 2).
std::uint64_t ladder_toffoli_count(unsigned control_count);

/// Standalone ladder decomposition of a t-controlled X (t >= 3) over
/// registers "c" (t), "anc" (t-2, assumed |0>), "tgt" (1); 2(t-2)+1
/// Toffoli gates. The OpenQASM exporter uses the same gate ordering.
Circuit mcx_ladder(unsigned control_count);

/// OpenQASM 2.0 text. MCX/MCZ (>= 3 controls) are expanded via the ladder
/// into ccx over a dedicated ancilla register "mcx_anc" sized for the
/// largest arity in the circuit; MCZ is conjugated with h on its last qubit.
std::string to_qasm(const Circuit& circuit);

} // namespace simonq
