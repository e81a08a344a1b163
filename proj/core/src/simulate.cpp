#include "simonq/simulate.hpp"

#include "simonq/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <random>

namespace simonq {

BasisState::BasisState(unsigned qubit_count) : bits_(qubit_count, 0) {}

BasisState BasisState::zeros(const Circuit& circuit) {
    return BasisState(circuit.qubit_count());
}

int BasisState::bit(std::uint32_t qubit) const {
    if (qubit >= bits_.size()) {
        throw ParameterError("qubit " + std::to_string(qubit) + " out of range");
    }
    return bits_[qubit];
}

void BasisState::set_bit(std::uint32_t qubit, int value) {
    if (qubit >= bits_.size()) {
        throw ParameterError("qubit " + std::to_string(qubit) + " out of range");
    }
    if (value != 0 && value != 1) {
        throw ParameterError("bit values must be 0 or 1");
    }
    bits_[qubit] = static_cast<std::uint8_t>(value);
}

void BasisState::set_register(const Circuit& circuit, const std::string& name,
                              const BitWord& word) {
    const Register& reg = circuit.find_register(name);
    if (word.size() != reg.size) {
        throw ParameterError("word of " + std::to_string(word.size()) +
                             " bits does not fit register '" + name + "' of " +
                             std::to_string(reg.size) + " qubits");
    }
    for (unsigned i = 0; i < reg.size; ++i) {
        set_bit(reg.offset + i, word.bit(i));
    }
}

BitWord BasisState::register_word(const Circuit& circuit, const std::string& name) const {
    const Register& reg = circuit.find_register(name);
    BitWord word = BitWord::zero(reg.size);
    for (unsigned i = 0; i < reg.size; ++i) {
        word.set_bit(i, bit(reg.offset + i));
    }
    return word;
}

std::uint64_t BasisState::index() const {
    if (bits_.size() > 64) {
        throw ParameterError("basis index only defined up to 64 qubits");
    }
    std::uint64_t idx = 0;
    for (std::size_t q = 0; q < bits_.size(); ++q) {
        idx |= static_cast<std::uint64_t>(bits_[q]) << q;
    }
    return idx;
}

std::string BasisState::to_string() const {
    std::string s(bits_.size(), '0');
    for (std::size_t q = 0; q < bits_.size(); ++q) {
        s[q] = static_cast<char>('0' + bits_[q]);
    }
    return s;
}

BasisState run_basis(const Circuit& circuit, BasisState input) {
    if (input.size() != circuit.qubit_count()) {
        throw ParameterError("basis state has " + std::to_string(input.size()) +
                             " bits but the circuit has " +
                             std::to_string(circuit.qubit_count()) + " qubits");
    }
    for (const Gate& g : circuit.gates()) {
        switch (g.kind) {
        case GateKind::X:
            input.set_bit(g.qubits[0], input.bit(g.qubits[0]) ^ 1);
            break;
        case GateKind::CNOT:
        case GateKind::Toffoli:
        case GateKind::MCX: {
            bool all = true;
            for (std::uint32_t c : g.controls()) {
                if (!input.bit(c)) {
                    all = false;
                    break;
                }
            }
            if (all) {
                input.set_bit(g.target(), input.bit(g.target()) ^ 1);
            }
            break;
        }
        case GateKind::H:
        case GateKind::MCZ:
            throw UnsupportedGateError(
                to_string(g.kind) +
                " is not classical; use the dense simulator for this circuit");
        }
    }
    return input;
}

StateVector::StateVector(const BasisState& initial) : qubit_count_(initial.size()) {
    if (qubit_count_ > 30) {
        throw ResourceError("refusing a dense vector over " + std::to_string(qubit_count_) +
                            " qubits");
    }
    amps_.assign(std::size_t{1} << qubit_count_, {0.0, 0.0});
    amps_[initial.index()] = {1.0, 0.0};
}

std::complex<double> StateVector::amplitude(const BasisState& state) const {
    if (state.size() != qubit_count_) {
        throw ParameterError("basis state width mismatch");
    }
    return amps_[state.index()];
}

void StateVector::apply(const Gate& gate) {
    const std::size_t dim = amps_.size();
    switch (gate.kind) {
    case GateKind::X: {
        const std::uint64_t mask = std::uint64_t{1} << gate.qubits[0];
        for (std::uint64_t i = 0; i < dim; ++i) {
            if (!(i & mask)) {
                std::swap(amps_[i], amps_[i | mask]);
            }
        }
        break;
    }
    case GateKind::H: {
        const std::uint64_t mask = std::uint64_t{1} << gate.qubits[0];
        const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
        for (std::uint64_t i = 0; i < dim; ++i) {
            if (!(i & mask)) {
                const std::complex<double> a = amps_[i];
                const std::complex<double> b = amps_[i | mask];
                amps_[i] = (a + b) * inv_sqrt2;
                amps_[i | mask] = (a - b) * inv_sqrt2;
            }
        }
        break;
    }
    case GateKind::CNOT:
    case GateKind::Toffoli:
    case GateKind::MCX: {
        std::uint64_t control_mask = 0;
        for (std::uint32_t c : gate.controls()) {
            control_mask |= std::uint64_t{1} << c;
        }
        const std::uint64_t target_mask = std::uint64_t{1} << gate.target();
        for (std::uint64_t i = 0; i < dim; ++i) {
            if ((i & control_mask) == control_mask && !(i & target_mask)) {
                std::swap(amps_[i], amps_[i | target_mask]);
            }
        }
        break;
    }
    case GateKind::MCZ: {
        std::uint64_t mask = 0;
        for (std::uint32_t q : gate.qubits) {
            mask |= std::uint64_t{1} << q;
        }
        for (std::uint64_t i = 0; i < dim; ++i) {
            if ((i & mask) == mask) {
                amps_[i] = -amps_[i];
            }
        }
        break;
    }
    }
}

double StateVector::norm() const {
    double n = 0.0;
    for (const std::complex<double>& a : amps_) {
        n += std::norm(a);
    }
    return std::sqrt(n);
}

const char* const kStatevectorCapEnvVar = "SIMONQ_STATEVECTOR_CAP";

unsigned statevector_qubit_cap() {
    if (const char* env = std::getenv(kStatevectorCapEnvVar)) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end == env || *end != '\0' || v == 0 || v > 30) {
            throw ParameterError(std::string(kStatevectorCapEnvVar) + "='" + env +
                                 "' must be an integer in [1, 30]");
        }
        return static_cast<unsigned>(v);
    }
    return 24;
}

StateVector run_statevector(const Circuit& circuit, const BasisState& input) {
    const unsigned cap = statevector_qubit_cap();
    if (circuit.qubit_count() > cap) {
        throw ResourceError("dense simulation of " + std::to_string(circuit.qubit_count()) +
                            " qubits exceeds the cap of " + std::to_string(cap) +
                            " (set " + std::string(kStatevectorCapEnvVar) +
                            " to raise it; memory grows as 2^qubits)");
    }
    if (input.size() != circuit.qubit_count()) {
        throw ParameterError("basis state has " + std::to_string(input.size()) +
                             " bits but the circuit has " +
                             std::to_string(circuit.qubit_count()) + " qubits");
    }
    StateVector sv(input);
    for (const Gate& g : circuit.gates()) {
        sv.apply(g);
    }
    return sv;
}

Histogram measure_histogram(const StateVector& state, const Circuit& circuit,
                            const std::vector<std::string>& register_names,
                            std::uint64_t shots, std::uint64_t seed) {
    if (register_names.empty()) {
        throw ParameterError("measure_histogram needs at least one register");
    }
    std::vector<std::uint32_t> measured;
    for (const std::string& name : register_names) {
        const Register& reg = circuit.find_register(name);
        for (unsigned i = 0; i < reg.size; ++i) {
            measured.push_back(reg.offset + i);
        }
    }
    if (measured.size() > 32) {
        throw ResourceError("measuring " + std::to_string(measured.size()) +
                            " qubits jointly is beyond the histogram's outcome table");
    }
    // Marginal distribution over the measured qubits.
    const std::size_t outcomes = std::size_t{1} << measured.size();
    std::vector<double> prob(outcomes, 0.0);
    const auto& amps = state.amplitudes();
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        const double p = std::norm(amps[i]);
        if (p == 0.0) {
            continue;
        }
        std::uint64_t o = 0;
        for (std::size_t b = 0; b < measured.size(); ++b) {
            o |= ((i >> measured[b]) & 1u) << b;
        }
        prob[o] += p;
    }

    std::vector<std::uint64_t> counts(outcomes, 0);
    if (shots > 0) {
        // Inverse-CDF sampling with explicit 53-bit uniforms so identical
        // seeds reproduce identical histograms everywhere.
        std::vector<double> cdf(outcomes);
        double acc = 0.0;
        for (std::size_t o = 0; o < outcomes; ++o) {
            acc += prob[o];
            cdf[o] = acc;
        }
        std::mt19937_64 rng(seed);
        for (std::uint64_t s = 0; s < shots; ++s) {
            const double u =
                static_cast<double>(rng() >> 11) * 0x1.0p-53 * acc;
            const auto it = std::lower_bound(cdf.begin(), cdf.end(), u);
            counts[static_cast<std::size_t>(it - cdf.begin())]++;
        }
    }

    Histogram h;
    h.register_names = register_names;
    h.shots = shots;
    for (std::size_t o = 0; o < outcomes; ++o) {
        if (prob[o] <= 1e-12 && counts[o] == 0) {
            continue;
        }
        Histogram::Entry e;
        e.probability = prob[o];
        e.count = counts[o];
        e.bits.assign(measured.size(), '0');
        for (std::size_t b = 0; b < measured.size(); ++b) {
            e.bits[b] = static_cast<char>('0' + ((o >> b) & 1u));
        }
        h.entries.push_back(std::move(e));
    }
    std::sort(h.entries.begin(), h.entries.end(), [](const auto& a, const auto& b) {
        if (a.probability != b.probability) {
            return a.probability > b.probability;
        }
        return a.bits < b.bits;
    });
    return h;
}

} // namespace simonq
