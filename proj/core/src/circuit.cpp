#include "simonq/circuit.hpp"

#include "simonq/errors.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace simonq {

std::string to_string(GateKind kind) {
    switch (kind) {
    case GateKind::X: return "X";
    case GateKind::H: return "H";
    case GateKind::CNOT: return "CNOT";
    case GateKind::Toffoli: return "Toffoli";
    case GateKind::MCX: return "MCX";
    case GateKind::MCZ: return "MCZ";
    }
    return "?";
}

unsigned Gate::control_count() const {
    switch (kind) {
    case GateKind::X:
    case GateKind::H:
        return 0;
    case GateKind::CNOT:
        return 1;
    case GateKind::Toffoli:
        return 2;
    case GateKind::MCX:
    case GateKind::MCZ:
        return static_cast<unsigned>(qubits.size()) - 1;
    }
    return 0;
}

std::uint64_t GateCensus::total() const {
    std::uint64_t n = x + h + cnot + toffoli;
    for (const auto& [arity, count] : mcx) {
        n += count;
    }
    for (const auto& [arity, count] : mcz) {
        n += count;
    }
    return n;
}

GateCensus& GateCensus::operator+=(const GateCensus& other) {
    x += other.x;
    h += other.h;
    cnot += other.cnot;
    toffoli += other.toffoli;
    for (const auto& [arity, count] : other.mcx) {
        mcx[arity] += count;
    }
    for (const auto& [arity, count] : other.mcz) {
        mcz[arity] += count;
    }
    return *this;
}

namespace {

bool valid_register_name(const std::string& name) {
    if (name.empty() || name[0] < 'a' || name[0] > 'z') {
        return false;
    }
    return std::all_of(name.begin(), name.end(), [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
    });
}

} // namespace

void Circuit::add_register(const std::string& name, unsigned size) {
    if (!valid_register_name(name)) {
        throw ParameterError("register name '" + name +
                             "' must match [a-z][a-z0-9_]* for QASM compatibility");
    }
    if (size == 0) {
        throw ParameterError("register '" + name + "' must have at least one qubit");
    }
    if (has_register(name)) {
        throw ParameterError("register '" + name + "' already declared");
    }
    registers_.push_back(Register{name, size, qubit_count_});
    qubit_count_ += size;
}

bool Circuit::has_register(const std::string& name) const {
    return std::any_of(registers_.begin(), registers_.end(),
                       [&](const Register& r) { return r.name == name; });
}

const Register& Circuit::find_register(const std::string& name) const {
    for (const Register& r : registers_) {
        if (r.name == name) {
            return r;
        }
    }
    throw ParameterError("unknown register '" + name + "'");
}

std::uint32_t Circuit::qubit(const std::string& register_name, unsigned index) const {
    const Register& r = find_register(register_name);
    if (index >= r.size) {
        throw ParameterError("qubit index " + std::to_string(index) +
                             " out of range for register '" + register_name + "' of size " +
                             std::to_string(r.size));
    }
    return r.offset + index;
}

QubitRef Circuit::ref(std::uint32_t flat_index) const {
    for (const Register& r : registers_) {
        if (flat_index >= r.offset && flat_index < r.offset + r.size) {
            return QubitRef{r.name, flat_index - r.offset};
        }
    }
    throw ParameterError("flat qubit index " + std::to_string(flat_index) + " out of range");
}

void Circuit::x(std::uint32_t q) {
    append(Gate{GateKind::X, {q}});
}

void Circuit::h(std::uint32_t q) {
    append(Gate{GateKind::H, {q}});
}

void Circuit::cnot(std::uint32_t control, std::uint32_t target) {
    append(Gate{GateKind::CNOT, {control, target}});
}

void Circuit::toffoli(std::uint32_t control_a, std::uint32_t control_b, std::uint32_t target) {
    append(Gate{GateKind::Toffoli, {control_a, control_b, target}});
}

void Circuit::mcx(std::vector<std::uint32_t> controls, std::uint32_t target) {
    if (controls.empty()) {
        throw ParameterError("controlled X needs at least one control");
    }
    controls.push_back(target);
    GateKind kind = controls.size() == 2   ? GateKind::CNOT
                    : controls.size() == 3 ? GateKind::Toffoli
                                           : GateKind::MCX;
    append(Gate{kind, std::move(controls)});
}

void Circuit::mcz(std::vector<std::uint32_t> qubits) {
    if (qubits.size() < 2) {
        throw ParameterError("controlled Z needs at least two qubits");
    }
    append(Gate{GateKind::MCZ, std::move(qubits)});
}

void Circuit::append(Gate gate) {
    const std::size_t want = [&]() -> std::size_t {
        switch (gate.kind) {
        case GateKind::X:
        case GateKind::H:
            return 1;
        case GateKind::CNOT:
            return 2;
        case GateKind::Toffoli:
            return 3;
        case GateKind::MCX:
            return 0; // >= 4 checked below
        case GateKind::MCZ:
            return 0; // >= 2 checked below
        }
        return 0;
    }();
    if (want != 0 && gate.qubits.size() != want) {
        throw ParameterError(to_string(gate.kind) + " takes " + std::to_string(want) +
                             " qubits, got " + std::to_string(gate.qubits.size()));
    }
    if (gate.kind == GateKind::MCX && gate.qubits.size() < 4) {
        throw ParameterError("MCX is reserved for >= 3 controls; use CNOT/Toffoli below that");
    }
    if (gate.kind == GateKind::MCZ && gate.qubits.size() < 2) {
        throw ParameterError("MCZ needs at least two qubits");
    }
    std::unordered_set<std::uint32_t> seen;
    for (std::uint32_t q : gate.qubits) {
        if (q >= qubit_count_) {
            throw ParameterError("qubit index " + std::to_string(q) +
                                 " out of range (circuit has " + std::to_string(qubit_count_) +
                                 " qubits)");
        }
        if (!seen.insert(q).second) {
            throw ParameterError(to_string(gate.kind) + " with duplicate qubit " +
                                 std::to_string(q));
        }
    }
    gates_.push_back(std::move(gate));
}

void Circuit::append_circuit(const Circuit& other) {
    // Map other's flat indices into this circuit, creating missing registers.
    std::vector<std::uint32_t> offset_map(other.registers().size());
    for (std::size_t i = 0; i < other.registers().size(); ++i) {
        const Register& r = other.registers()[i];
        if (has_register(r.name)) {
            const Register& mine = find_register(r.name);
            if (mine.size != r.size) {
                throw ParameterError("register '" + r.name + "' has size " +
                                     std::to_string(mine.size) + " here but " +
                                     std::to_string(r.size) + " in the appended circuit");
            }
            offset_map[i] = mine.offset;
        } else {
            add_register(r.name, r.size);
            offset_map[i] = find_register(r.name).offset;
        }
    }
    auto remap = [&](std::uint32_t q) {
        const QubitRef ref = other.ref(q);
        for (std::size_t i = 0; i < other.registers().size(); ++i) {
            if (other.registers()[i].name == ref.register_name) {
                return offset_map[i] + ref.index;
            }
        }
        throw ParameterError("unmapped qubit"); // unreachable
    };
    for (const Gate& g : other.gates()) {
        Gate copy = g;
        for (std::uint32_t& q : copy.qubits) {
            q = remap(q);
        }
        append(std::move(copy));
    }
}

Circuit compose(const Circuit& a, const Circuit& b) {
    Circuit out;
    for (const Register& r : a.registers()) {
        out.add_register(r.name, r.size);
    }
    for (const Gate& g : a.gates()) {
        out.append(g);
    }
    out.append_circuit(b);
    return out;
}

Circuit inverse(const Circuit& circuit) {
    Circuit out;
    for (const Register& r : circuit.registers()) {
        out.add_register(r.name, r.size);
    }
    for (auto it = circuit.gates().rbegin(); it != circuit.gates().rend(); ++it) {
        out.append(*it);
    }
    return out;
}

GateCensus census(const Circuit& circuit) {
    GateCensus c;
    for (const Gate& g : circuit.gates()) {
        switch (g.kind) {
        case GateKind::X: ++c.x; break;
        case GateKind::H: ++c.h; break;
        case GateKind::CNOT: ++c.cnot; break;
        case GateKind::Toffoli: ++c.toffoli; break;
        case GateKind::MCX: ++c.mcx[g.control_count()]; break;
        case GateKind::MCZ: ++c.mcz[g.control_count()]; break;
        }
    }
    return c;
}

namespace {

std::uint64_t gate_weight(const Gate& g, DepthMetric metric) {
    if (metric == DepthMetric::GateLayers) {
        return 1;
    }
    const bool t_only = metric == DepthMetric::LoweredTDepth;
    switch (g.kind) {
    case GateKind::X:
    case GateKind::H:
    case GateKind::CNOT:
        return t_only ? 0 : 1;
    case GateKind::Toffoli:
        return t_only ? 4 : 8;
    case GateKind::MCX:
        return (t_only ? 4 : 8) * ladder_toffoli_count(g.control_count());
    case GateKind::MCZ: {
        const unsigned t = g.control_count();
        if (t == 1) {
            return t_only ? 0 : 1; // CZ is Clifford
        }
        // Costed as the matching MCX conjugated by H on the target.
        return (t_only ? 4 : 8) * ladder_toffoli_count(t) + (t_only ? 0 : 2);
    }
    }
    return 0;
}

} // namespace

std::uint64_t depth(const Circuit& circuit, DepthMetric metric) {
    std::vector<std::uint64_t> ready(circuit.qubit_count(), 0);
    std::uint64_t total = 0;
    for (const Gate& g : circuit.gates()) {
        std::uint64_t start = 0;
        for (std::uint32_t q : g.qubits) {
            start = std::max(start, ready[q]);
        }
        const std::uint64_t finish = start + gate_weight(g, metric);
        for (std::uint32_t q : g.qubits) {
            ready[q] = finish;
        }
        total = std::max(total, finish);
    }
    return total;
}

std::uint64_t ladder_toffoli_count(unsigned control_count) {
    if (control_count < 2) {
        throw ParameterError("ladder decomposition applies to >= 2 controls");
    }
    if (control_count == 2) {
        return 1;
    }
    return 2 * (static_cast<std::uint64_t>(control_count) - 2) + 1;
}

namespace {

/// The V-chain triples (control, control, target) for a t-controlled X with
/// controls c[0..t-1], ancillas anc[0..t-3] and final target `target`.
std::vector<std::array<std::uint32_t, 3>> vchain_triples(std::span<const std::uint32_t> controls,
                                                         std::uint32_t target,
                                                         std::span<const std::uint32_t> ancillas) {
    const std::size_t t = controls.size();
    std::vector<std::array<std::uint32_t, 3>> triples;
    triples.reserve(2 * (t - 2) + 1);
    // Forward ladder: anc[j] accumulates the AND of the first j+2 controls.
    triples.push_back({controls[0], controls[1], ancillas[0]});
    for (std::size_t j = 1; j + 2 < t; ++j) {
        triples.push_back({controls[j + 1], ancillas[j - 1], ancillas[j]});
    }
    triples.push_back({controls[t - 1], ancillas[t - 3], target});
    // Uncompute the ladder.
    for (std::size_t j = t - 3; j >= 1; --j) {
        triples.push_back({controls[j + 1], ancillas[j - 1], ancillas[j]});
    }
    triples.push_back({controls[0], controls[1], ancillas[0]});
    return triples;
}

} // namespace

Circuit mcx_ladder(unsigned control_count) {
    if (control_count < 3) {
        throw ParameterError("mcx_ladder expects >= 3 controls");
    }
    Circuit c;
    c.add_register("c", control_count);
    c.add_register("anc", control_count - 2);
    c.add_register("tgt", 1);
    std::vector<std::uint32_t> controls;
    for (unsigned i = 0; i < control_count; ++i) {
        controls.push_back(c.qubit("c", i));
    }
    std::vector<std::uint32_t> ancillas;
    for (unsigned i = 0; i + 2 < control_count; ++i) {
        ancillas.push_back(c.qubit("anc", i));
    }
    for (const auto& [a, b, t] : vchain_triples(controls, c.qubit("tgt", 0), ancillas)) {
        c.toffoli(a, b, t);
    }
    return c;
}

std::string to_qasm(const Circuit& circuit) {
    unsigned max_controls = 0;
    for (const Gate& g : circuit.gates()) {
        if (g.kind == GateKind::MCX || g.kind == GateKind::MCZ) {
            max_controls = std::max(max_controls, g.control_count());
        }
    }
    const unsigned ancilla_count = max_controls >= 3 ? max_controls - 2 : 0;

    std::ostringstream os;
    os << "OPENQASM 2.0;\n";
    os << "include \"qelib1.inc\";\n";
    for (const Register& r : circuit.registers()) {
        os << "qreg " << r.name << "[" << r.size << "];\n";
    }
    if (ancilla_count > 0) {
        os << "qreg mcx_anc[" << ancilla_count << "];\n";
    }
    auto q = [&](std::uint32_t flat) {
        const QubitRef ref = circuit.ref(flat);
        return ref.register_name + "[" + std::to_string(ref.index) + "]";
    };
    auto emit_expanded = [&](const Gate& g, std::uint32_t target) {
        // Ancilla indices are symbolic (they live in the extra register).
        std::vector<std::string> anc;
        for (unsigned i = 0; i + 2 < g.control_count(); ++i) {
            anc.push_back("mcx_anc[" + std::to_string(i) + "]");
        }
        const auto controls = g.controls();
        const unsigned t = g.control_count();
        std::vector<std::array<std::string, 3>> triples;
        triples.push_back({q(controls[0]), q(controls[1]), anc[0]});
        for (unsigned j = 1; j + 2 < t; ++j) {
            triples.push_back({q(controls[j + 1]), anc[j - 1], anc[j]});
        }
        triples.push_back({q(controls[t - 1]), anc[t - 3], q(target)});
        for (unsigned j = t - 3; j >= 1; --j) {
            triples.push_back({q(controls[j + 1]), anc[j - 1], anc[j]});
        }
        triples.push_back({q(controls[0]), q(controls[1]), anc[0]});
        for (const auto& [a, b, tg] : triples) {
            os << "ccx " << a << "," << b << "," << tg << ";\n";
        }
    };
    for (const Gate& g : circuit.gates()) {
        switch (g.kind) {
        case GateKind::X:
            os << "x " << q(g.qubits[0]) << ";\n";
            break;
        case GateKind::H:
            os << "h " << q(g.qubits[0]) << ";\n";
            break;
        case GateKind::CNOT:
            os << "cx " << q(g.qubits[0]) << "," << q(g.qubits[1]) << ";\n";
            break;
        case GateKind::Toffoli:
            os << "ccx " << q(g.qubits[0]) << "," << q(g.qubits[1]) << "," << q(g.qubits[2])
               << ";\n";
            break;
        case GateKind::MCX:
            emit_expanded(g, g.target());
            break;
        case GateKind::MCZ:
            if (g.control_count() == 1) {
                os << "cz " << q(g.qubits[0]) << "," << q(g.qubits[1]) << ";\n";
            } else if (g.control_count() == 2) {
                os << "h " << q(g.target()) << ";\n";
                os << "ccx " << q(g.qubits[0]) << "," << q(g.qubits[1]) << ","
                   << q(g.qubits[2]) << ";\n";
                os << "h " << q(g.target()) << ";\n";
            } else {
                os << "h " << q(g.target()) << ";\n";
                emit_expanded(g, g.target());
                os << "h " << q(g.target()) << ";\n";
            }
            break;
        }
    }
    return os.str();
}

} // namespace simonq
