#include "cli.hpp"

#include "simonq/bigcount.hpp"
#include "simonq/circuit.hpp"
#include "simonq/classical.hpp"
#include "simonq/cost.hpp"
#include "simonq/errors.hpp"
#include "simonq/grover.hpp"
#include "simonq/params.hpp"
#include "simonq/simulate.hpp"
#include "simonq/synth.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace simonq::cli {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

// ------------------------------------------------------------ variant input

struct VariantOpts {
    std::string variant;
    std::string reduced;
    std::string z_table_file;
};

void add_variant_options(CLI::App* cmd, VariantOpts& opts) {
    auto* group = cmd->add_option_group("variant selection");
    group->add_option("--variant", opts.variant,
                      "Standard variant id (simon32/64 ... simon128/256, or short 32/64)");
    group->add_option("--reduced", opts.reduced,
                      "Reduced variant spec \"n,m,T,a1,a2,x,r0:r1[:r2],c0:c1:...\" "
                      "(binary round constants)");
    group->require_option(1);
    cmd->add_option("--z-table", opts.z_table_file,
                    "Constant-sequence file overriding the built-in z sequences "
                    "(lines \"<index> <62 bits>\")");
}

CipherParams resolve_params(const VariantOpts& opts) {
    if (!opts.reduced.empty()) {
        return parse_reduced_spec(opts.reduced);
    }
    if (!opts.z_table_file.empty()) {
        return standard_params(opts.variant, load_z_table(opts.z_table_file));
    }
    return standard_params(opts.variant);
}

// --------------------------------------------------------------- file I/O

std::vector<PlainCipherPair> load_pairs(const std::string& path, const CipherParams& params) {
    std::ifstream in(path);
    if (!in) {
        throw FileError("cannot open pair file '" + path + "'");
    }
    std::vector<PlainCipherPair> pairs;
    std::string line;
    unsigned line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream fields(line);
        std::string pt_hex, ct_hex, extra;
        if (!(fields >> pt_hex)) {
            continue; // blank or comment-only line
        }
        if (!(fields >> ct_hex) || (fields >> extra)) {
            throw FileError(path + ":" + std::to_string(line_no) +
                            ": expected exactly \"<hex plaintext> <hex ciphertext>\"");
        }
        try {
            pairs.push_back(PlainCipherPair{parse_block_hex(pt_hex, params.word_size),
                                            parse_block_hex(ct_hex, params.word_size)});
        } catch (const ParameterError& e) {
            throw FileError(path + ":" + std::to_string(line_no) + ": " + e.what());
        }
    }
    if (pairs.empty()) {
        throw FileError(path + ": no plaintext/ciphertext pairs found");
    }
    return pairs;
}

/// Write `text` to `path`, or to `fallback` when path is empty or "-".
void emit(const std::string& path, std::ostream& fallback, const std::string& text) {
    if (path.empty() || path == "-") {
        fallback << text;
        return;
    }
    std::ofstream out(path);
    if (!out) {
        throw FileError("cannot open output file '" + path + "'");
    }
    out << text;
    if (!out.good()) {
        throw FileError("write to '" + path + "' failed");
    }
}

// ----------------------------------------------------------- table helpers

std::string render_markdown_table(const std::vector<std::string>& header,
                                  const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width(header.size());
    for (std::size_t i = 0; i < header.size(); ++i) {
        width[i] = header[i].size();
    }
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            width[i] = std::max(width[i], row[i].size());
        }
    }
    std::ostringstream os;
    auto line = [&](const std::vector<std::string>& cells) {
        os << "|";
        for (std::size_t i = 0; i < header.size(); ++i) {
            const std::string& c = i < cells.size() ? cells[i] : std::string{};
            os << " " << c << std::string(width[i] - c.size(), ' ') << " |";
        }
        os << "\n";
    };
    line(header);
    os << "|";
    for (std::size_t i = 0; i < header.size(); ++i) {
        os << std::string(width[i] + 2, '-') << "|";
    }
    os << "\n";
    for (const auto& row : rows) {
        line(row);
    }
    return os.str();
}

std::string render_csv(const std::vector<std::string>& header,
                       const std::vector<std::vector<std::string>>& rows) {
    std::ostringstream os;
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            os << (i ? "," : "") << cells[i];
        }
        os << "\n";
    };
    line(header);
    for (const auto& row : rows) {
        line(row);
    }
    return os.str();
}

std::string format_probability(double p) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(4) << p;
    return os.str();
}

/// Integral diff-cell values print without a decimal point; absent as "-".
std::string format_cell_value(double v) {
    if (std::isnan(v)) {
        return "-";
    }
    if (v == std::floor(v) && std::abs(v) < 1e15) {
        return std::to_string(static_cast<long long>(v));
    }
    std::ostringstream os;
    os << v;
    return os.str();
}

std::string bigcount_text(const BigCount& c) {
    std::ostringstream os;
    os << c.to_string() << " (2^" << std::fixed << std::setprecision(2)
       << static_cast<double>(c.log2()) << ")";
    return os.str();
}

ordered_json bigcount_json(const BigCount& c) {
    return ordered_json{{"mantissa", static_cast<double>(c.mantissa)},
                        {"exponent", c.exponent},
                        {"log2", static_cast<double>(c.log2())},
                        {"text", c.to_string()}};
}

ordered_json census_json(const Circuit& circuit) {
    const GateCensus counts = census(circuit);
    ordered_json registers = ordered_json::array();
    for (const Register& r : circuit.registers()) {
        registers.push_back(ordered_json{{"name", r.name}, {"size", r.size}});
    }
    auto arity_map = [](const std::map<unsigned, std::uint64_t>& m) {
        ordered_json obj = ordered_json::object();
        for (const auto& [arity, count] : m) {
            obj[std::to_string(arity)] = count;
        }
        return obj;
    };
    return ordered_json{
        {"qubits", circuit.qubit_count()},
        {"registers", registers},
        {"gates",
         ordered_json{{"x", counts.x},
                      {"h", counts.h},
                      {"cnot", counts.cnot},
                      {"toffoli", counts.toffoli},
                      {"mcx_by_controls", arity_map(counts.mcx)},
                      {"mcz_by_controls", arity_map(counts.mcz)}}},
        {"total_gates", counts.total()},
        {"depth",
         ordered_json{{"gate_layers", depth(circuit, DepthMetric::GateLayers)},
                      {"lowered", depth(circuit, DepthMetric::LoweredDepth)},
                      {"lowered_t_depth", depth(circuit, DepthMetric::LoweredTDepth)}}}};
}

// -------------------------------------------------------------- golden data

struct GoldenVector {
    std::string variant;  // canonical id
    std::string key_hex;  // k_0 || ... || k_{m-1}
    std::string pt_hex;   // L || R
    std::string ct_hex;
};

/// Official published test vectors, key rewritten into k_0-first order.
const std::vector<GoldenVector>& golden_vectors() {
    static const std::vector<GoldenVector> table = {
        {"simon32/64", "0100090811101918", "65656877", "c69be9bb"},
        {"simon48/72", "0201000a0908121110", "6120676e696c", "dae5ac292cac"},
        {"simon48/96", "0201000a09081211101a1918", "72696320646e", "6e06a5acf156"},
        {"simon64/96", "030201000b0a090813121110", "6f7220676e696c63", "5ca2e27f111a8fc8"},
        {"simon64/128", "030201000b0a0908131211101b1a1918", "656b696c20646e75",
         "44c8fc20b9dfa07a"},
        {"simon96/96", "0504030201000d0c0b0a0908", "2072616c6c69702065687420",
         "602807a462b469063d8ff082"},
        {"simon96/144", "0504030201000d0c0b0a0908151413121110", "74616874207473756420666f",
         "ecad1c6c451e3f59c5db1ae9"},
        {"simon128/128", "07060504030201000f0e0d0c0b0a0908",
         "63736564207372656c6c657661727420", "49681b1e1e54fe3f65aa832af84e0bbc"},
        {"simon128/192", "07060504030201000f0e0d0c0b0a09081716151413121110",
         "206572656874206e6568772065626972", "c4ac61effcdc0d4f6c9c8d6e2597b85b"},
        {"simon128/256",
         "07060504030201000f0e0d0c0b0a090817161514131211101f1e1d1c1b1a1918",
         "74206e69206d6f6f6d69732061207369", "8d2b5579afc8a3a03bf72a87efe7b868"},
    };
    return table;
}

const GoldenVector* find_golden(const CipherParams& params) {
    for (const GoldenVector& g : golden_vectors()) {
        if (g.variant == params.name) {
            return &g;
        }
    }
    // The worked 3-bit example (key 001 110, block 011 101 -> 011 111):
    // its four-round trace is a frozen reference alongside the official
    // vectors.
    static const GoldenVector reduced6{"reduced-3,2,4,1,2,0,1:2,001:001", "16", "35", "37"};
    if (params.name == reduced6.variant) {
        return &reduced6;
    }
    return nullptr;
}

// --------------------------------------------------------- basis-sim bridge

Block run_cipher_circuit(const Circuit& circuit, const CipherParams& params,
                         const std::vector<BitWord>& key, const Block& plaintext) {
    const CipherRegisters regs = default_cipher_registers(params.key_words);
    BasisState state = BasisState::zeros(circuit);
    for (unsigned w = 0; w < params.key_words; ++w) {
        state.set_register(circuit, regs.key[w], key[w]);
    }
    state.set_register(circuit, regs.left, plaintext.left);
    state.set_register(circuit, regs.right, plaintext.right);
    BasisState out = run_basis(circuit, state);
    return Block{out.register_word(circuit, regs.left),
                 out.register_word(circuit, regs.right)};
}

Circuit drop_gate(const Circuit& circuit, std::uint64_t index) {
    if (index >= circuit.size()) {
        throw ParameterError("--drop-gate index " + std::to_string(index) +
                             " out of range (circuit has " + std::to_string(circuit.size()) +
                             " gates)");
    }
    Circuit out;
    for (const Register& r : circuit.registers()) {
        out.add_register(r.name, r.size);
    }
    for (std::size_t i = 0; i < circuit.size(); ++i) {
        if (i != index) {
            out.append(circuit.gates()[i]);
        }
    }
    return out;
}

// ------------------------------------------------------------- subcommands

struct CryptOpts {
    VariantOpts variant;
    std::string key_hex;
    std::string block_hex;
    std::string output;
};

int cmd_crypt(const CryptOpts& opts, bool decrypting, std::ostream& out) {
    const CipherParams params = resolve_params(opts.variant);
    const std::vector<BitWord> key = parse_key_hex(opts.key_hex, params);
    const Block input = parse_block_hex(opts.block_hex, params.word_size);
    const Block result = decrypting ? decrypt(params, key, input) : encrypt(params, key, input);
    emit(opts.output, out, format_block_hex(result) + "\n");
    return kExitOk;
}

struct SynthOpts {
    VariantOpts variant;
    std::string out_kind = "qasm";
    std::string output;
};

int cmd_synth(const SynthOpts& opts, std::ostream& out) {
    const CipherParams params = resolve_params(opts.variant);
    const Circuit circuit = cipher_circuit(params);
    if (opts.out_kind == "qasm") {
        std::ostringstream os;
        os << "// in-place " << params.name << " encryption: registers k0..k"
           << params.key_words - 1 << " hold the key words, l/r the block halves\n";
        os << to_qasm(circuit);
        emit(opts.output, out, os.str());
    } else {
        ordered_json doc = census_json(circuit);
        doc["name"] = params.name;
        emit(opts.output, out, doc.dump(2) + "\n");
    }
    return kExitOk;
}

struct VerifyOpts {
    VariantOpts variant;
    std::uint64_t draws = 25;
    std::uint64_t seed = 12345;
    std::int64_t drop_gate_index = -1;
};

int cmd_verify(const VerifyOpts& opts, std::ostream& out) {
    const CipherParams params = resolve_params(opts.variant);
    Circuit circuit = cipher_circuit(params);
    if (opts.drop_gate_index >= 0) {
        circuit = drop_gate(circuit, static_cast<std::uint64_t>(opts.drop_gate_index));
        out << "fault injected: dropped gate " << opts.drop_gate_index << "\n";
    }

    auto first_mismatch_bit = [&](const Block& got, const Block& want) {
        for (unsigned i = 0; i < params.word_size; ++i) {
            if (got.left.bit(i) != want.left.bit(i)) {
                return std::string("bit ") + std::to_string(i) + " of 2n-bit block (l[" +
                       std::to_string(i) + "])";
            }
        }
        for (unsigned i = 0; i < params.word_size; ++i) {
            if (got.right.bit(i) != want.right.bit(i)) {
                return std::string("bit ") + std::to_string(params.word_size + i) +
                       " of 2n-bit block (r[" + std::to_string(i) + "])";
            }
        }
        return std::string("no mismatch");
    };

    auto check = [&](const std::vector<BitWord>& key, const Block& pt, const Block& want,
                     const std::string& label) -> bool {
        const Block got = run_cipher_circuit(circuit, params, key, pt);
        if (got == want) {
            return true;
        }
        out << "MISMATCH (" << label << "): key=" << format_key_hex(key)
            << " plaintext=" << format_block_hex(pt) << " circuit=" << format_block_hex(got)
            << " expected=" << format_block_hex(want) << "; first mismatch at "
            << first_mismatch_bit(got, want) << "\n";
        return false;
    };

    // Fixed golden vector first, when one exists for these parameters.
    if (const GoldenVector* g = find_golden(params)) {
        const std::vector<BitWord> key = parse_key_hex(g->key_hex, params);
        const Block pt = parse_block_hex(g->pt_hex, params.word_size);
        const Block want = parse_block_hex(g->ct_hex, params.word_size);
        if (encrypt(params, key, pt) != want) {
            out << "MISMATCH (golden vector, classical): expected ciphertext " << g->ct_hex
                << ", got " << format_block_hex(encrypt(params, key, pt)) << "\n";
            return kExitVerifyFailed;
        }
        if (!check(key, pt, want, "golden vector, circuit")) {
            return kExitVerifyFailed;
        }
        out << "golden vector: ok (" << g->pt_hex << " -> " << g->ct_hex << ")\n";
    } else {
        out << "no golden vector for " << params.name << "; random draws only\n";
    }

    std::mt19937_64 rng(opts.seed);
    const std::uint64_t mask = params.word_size == 64
                                   ? ~std::uint64_t{0}
                                   : (std::uint64_t{1} << params.word_size) - 1;
    auto random_word = [&] { return BitWord(rng() & mask, params.word_size); };
    for (std::uint64_t d = 0; d < opts.draws; ++d) {
        std::vector<BitWord> key;
        for (unsigned w = 0; w < params.key_words; ++w) {
            key.push_back(random_word());
        }
        const Block pt{random_word(), random_word()};
        const Block want = encrypt(params, key, pt);
        if (!check(key, pt, want, "draw " + std::to_string(d + 1))) {
            return kExitVerifyFailed;
        }
    }
    out << "verified " << params.name << ": circuit matches classical encryption on "
        << opts.draws << " random draws\n";
    return kExitOk;
}

struct GroverSynthOpts {
    VariantOpts variant;
    std::string pairs_file;
    std::optional<std::uint64_t> iterations;
    std::optional<std::uint64_t> marked;
    std::string out_kind = "qasm";
    std::string output;
};

int cmd_grover_synth(const GroverSynthOpts& opts, std::ostream& out) {
    const CipherParams params = resolve_params(opts.variant);
    std::vector<PlainCipherPair> pairs = load_pairs(opts.pairs_file, params);
    // Without an explicit count, materialize a single iteration: the
    // nominal count is astronomically large for the standard variants and
    // is the estimator's business, not the synthesizer's.
    std::optional<std::uint64_t> iterations = opts.iterations;
    if (!iterations && !opts.marked) {
        iterations = 1;
    }
    const GroverPlan plan = make_grover_plan(params, std::move(pairs), iterations, opts.marked);
    const Circuit circuit = grover_circuit(plan);
    if (opts.out_kind == "qasm") {
        std::ostringstream os;
        os << "// key search over " << params.name << ": " << plan.instances()
           << " cipher instance(s), " << plan.iterations << " iteration(s), "
           << plan.qubit_count() << " qubits\n";
        os << to_qasm(circuit);
        emit(opts.output, out, os.str());
    } else {
        ordered_json doc = census_json(circuit);
        doc["name"] = "grover-" + params.name;
        doc["plan"] = ordered_json{{"pairs", plan.instances()},
                                   {"iterations", plan.iterations},
                                   {"qubits", plan.qubit_count()}};
        emit(opts.output, out, doc.dump(2) + "\n");
    }
    return kExitOk;
}

struct GroverDemoOpts {
    VariantOpts variant;
    std::vector<std::string> pairs_files;
    std::optional<std::uint64_t> iterations;
    std::optional<std::uint64_t> marked;
    std::uint64_t shots = 1024;
    std::uint64_t seed = 1;
    std::optional<unsigned> cap;
    std::size_t top = 8;
    std::string format = "both";
    std::string output;
};

struct DemoRun {
    std::string pairs_file;
    GroverPlan plan;
    Histogram histogram;
    std::vector<std::string> peaks;
};

std::vector<std::string> peak_set(const Histogram& h) {
    std::vector<std::string> peaks;
    if (h.entries.empty()) {
        return peaks;
    }
    const double threshold = h.entries.front().probability / 2.0;
    for (const auto& e : h.entries) {
        if (e.probability >= threshold) {
            peaks.push_back(e.bits);
        }
    }
    std::sort(peaks.begin(), peaks.end());
    return peaks;
}

int cmd_grover_demo(const GroverDemoOpts& opts, std::ostream& out) {
    const CipherParams params = resolve_params(opts.variant);
    if (opts.cap) {
        setenv(kStatevectorCapEnvVar, std::to_string(*opts.cap).c_str(), 1);
    }

    std::vector<std::string> key_registers;
    for (unsigned w = 0; w < params.key_words; ++w) {
        key_registers.push_back("k" + std::to_string(w));
    }

    std::vector<DemoRun> runs;
    for (const std::string& file : opts.pairs_files) {
        GroverPlan plan = make_grover_plan(params, load_pairs(file, params), opts.iterations,
                                           opts.marked);
        // Check the width before materializing the circuit: an over-cap
        // plan also implies an astronomically large default iteration
        // count, so bail out before either can explode.
        if (plan.qubit_count() > statevector_qubit_cap()) {
            throw ResourceError(
                "the search circuit needs " + std::to_string(plan.qubit_count()) +
                " qubits, above the dense-simulation cap of " +
                std::to_string(statevector_qubit_cap()) + " (use --cap or " +
                kStatevectorCapEnvVar + " to raise it; memory grows as 2^qubits)");
        }
        const Circuit circuit = grover_circuit(plan);
        const StateVector state = run_statevector(circuit, BasisState::zeros(circuit));
        Histogram hist =
            measure_histogram(state, circuit, key_registers, opts.shots, opts.seed);
        std::vector<std::string> peaks = peak_set(hist);
        runs.push_back(DemoRun{file, std::move(plan), std::move(hist), std::move(peaks)});
    }

    std::vector<std::string> intersection;
    if (runs.size() > 1) {
        intersection = runs.front().peaks;
        for (std::size_t i = 1; i < runs.size(); ++i) {
            std::vector<std::string> next;
            std::set_intersection(intersection.begin(), intersection.end(),
                                  runs[i].peaks.begin(), runs[i].peaks.end(),
                                  std::back_inserter(next));
            intersection = std::move(next);
        }
    }

    std::ostringstream os;
    const bool ascii = opts.format == "ascii" || opts.format == "both";
    const bool emit_json = opts.format == "json" || opts.format == "both";

    if (ascii) {
        os << "key search demo: " << params.name << " (k = " << params.key_bits()
           << " key qubits, shots = " << opts.shots << ", seed = " << opts.seed << ")\n";
        for (const DemoRun& run : runs) {
            os << "\nrun on " << run.pairs_file << ": " << run.plan.instances()
               << " pair(s), " << run.plan.iterations << " iteration(s), "
               << run.plan.qubit_count() << " qubits\n";
            const std::size_t shown = std::min(opts.top, run.histogram.entries.size());
            double rest_p = 0.0;
            std::uint64_t rest_c = 0;
            for (std::size_t i = shown; i < run.histogram.entries.size(); ++i) {
                rest_p += run.histogram.entries[i].probability;
                rest_c += run.histogram.entries[i].count;
            }
            for (std::size_t i = 0; i < shown; ++i) {
                const auto& e = run.histogram.entries[i];
                const int bar = static_cast<int>(std::lround(e.probability * 60.0));
                os << "  " << e.bits << " " << std::string(static_cast<std::size_t>(bar), '#')
                   << " p=" << format_probability(e.probability) << " count=" << e.count
                   << "\n";
            }
            if (rest_p > 0 || rest_c > 0) {
                os << "  (" << run.histogram.entries.size() - shown
                   << " more outcomes: p=" << format_probability(rest_p)
                   << " count=" << rest_c << ")\n";
            }
            os << "  top outcomes (bits are k0..k" << params.key_words - 1
               << ", word bit 0 leftmost):\n";
            for (std::size_t i = 0; i < std::min<std::size_t>(2, run.histogram.entries.size());
                 ++i) {
                const auto& e = run.histogram.entries[i];
                os << "    " << i + 1 << ". " << e.bits << " (reversed "
                   << std::string(e.bits.rbegin(), e.bits.rend())
                   << ") p=" << format_probability(e.probability) << " count=" << e.count
                   << "\n";
            }
            os << "  peak set:";
            for (const std::string& p : run.peaks) {
                os << " " << p;
            }
            os << "\n";
        }
        if (runs.size() > 1) {
            os << "\nintersection of peak sets:";
            if (intersection.empty()) {
                os << " (empty)";
            }
            for (const std::string& p : intersection) {
                os << " " << p;
            }
            os << "\n";
            if (intersection.size() == 1) {
                os << "recovered key: " << intersection.front() << "\n";
            }
        }
    }

    if (emit_json) {
        ordered_json doc;
        doc["variant"] = params.name;
        doc["key_bits"] = params.key_bits();
        doc["shots"] = opts.shots;
        doc["seed"] = opts.seed;
        doc["runs"] = ordered_json::array();
        for (const DemoRun& run : runs) {
            ordered_json counts = ordered_json::object();
            ordered_json probabilities = ordered_json::object();
            for (const auto& e : run.histogram.entries) {
                counts[e.bits] = e.count;
                probabilities[e.bits] = e.probability;
            }
            ordered_json top = ordered_json::array();
            for (std::size_t i = 0; i < std::min<std::size_t>(2, run.histogram.entries.size());
                 ++i) {
                const auto& e = run.histogram.entries[i];
                top.push_back(ordered_json{
                    {"key", e.bits},
                    {"key_reversed", std::string(e.bits.rbegin(), e.bits.rend())},
                    {"probability", e.probability},
                    {"count", e.count}});
            }
            doc["runs"].push_back(ordered_json{{"pairs_file", run.pairs_file},
                                               {"pairs", run.plan.instances()},
                                               {"iterations", run.plan.iterations},
                                               {"qubits", run.plan.qubit_count()},
                                               {"counts", counts},
                                               {"probabilities", probabilities},
                                               {"top", top},
                                               {"peaks", run.peaks}});
        }
        if (runs.size() > 1) {
            doc["peak_intersection"] = intersection;
        }
        if (ascii) {
            os << "\n";
        }
        os << doc.dump(2) << "\n";
    }

    emit(opts.output, out, os.str());
    return kExitOk;
}

struct EstimateOpts {
    std::string variant = "all";
    std::string table = "all";
    std::string format = "md";
    std::string output;
};

std::vector<std::string> selected_variants(const std::string& selector) {
    std::vector<std::string> ids;
    if (selector == "all") {
        for (const StandardVariant& v : standard_variants()) {
            ids.push_back(v.id);
        }
    } else {
        ids.push_back(standard_params(selector).name); // canonicalizes + validates
    }
    return ids;
}

int cmd_estimate(const EstimateOpts& opts, std::ostream& out) {
    const std::vector<std::string> ids = selected_variants(opts.variant);
    const bool t3 = opts.table == "3" || opts.table == "all";
    const bool t4 = opts.table == "4" || opts.table == "all";
    const bool t5 = opts.table == "5" || opts.table == "all";

    std::ostringstream os;
    ordered_json doc = ordered_json::object();
    std::vector<std::vector<std::string>> csv_rows;

    for (const std::string& id : ids) {
        const CipherParams params = standard_params(id);
        ordered_json entry = ordered_json::object();
        if (t3) {
            const ResourceEstimate row = cipher_cost_row(params);
            const ResourceEstimate built = cipher_as_built(params);
            if (opts.format == "json") {
                entry["cipher"] = ordered_json{{"not", row.not_count},
                                               {"cnot", row.cnot_count},
                                               {"toffoli", row.toffoli_count},
                                               {"qubits", row.qubits},
                                               {"depth_gate_layers_as_built",
                                                built.full_depth}};
            } else if (opts.format == "csv") {
                auto add = [&](const char* metric, std::uint64_t v) {
                    csv_rows.push_back({"3", id, metric, std::to_string(v)});
                };
                add("not", row.not_count);
                add("cnot", row.cnot_count);
                add("toffoli", row.toffoli_count);
                add("qubits", row.qubits);
                add("depth_gate_layers_as_built", built.full_depth);
            }
        }
        if (t4) {
            const ResourceEstimate row = oracle_cost_row(params);
            if (opts.format == "json") {
                entry["oracle"] = ordered_json{{"pairs", required_pairs(params)},
                                               {"clifford", row.clifford_count},
                                               {"t", row.t_count},
                                               {"t_depth", row.t_depth},
                                               {"full_depth_as_built", row.full_depth},
                                               {"qubits", row.qubits}};
            } else if (opts.format == "csv") {
                auto add = [&](const char* metric, std::uint64_t v) {
                    csv_rows.push_back({"4", id, metric, std::to_string(v)});
                };
                add("pairs", required_pairs(params));
                add("clifford", row.clifford_count);
                add("t", row.t_count);
                add("t_depth", row.t_depth);
                add("full_depth_as_built", row.full_depth);
                add("qubits", row.qubits);
            }
        }
        if (t5) {
            const SearchCosts row = search_cost_row(params);
            if (opts.format == "json") {
                entry["search"] = ordered_json{
                    {"iterations", u128_to_string(row.iterations)},
                    {"clifford", bigcount_json(row.clifford)},
                    {"t", bigcount_json(row.t)},
                    {"t_depth", bigcount_json(row.t_depth)},
                    {"full_depth", bigcount_json(row.full_depth)},
                    {"qubits", row.qubits},
                    {"within_depth_budget", row.within_depth_budget},
                    {"exceeds_depth_budget", row.exceeds_depth_budget}};
            } else if (opts.format == "csv") {
                auto add = [&](const char* metric, const std::string& v) {
                    csv_rows.push_back({"5", id, metric, v});
                };
                add("iterations", u128_to_string(row.iterations));
                add("clifford", row.clifford.to_string());
                add("t", row.t.to_string());
                add("t_depth", row.t_depth.to_string());
                add("full_depth", row.full_depth.to_string());
                add("qubits", std::to_string(row.qubits));
                add("depth_budget", row.exceeds_depth_budget ? "exceeds 2^96" : "within");
            }
        }
        if (opts.format == "json") {
            doc[id] = entry;
        }
    }

    if (opts.format == "md") {
        if (t3) {
            std::vector<std::vector<std::string>> rows;
            for (const std::string& id : ids) {
                const CipherParams params = standard_params(id);
                const ResourceEstimate row = cipher_cost_row(params);
                const ResourceEstimate built = cipher_as_built(params);
                rows.push_back({id, std::to_string(row.not_count),
                                std::to_string(row.cnot_count),
                                std::to_string(row.toffoli_count), std::to_string(row.qubits),
                                std::to_string(built.full_depth)});
            }
            os << "## Cipher circuit resources (table 3)\n\n"
               << render_markdown_table({"variant", "NOT", "CNOT", "Toffoli", "qubits",
                                         "depth (gate layers, as built)"},
                                        rows)
               << "\n";
        }
        if (t4) {
            std::vector<std::vector<std::string>> rows;
            for (const std::string& id : ids) {
                const CipherParams params = standard_params(id);
                const ResourceEstimate row = oracle_cost_row(params);
                rows.push_back({id, std::to_string(required_pairs(params)),
                                std::to_string(row.clifford_count),
                                std::to_string(row.t_count), std::to_string(row.t_depth),
                                std::to_string(row.full_depth), std::to_string(row.qubits)});
            }
            os << "## Grover oracle resources (table 4)\n\n"
               << render_markdown_table({"variant", "pairs", "Clifford", "T", "T-depth",
                                         "full depth (as built)", "qubits"},
                                        rows)
               << "\n";
        }
        if (t5) {
            std::vector<std::vector<std::string>> rows;
            for (const std::string& id : ids) {
                const CipherParams params = standard_params(id);
                const SearchCosts row = search_cost_row(params);
                rows.push_back({id, u128_to_string(row.iterations),
                                bigcount_text(row.clifford), bigcount_text(row.t),
                                bigcount_text(row.t_depth), bigcount_text(row.full_depth),
                                std::to_string(row.qubits),
                                row.exceeds_depth_budget ? "exceeds 2^96" : "within"});
            }
            os << "## Full key-search resources (table 5)\n\n"
               << render_markdown_table({"variant", "iterations", "Clifford", "T", "T-depth",
                                         "full depth", "qubits", "depth budget"},
                                        rows)
               << "\n";
        }
        emit(opts.output, out, os.str());
    } else if (opts.format == "csv") {
        emit(opts.output, out,
             render_csv({"table", "variant", "metric", "value"}, csv_rows));
    } else {
        emit(opts.output, out, doc.dump(2) + "\n");
    }
    return kExitOk;
}

struct DiffOpts {
    std::string variant = "all";
    std::string format = "md";
    std::string output;
};

int cmd_paper_diff(const DiffOpts& opts, std::ostream& out) {
    const std::vector<std::string> ids = selected_variants(opts.variant);

    std::ostringstream os;
    ordered_json doc = ordered_json::array();
    std::vector<std::vector<std::string>> csv_rows;

    for (const std::string& id : ids) {
        const DiffReport report = diff_report(id);
        if (opts.format == "md") {
            std::vector<std::vector<std::string>> rows;
            for (const DiffCell& c : report.cells) {
                rows.push_back({c.table, c.column, format_cell_value(c.as_built),
                                format_cell_value(c.formula), format_cell_value(c.published),
                                c.status(), c.note});
            }
            os << "### " << id << "\n\n"
               << render_markdown_table({"table", "column", "as built", "formula",
                                         "published", "status", "note"},
                                        rows)
               << "\n";
        } else if (opts.format == "csv") {
            for (const DiffCell& c : report.cells) {
                csv_rows.push_back({c.table, c.variant, c.column,
                                    format_cell_value(c.as_built),
                                    format_cell_value(c.formula),
                                    format_cell_value(c.published), c.status()});
            }
        } else {
            ordered_json cells = ordered_json::array();
            for (const DiffCell& c : report.cells) {
                ordered_json cell{{"table", c.table},
                                  {"column", c.column},
                                  {"status", c.status()},
                                  {"note", c.note}};
                cell["as_built"] =
                    c.has_as_built() ? ordered_json(c.as_built) : ordered_json(nullptr);
                cell["formula"] =
                    c.has_formula() ? ordered_json(c.formula) : ordered_json(nullptr);
                cell["published"] =
                    c.has_published() ? ordered_json(c.published) : ordered_json(nullptr);
                cells.push_back(cell);
            }
            doc.push_back(ordered_json{{"variant", id}, {"cells", cells}});
        }
    }

    if (opts.format == "md") {
        emit(opts.output, out, os.str());
    } else if (opts.format == "csv") {
        emit(opts.output, out,
             render_csv({"table", "variant", "column", "as_built", "formula", "published",
                         "status"},
                        csv_rows));
    } else {
        emit(opts.output, out, doc.dump(2) + "\n");
    }
    return kExitOk;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{
        "simonq — reversible SIMON synthesis, quantum key-search assembly,\n"
        "simulation, and resource estimation against the published tables.\n"
        "Exit codes: 0 ok, 2 usage, 3 bad parameters, 4 file error,\n"
        "5 resource limit, 6 verification mismatch."};
    app.require_subcommand(1);

    CryptOpts enc_opts;
    auto* enc = app.add_subcommand("encrypt", "Encrypt one block classically");
    add_variant_options(enc, enc_opts.variant);
    enc->add_option("--key", enc_opts.key_hex, "Key as hex, word order k0 || ... || k_{m-1}")
        ->required();
    enc->add_option("--plaintext", enc_opts.block_hex, "Plaintext block as hex, L then R")
        ->required();
    enc->add_option("--output", enc_opts.output, "Output file (default stdout)");

    CryptOpts dec_opts;
    auto* dec = app.add_subcommand("decrypt", "Decrypt one block classically");
    add_variant_options(dec, dec_opts.variant);
    dec->add_option("--key", dec_opts.key_hex, "Key as hex, word order k0 || ... || k_{m-1}")
        ->required();
    dec->add_option("--ciphertext", dec_opts.block_hex, "Ciphertext block as hex, L then R")
        ->required();
    dec->add_option("--output", dec_opts.output, "Output file (default stdout)");

    SynthOpts synth_opts;
    auto* synth = app.add_subcommand("synth", "Synthesize the reversible cipher circuit");
    add_variant_options(synth, synth_opts.variant);
    synth->add_option("--out", synth_opts.out_kind, "Output kind")
        ->check(CLI::IsMember({"qasm", "json-census"}))
        ->capture_default_str();
    synth->add_option("--output", synth_opts.output, "Output file (default stdout)");

    VerifyOpts verify_opts;
    auto* verify = app.add_subcommand(
        "verify", "Check the synthesized circuit against classical encryption");
    add_variant_options(verify, verify_opts.variant);
    verify->add_option("--draws", verify_opts.draws, "Random key/plaintext draws")
        ->capture_default_str();
    verify->add_option("--seed", verify_opts.seed, "Draw seed")->capture_default_str();
    verify->add_option("--drop-gate", verify_opts.drop_gate_index,
                       "Fault-injection fixture: drop the gate at this index first");

    GroverSynthOpts gsynth_opts;
    auto* gsynth =
        app.add_subcommand("grover-synth", "Assemble the key-search circuit for known pairs");
    add_variant_options(gsynth, gsynth_opts.variant);
    gsynth->add_option("--pairs", gsynth_opts.pairs_file,
                       "Pair file: one \"<hex plaintext> <hex ciphertext>\" per line")
        ->required();
    gsynth->add_option("--iterations", gsynth_opts.iterations,
                       "Search iterations to materialize (default 1)");
    gsynth->add_option("--marked", gsynth_opts.marked,
                       "Expected marked-key count (sets the iteration count when "
                       "--iterations is absent)");
    gsynth->add_option("--out", gsynth_opts.out_kind, "Output kind")
        ->check(CLI::IsMember({"qasm", "json-census"}))
        ->capture_default_str();
    gsynth->add_option("--output", gsynth_opts.output, "Output file (default stdout)");

    GroverDemoOpts demo_opts;
    auto* demo = app.add_subcommand(
        "grover-demo", "Simulate the key search end to end and print histograms");
    add_variant_options(demo, demo_opts.variant);
    demo->add_option("--pairs", demo_opts.pairs_files,
                     "Pair file (repeat for independent runs; the peak-set intersection "
                     "across runs pins the key)")
        ->required();
    demo->add_option("--iterations", demo_opts.iterations,
                     "Iteration override (default: floor(pi/4 * 2^(k/2)), or the "
                     "marked-aware count with --marked)");
    demo->add_option("--marked", demo_opts.marked, "Expected marked-key count");
    demo->add_option("--shots", demo_opts.shots, "Measurement samples per run")
        ->capture_default_str();
    demo->add_option("--seed", demo_opts.seed, "Sampling seed")->capture_default_str();
    demo->add_option("--cap", demo_opts.cap,
                     "Statevector width cap override for this run (qubits)");
    demo->add_option("--top", demo_opts.top, "Chart rows before aggregating the rest")
        ->capture_default_str();
    demo->add_option("--format", demo_opts.format, "Output form")
        ->check(CLI::IsMember({"ascii", "json", "both"}))
        ->capture_default_str();
    demo->add_option("--output", demo_opts.output, "Output file (default stdout)");

    EstimateOpts est_opts;
    auto* est = app.add_subcommand(
        "estimate", "Resource tables for the standard variants (closed forms)");
    est->add_option("--variant", est_opts.variant, "Standard variant id or 'all'")
        ->capture_default_str();
    est->add_option("--table", est_opts.table, "Which table to print")
        ->check(CLI::IsMember({"3", "4", "5", "all"}))
        ->capture_default_str();
    est->add_option("--format", est_opts.format, "Output format")
        ->check(CLI::IsMember({"md", "csv", "json"}))
        ->capture_default_str();
    est->add_option("--output", est_opts.output, "Output file (default stdout)");

    DiffOpts diff_opts;
    auto* diff = app.add_subcommand(
        "paper-diff", "Three-way diff: as-built census vs closed form vs published tables");
    diff->add_option("--variant", diff_opts.variant, "Standard variant id or 'all'")
        ->capture_default_str();
    diff->add_option("--format", diff_opts.format, "Output format")
        ->check(CLI::IsMember({"md", "csv", "json"}))
        ->capture_default_str();
    diff->add_option("--output", diff_opts.output, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (enc->parsed()) {
            return cmd_crypt(enc_opts, false, out);
        }
        if (dec->parsed()) {
            return cmd_crypt(dec_opts, true, out);
        }
        if (synth->parsed()) {
            return cmd_synth(synth_opts, out);
        }
        if (verify->parsed()) {
            return cmd_verify(verify_opts, out);
        }
        if (gsynth->parsed()) {
            return cmd_grover_synth(gsynth_opts, out);
        }
        if (demo->parsed()) {
            return cmd_grover_demo(demo_opts, out);
        }
        if (est->parsed()) {
            return cmd_estimate(est_opts, out);
        }
        if (diff->parsed()) {
            return cmd_paper_diff(diff_opts, out);
        }
        err << "error: no subcommand\n";
        return kExitUsage;
    } catch (const FileError& e) {
        err << "file error: " << e.what() << "\n";
        return kExitFile;
    } catch (const ResourceError& e) {
        err << "resource limit: " << e.what() << "\n";
        return kExitResource;
    } catch (const UnsupportedGateError& e) {
        err << "unsupported gate: " << e.what() << "\n";
        return kExitParameter;
    } catch (const ParameterError& e) {
        err << "parameter error: " << e.what() << "\n";
        return kExitParameter;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}

} // namespace simonq::cli
