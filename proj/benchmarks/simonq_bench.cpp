#include "simonq/circuit.hpp"
#include "simonq/classical.hpp"
#include "simonq/cost.hpp"
#include "simonq/grover.hpp"
#include "simonq/params.hpp"
#include "simonq/simulate.hpp"
#include "simonq/synth.hpp"

#include <benchmark/benchmark.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace {

using namespace simonq;

const CipherParams& variant(const std::string& id) {
    static std::map<std::string, CipherParams> cache;
    auto it = cache.find(id);
    if (it == cache.end()) {
        it = cache.emplace(id, standard_params(id)).first;
    }
    return it->second;
}

void bm_classical_encrypt(benchmark::State& state, const std::string& id) {
    const CipherParams& p = variant(id);
    std::vector<BitWord> key;
    for (unsigned w = 0; w < p.key_words; ++w) {
        key.push_back(BitWord(w + 1, p.word_size));
    }
    const Block pt{BitWord(0x1234 & ((1ull << p.word_size) - 1), p.word_size),
                   BitWord(0x5678 & ((1ull << p.word_size) - 1), p.word_size)};
    for (auto _ : state) {
        benchmark::DoNotOptimize(encrypt(p, key, pt));
    }
}

void bm_cipher_synthesis(benchmark::State& state, const std::string& id) {
    const CipherParams& p = variant(id);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cipher_circuit(p));
    }
}

void bm_basis_sim_cipher(benchmark::State& state, const std::string& id) {
    const CipherParams& p = variant(id);
    const Circuit c = cipher_circuit(p);
    BasisState in = BasisState::zeros(c);
    const CipherRegisters regs = default_cipher_registers(p.key_words);
    for (unsigned w = 0; w < p.key_words; ++w) {
        in.set_register(c, regs.key[w], BitWord(w + 1, p.word_size));
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_basis(c, in));
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                            static_cast<std::int64_t>(c.gates().size()));
}

void bm_lowered_depth(benchmark::State& state, const std::string& id) {
    const CipherParams& p = variant(id);
    const Circuit c = cipher_circuit(p);
    for (auto _ : state) {
        benchmark::DoNotOptimize(depth(c, DepthMetric::LoweredDepth));
    }
}

void bm_grover_demo_statevector(benchmark::State& state) {
    const CipherParams p = parse_reduced_spec("3,2,4,1,2,0,1:2,001:001");
    const PlainCipherPair pair{{BitWord::parse_binary("011"), BitWord::parse_binary("101")},
                               {BitWord::parse_binary("011"), BitWord::parse_binary("111")}};
    const GroverPlan plan = make_grover_plan(p, {pair}, std::uint64_t{4});
    const Circuit c = grover_circuit(plan);
    for (auto _ : state) {
        const StateVector sv = run_statevector(c, BasisState::zeros(c));
        benchmark::DoNotOptimize(measure_histogram(sv, c, {"k0", "k1"}, 0, 0));
    }
}

void bm_search_cost_row(benchmark::State& state, const std::string& id) {
    const CipherParams& p = variant(id);
    for (auto _ : state) {
        benchmark::DoNotOptimize(search_cost_row(p));
    }
}

} // namespace

BENCHMARK_CAPTURE(bm_classical_encrypt, simon32_64, std::string("simon32/64"));
BENCHMARK_CAPTURE(bm_classical_encrypt, simon128_256, std::string("simon128/256"));
BENCHMARK_CAPTURE(bm_cipher_synthesis, simon32_64, std::string("simon32/64"));
BENCHMARK_CAPTURE(bm_cipher_synthesis, simon128_256, std::string("simon128/256"));
BENCHMARK_CAPTURE(bm_basis_sim_cipher, simon32_64, std::string("simon32/64"));
BENCHMARK_CAPTURE(bm_basis_sim_cipher, simon128_256, std::string("simon128/256"));
BENCHMARK_CAPTURE(bm_lowered_depth, simon128_256, std::string("simon128/256"));
BENCHMARK(bm_grover_demo_statevector);
BENCHMARK_CAPTURE(bm_search_cost_row, simon128_256, std::string("simon128/256"));

BENCHMARK_MAIN();
