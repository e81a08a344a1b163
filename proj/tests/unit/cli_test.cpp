#include "cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::json;
using namespace simonq::cli;

namespace {

struct CliResult {
    int code = -1;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    args.insert(args.begin(), "simonq");
    std::vector<const char*> argv;
    for (const std::string& a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    CliResult r;
    r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string write_file(const std::string& name, const std::string& content) {
    const std::string path = "/tmp/" + name;
    std::ofstream f(path);
    f << content;
    return path;
}

const std::string kDemoSpec = "3,2,4,1,2,0,1:2,001:001";

} // namespace

TEST_SUITE("cli") {

TEST_CASE("encrypt and decrypt reproduce the official block") {
    const CliResult enc = run({"encrypt", "--variant", "simon32/64", "--key",
                               "0100090811101918", "--plaintext", "65656877"});
    CHECK(enc.code == kExitOk);
    CHECK(enc.out == "c69be9bb\n");
    CHECK(enc.err.empty());

    const CliResult dec = run({"decrypt", "--variant", "32/64", "--key", "0100090811101918",
                               "--ciphertext", "c69be9bb"});
    CHECK(dec.code == kExitOk);
    CHECK(dec.out == "65656877\n");
}

TEST_CASE("an explicit z-sequence file gives the built-in behaviour") {
    const CliResult builtin = run({"encrypt", "--variant", "simon128/256", "--key",
                                   "07060504030201000f0e0d0c0b0a090817161514131211101f1e1d1c1b1a1918",
                                   "--plaintext", "74206e69206d6f6f6d69732061207369"});
    const CliResult from_file =
        run({"encrypt", "--variant", "simon128/256", "--z-table",
             std::string(SIMONQ_DATA_DIR) + "/simon_z_sequences.txt", "--key",
             "07060504030201000f0e0d0c0b0a090817161514131211101f1e1d1c1b1a1918",
             "--plaintext", "74206e69206d6f6f6d69732061207369"});
    CHECK(builtin.code == kExitOk);
    CHECK(from_file.code == kExitOk);
    CHECK(builtin.out == from_file.out);
}

TEST_CASE("--output writes the result to a file instead of stdout") {
    const std::string path = "/tmp/simonq_cli_out.txt";
    std::remove(path.c_str());
    const CliResult r = run({"encrypt", "--variant", "simon32/64", "--key",
                             "0100090811101918", "--plaintext", "65656877", "--output", path});
    CHECK(r.code == kExitOk);
    CHECK(r.out.empty());
    std::ifstream f(path);
    std::string content((std::istreambuf_iterator<char>(f)),
                        std::istreambuf_iterator<char>());
    CHECK(content == "c69be9bb\n");
}

TEST_CASE("synth emits OpenQASM with the register layout") {
    const CliResult r = run({"synth", "--reduced", kDemoSpec});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("OPENQASM 2.0;") != std::string::npos);
    CHECK(r.out.find("qreg l[3];") != std::string::npos);
    CHECK(r.out.find("qreg k1[3];") != std::string::npos);
    CHECK(r.out.find("ccx") != std::string::npos);
    CHECK(r.out.rfind("//", 0) == 0); // leading comment line

    const CliResult c = run({"synth", "--reduced", kDemoSpec, "--out", "json-census"});
    CHECK(c.code == kExitOk);
    const json doc = json::parse(c.out);
    CHECK(doc["qubits"] == 12);
    CHECK(doc["gates"]["toffoli"] == 12);
    CHECK(doc["gates"]["cnot"] == 36);
    CHECK(doc["gates"]["x"] == 2);
    CHECK(doc["total_gates"] == 50);
    CHECK(doc["depth"]["gate_layers"].get<std::uint64_t>() > 0);
    CHECK(doc["depth"]["lowered_t_depth"].get<std::uint64_t>() > 0);
}

TEST_CASE("verify passes on the synthesized circuits") {
    const CliResult r = run({"verify", "--variant", "simon32/64", "--draws", "5"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("golden vector: ok (65656877 -> c69be9bb)") != std::string::npos);
    CHECK(r.out.find("verified simon32/64: circuit matches classical encryption on "
                     "5 random draws") != std::string::npos);

    const CliResult reduced = run({"verify", "--reduced", kDemoSpec, "--draws", "3"});
    CHECK(reduced.code == kExitOk);
    CHECK(reduced.out.find("golden vector: ok (35 -> 37)") != std::string::npos);

    const CliResult no_golden =
        run({"verify", "--reduced", "4,2,5,1,2,3,1:2,0001:0011:0111", "--draws", "3"});
    CHECK(no_golden.code == kExitOk);
    CHECK(no_golden.out.find("no golden vector") != std::string::npos);
}

TEST_CASE("verify catches an injected fault and exits 6") {
    const CliResult r =
        run({"verify", "--variant", "simon32/64", "--draws", "2", "--drop-gate", "112"});
    CHECK(r.code == kExitVerifyFailed);
    CHECK(r.out.find("fault injected: dropped gate 112") != std::string::npos);
    CHECK(r.out.find("MISMATCH") != std::string::npos);
}

TEST_CASE("pair files allow comments and blank lines") {
    const std::string path = write_file("simonq_pairs_comments.txt",
                                        "# known pair under the demo key\n"
                                        "\n"
                                        "35 37\n");
    const CliResult r = run({"grover-synth", "--reduced", kDemoSpec, "--pairs", path, "--out",
                             "json-census"});
    CHECK(r.code == kExitOk);
    const json doc = json::parse(r.out);
    CHECK(doc["plan"]["pairs"] == 1);
    CHECK(doc["plan"]["iterations"] == 1); // default without --marked
    CHECK(doc["plan"]["qubits"] == 13);
    CHECK(doc["gates"]["mcx_by_controls"]["6"] == 1);
    CHECK(doc["gates"]["mcz_by_controls"]["5"] == 1);
}

TEST_CASE("the demo search recovers the key from two pair files") {
    const std::string f1 = write_file("simonq_pairs_1.txt", "35 37\n");
    const std::string f2 = write_file("simonq_pairs_2.txt", "15 63\n");
    const CliResult r =
        run({"grover-demo", "--reduced", kDemoSpec, "--pairs", f1, "--pairs", f2, "--marked",
             "2", "--shots", "256", "--seed", "5", "--format", "both"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("recovered key: 001110") != std::string::npos);
    CHECK(r.out.find("peak set:") != std::string::npos);

    // The JSON document follows the ascii chart in "both" mode.
    const std::size_t brace = r.out.find("\n{");
    REQUIRE(brace != std::string::npos);
    const json doc = json::parse(r.out.substr(brace));
    CHECK(doc["variant"] == "reduced-" + kDemoSpec);
    CHECK(doc["key_bits"] == 6);
    REQUIRE(doc["runs"].size() == 2);
    CHECK(doc["runs"][0]["iterations"] == 4);
    CHECK(doc["runs"][0]["qubits"] == 13);
    const std::set<std::string> peaks1(doc["runs"][0]["peaks"].begin(),
                                       doc["runs"][0]["peaks"].end());
    const std::set<std::string> peaks2(doc["runs"][1]["peaks"].begin(),
                                       doc["runs"][1]["peaks"].end());
    CHECK(peaks1 == std::set<std::string>{"001110", "111000"});
    CHECK(peaks2 == std::set<std::string>{"001001", "001110"});
    CHECK(doc["peak_intersection"] == json::array({"001110"}));

    const std::set<std::string> top1{doc["runs"][0]["top"][0]["key"].get<std::string>(),
                                     doc["runs"][0]["top"][1]["key"].get<std::string>()};
    CHECK(top1 == peaks1);
    const double p0 = doc["runs"][0]["top"][0]["probability"].get<double>();
    CHECK(p0 > 0.49);
    CHECK(p0 < 0.51);
}

TEST_CASE("demo output is deterministic for a fixed seed") {
    const std::string f1 = write_file("simonq_pairs_det.txt", "35 37\n");
    const std::vector<std::string> args = {"grover-demo", "--reduced", kDemoSpec,
                                           "--pairs",      f1,         "--marked",
                                           "2",            "--shots",  "512",
                                           "--seed",       "9",        "--format",
                                           "json"};
    const CliResult a = run(args);
    const CliResult b = run(args);
    CHECK(a.code == kExitOk);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
}

TEST_CASE("a full-width demo is refused before building the circuit") {
    const std::string path = write_file("simonq_pairs_wide.txt", "65656877 c69be9bb\n");
    const CliResult r = run({"grover-demo", "--variant", "simon32/64", "--pairs", path});
    CHECK(r.code == kExitResource);
    CHECK(r.err.find("resource limit:") != std::string::npos);
    CHECK(r.err.find("97 qubits") != std::string::npos); // 2*16 + 64 + 1 for one pair
}

TEST_CASE("estimate emits the closed-form rows in all three formats") {
    const CliResult j =
        run({"estimate", "--variant", "simon32/64", "--table", "4", "--format", "json"});
    CHECK(j.code == kExitOk);
    const json doc = json::parse(j.out);
    const json& oracle = doc["simon32/64"]["oracle"];
    CHECK(oracle["pairs"] == 3);
    CHECK(oracle["clifford"] == 19840);
    CHECK(oracle["t"] == 24492);
    CHECK(oracle["t_depth"] == 12288);
    CHECK(oracle["qubits"] == 161);

    const CliResult c =
        run({"estimate", "--variant", "simon32/64", "--table", "3", "--format", "csv"});
    CHECK(c.code == kExitOk);
    CHECK(c.out.rfind("table,variant,metric,value\n", 0) == 0);
    CHECK(c.out.find("3,simon32/64,not,448\n") != std::string::npos);
    CHECK(c.out.find("3,simon32/64,cnot,2816\n") != std::string::npos);

    const CliResult m = run({"estimate", "--table", "5", "--format", "md"});
    CHECK(m.code == kExitOk);
    CHECK(m.out.find("## Full key-search resources (table 5)") != std::string::npos);
    std::size_t exceeds = 0;
    for (std::size_t pos = m.out.find("exceeds 2^96"); pos != std::string::npos;
         pos = m.out.find("exceeds 2^96", pos + 1)) {
        ++exceeds;
    }
    CHECK(exceeds == 2); // only the 192- and 256-bit key searches
    CHECK(m.out.find("14488038916154245684") != std::string::npos);
}

TEST_CASE("paper-diff reports the known discrepant cells") {
    const CliResult r =
        run({"paper-diff", "--variant", "simon64/128", "--format", "json"});
    CHECK(r.code == kExitOk);
    const json doc = json::parse(r.out);
    REQUIRE(doc.is_array());
    REQUIRE(doc.size() == 1);
    CHECK(doc[0]["variant"] == "simon64/128");
    bool saw_cnot = false, saw_t = false;
    for (const json& cell : doc[0]["cells"]) {
        if (cell["table"] == "cipher" && cell["column"] == "cnot") {
            saw_cnot = true;
            CHECK(cell["status"] == "formula-vs-published mismatch");
            CHECK(cell["formula"] == 7936.0);
            CHECK(cell["published"] == 7396.0);
        }
        if (cell["table"] == "oracle" && cell["column"] == "t") {
            saw_t = true;
            CHECK(cell["status"] == "match");
        }
        if (cell["table"] == "cipher" && cell["column"] == "depth") {
            CHECK(cell["status"] == "reported-only");
            CHECK(cell["formula"].is_null());
        }
    }
    CHECK(saw_cnot);
    CHECK(saw_t);

    const CliResult csv = run({"paper-diff", "--variant", "simon96/96", "--format", "csv"});
    CHECK(csv.code == kExitOk);
    CHECK(csv.out.rfind("table,variant,column,as_built,formula,published,status\n", 0) == 0);
    CHECK(csv.out.find("oracle,simon96/96,clifford") != std::string::npos);
}

TEST_CASE("failure modes map to distinct exit codes") {
    const CliResult usage = run({"estimate", "--format", "yaml"});
    CHECK(usage.code == kExitUsage);

    const CliResult nosub = run({});
    CHECK(nosub.code == kExitUsage);

    const CliResult help = run({"--help"});
    CHECK(help.code == kExitOk);
    CHECK(help.out.find("simonq") != std::string::npos);

    const CliResult param = run({"encrypt", "--reduced", "definitely-not-a-spec", "--key",
                                 "16", "--plaintext", "35"});
    CHECK(param.code == kExitParameter);
    CHECK(param.err.find("parameter error:") != std::string::npos);

    const CliResult unknown = run({"verify", "--variant", "simon80/80"});
    CHECK(unknown.code == kExitParameter);

    const CliResult nofile =
        run({"grover-synth", "--reduced", kDemoSpec, "--pairs", "/tmp/simonq_nope.txt"});
    CHECK(nofile.code == kExitFile);
    CHECK(nofile.err.find("file error:") != std::string::npos);

    const CliResult badkey = run({"encrypt", "--variant", "simon32/64", "--key", "zz",
                                  "--plaintext", "65656877"});
    CHECK(badkey.code == kExitParameter);
}

} // TEST_SUITE
