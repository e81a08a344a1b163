#include "simonq/params.hpp"

#include "simonq/errors.hpp"

#include <fstream>
#include <sstream>

namespace simonq {

namespace {

const std::array<std::string, 5> kZSequences = {
    "11111010001001010110000111001101111101000100101011000011100110",
    "10001110111110010011000010110101000111011111001001100001011010",
    "10101111011100000011010010011000101000010001111110010110110011",
    "11011011101011000110010111100000010010001010011100110100001111",
    "11010001111001101011011000100000010111000011001010010011101111",
};

std::vector<unsigned> standard_key_rotations(unsigned key_words) {
    // m=2,3 rotate the newest word by 3 then 4; m=4 adds the extra
    // rotate-by-1 layer on k_{i+1}.
    return key_words == 4 ? std::vector<unsigned>{1, 3, 4} : std::vector<unsigned>{3, 4};
}

} // namespace

void CipherParams::validate() const {
    if (word_size < 3 || word_size > 64) {
        throw ParameterError("word size must be in [3, 64], got " + std::to_string(word_size));
    }
    if (key_words < 2 || key_words > 4) {
        throw ParameterError("key must span 2, 3 or 4 words, got " + std::to_string(key_words));
    }
    if (rounds < key_words) {
        throw ParameterError("round count " + std::to_string(rounds) +
                             " is smaller than the key word count " + std::to_string(key_words));
    }
    const std::size_t want_rots = key_words == 4 ? 3 : 2;
    if (key_rotations.size() != want_rots) {
        throw ParameterError("expected " + std::to_string(want_rots) +
                             " key-schedule rotations for m=" + std::to_string(key_words) +
                             ", got " + std::to_string(key_rotations.size()));
    }
    if (round_constants.size() != expansions()) {
        throw ParameterError("expected " + std::to_string(expansions()) +
                             " round constants, got " + std::to_string(round_constants.size()));
    }
    for (const BitWord& c : round_constants) {
        if (c.size() != word_size) {
            throw ParameterError("round constant width " + std::to_string(c.size()) +
                                 " does not match word size " + std::to_string(word_size));
        }
    }
}

const std::vector<StandardVariant>& standard_variants() {
    static const std::vector<StandardVariant> kTable = {
        {"simon32/64", 16, 4, 32, 0},  {"simon48/72", 24, 3, 36, 0},
        {"simon48/96", 24, 4, 36, 1},  {"simon64/96", 32, 3, 42, 2},
        {"simon64/128", 32, 4, 44, 3}, {"simon96/96", 48, 2, 52, 2},
        {"simon96/144", 48, 3, 54, 3}, {"simon128/128", 64, 2, 68, 2},
        {"simon128/192", 64, 3, 69, 3}, {"simon128/256", 64, 4, 72, 4},
    };
    return kTable;
}

void ZTable::validate() const {
    for (std::size_t i = 0; i < sequence.size(); ++i) {
        if (sequence[i].size() != 62) {
            throw ParameterError("z sequence " + std::to_string(i) + " must have 62 bits, got " +
                                 std::to_string(sequence[i].size()));
        }
        for (char c : sequence[i]) {
            if (c != '0' && c != '1') {
                throw ParameterError("z sequence " + std::to_string(i) +
                                     " contains a character other than 0/1");
            }
        }
    }
}

const ZTable& default_z_table() {
    static const ZTable kTable = [] {
        ZTable t{kZSequences};
        t.validate();
        return t;
    }();
    return kTable;
}

ZTable load_z_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw FileError("cannot open z-sequence file: " + path);
    }
    ZTable table;
    std::array<bool, 5> seen{};
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream row(line);
        unsigned index = 0;
        std::string bits;
        if (!(row >> index)) {
            continue; // blank or comment-only line
        }
        if (!(row >> bits) || index >= table.sequence.size()) {
            throw FileError("malformed z-sequence line: " + line);
        }
        table.sequence[index] = bits;
        seen[index] = true;
    }
    for (std::size_t i = 0; i < seen.size(); ++i) {
        if (!seen[i]) {
            throw FileError("z-sequence file " + path + " is missing sequence " +
                            std::to_string(i));
        }
    }
    table.validate();
    return table;
}

std::vector<BitWord> standard_round_constants(unsigned word_size, unsigned count,
                                              const std::string& z_sequence) {
    if (z_sequence.size() != 62) {
        throw ParameterError("z sequence must have 62 bits");
    }
    const BitWord base = BitWord::ones(word_size) ^ BitWord(3, word_size); // 2^n - 4
    std::vector<BitWord> constants;
    constants.reserve(count);
    for (unsigned i = 0; i < count; ++i) {
        const std::uint64_t zbit = z_sequence[i % 62] == '1' ? 1 : 0;
        constants.push_back(base ^ BitWord(zbit, word_size));
    }
    return constants;
}

CipherParams standard_params(const std::string& id, const ZTable& z) {
    z.validate();
    for (const StandardVariant& v : standard_variants()) {
        if (id == v.id || ("simon" + id) == v.id) {
            CipherParams p;
            p.name = v.id;
            p.word_size = v.word_size;
            p.key_words = v.key_words;
            p.rounds = v.rounds;
            p.and_rotations = {1, 8};
            p.xor_rotation = 2;
            p.key_rotations = standard_key_rotations(v.key_words);
            p.round_constants = standard_round_constants(v.word_size, p.expansions(),
                                                         z.sequence[v.z_index]);
            p.validate();
            return p;
        }
    }
    throw ParameterError("unknown variant '" + id + "' (expected e.g. simon32/64)");
}

CipherParams reduced_params(unsigned word_size, unsigned key_words, unsigned rounds,
                            std::array<unsigned, 2> and_rotations, unsigned xor_rotation,
                            std::vector<unsigned> key_rotations,
                            std::vector<BitWord> round_constants) {
    CipherParams p;
    p.word_size = word_size;
    p.key_words = key_words;
    p.rounds = rounds;
    p.and_rotations = and_rotations;
    p.xor_rotation = xor_rotation;
    p.key_rotations = std::move(key_rotations);
    p.round_constants = std::move(round_constants);
    p.validate();
    p.name = "reduced-" + format_reduced_spec(p);
    return p;
}

CipherParams parse_reduced_spec(const std::string& text) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(text);
    while (std::getline(in, field, ',')) {
        fields.push_back(field);
    }
    if (!text.empty() && text.back() == ',') {
        fields.push_back(""); // trailing empty constants field (T == m)
    }
    if (fields.size() != 8) {
        throw ParameterError("reduced spec needs 8 comma-separated fields "
                             "\"n,m,T,a1,a2,x,r0:r1[:r2],c0:...\", got " +
                             std::to_string(fields.size()) + " in \"" + text + "\"");
    }
    auto parse_uint = [&](const std::string& s, const char* what) -> unsigned {
        try {
            std::size_t pos = 0;
            const unsigned long v = std::stoul(s, &pos);
            if (pos != s.size()) {
                throw std::invalid_argument(s);
            }
            return static_cast<unsigned>(v);
        } catch (const std::exception&) {
            throw ParameterError(std::string("invalid ") + what + " field \"" + s +
                                 "\" in reduced spec");
        }
    };
    auto split_colon = [](const std::string& s) {
        std::vector<std::string> out;
        std::string part;
        std::istringstream ss(s);
        while (std::getline(ss, part, ':')) {
            out.push_back(part);
        }
        return out;
    };

    const unsigned n = parse_uint(fields[0], "word-size");
    const unsigned m = parse_uint(fields[1], "key-word");
    const unsigned T = parse_uint(fields[2], "round");
    const unsigned a1 = parse_uint(fields[3], "AND-rotation");
    const unsigned a2 = parse_uint(fields[4], "AND-rotation");
    const unsigned x0 = parse_uint(fields[5], "XOR-rotation");

    std::vector<unsigned> key_rots;
    for (const std::string& r : split_colon(fields[6])) {
        key_rots.push_back(parse_uint(r, "key-rotation"));
    }
    std::vector<BitWord> constants;
    if (!fields[7].empty()) {
        for (const std::string& c : split_colon(fields[7])) {
            const BitWord w = BitWord::parse_binary(c);
            if (w.size() != n) {
                throw ParameterError("round constant \"" + c + "\" must have " +
                                     std::to_string(n) + " bits");
            }
            constants.push_back(w);
        }
    }
    return reduced_params(n, m, T, {a1, a2}, x0, std::move(key_rots), std::move(constants));
}

std::string format_reduced_spec(const CipherParams& params) {
    std::ostringstream os;
    os << params.word_size << ',' << params.key_words << ',' << params.rounds << ','
       << params.and_rotations[0] << ',' << params.and_rotations[1] << ','
       << params.xor_rotation << ',';
    for (std::size_t i = 0; i < params.key_rotations.size(); ++i) {
        os << (i ? ":" : "") << params.key_rotations[i];
    }
    os << ',';
    for (std::size_t i = 0; i < params.round_constants.size(); ++i) {
        os << (i ? ":" : "") << params.round_constants[i].to_binary();
    }
    return os.str();
}

} // namespace simonq
