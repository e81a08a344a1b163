#include "simonq/bitword.hpp"

#include "simonq/errors.hpp"

#include <bit>
#include <sstream>

namespace simonq {

namespace {

std::uint64_t mask_for(unsigned size) {
    return size == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size) - 1;
}

} // namespace

BitWord::BitWord(std::uint64_t value, unsigned size) : value_(value), size_(size) {
    if (size < 3 || size > 64) {
        throw ParameterError("word size must be in [3, 64], got " + std::to_string(size));
    }
    if (value > mask_for(size)) {
        std::ostringstream os;
        os << "value 0x" << std::hex << value << " does not fit in " << std::dec << size
           << " bits";
        throw ParameterError(os.str());
    }
}

BitWord BitWord::ones(unsigned size) {
    return BitWord(mask_for(size), size);
}

BitWord BitWord::from_bits(const std::vector<int>& bits) {
    if (bits.size() < 3 || bits.size() > 64) {
        throw ParameterError("bit vector length must be in [3, 64], got " +
                             std::to_string(bits.size()));
    }
    std::uint64_t v = 0;
    for (int b : bits) {
        if (b != 0 && b != 1) {
            throw ParameterError("bit values must be 0 or 1");
        }
        v = (v << 1) | static_cast<std::uint64_t>(b);
    }
    return BitWord(v, static_cast<unsigned>(bits.size()));
}

BitWord BitWord::from_bits(std::initializer_list<int> bits) {
    return from_bits(std::vector<int>(bits));
}

BitWord BitWord::parse_binary(std::string_view text) {
    std::vector<int> bits;
    bits.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw ParameterError(std::string("invalid binary digit '") + c + "'");
        }
        bits.push_back(c - '0');
    }
    return from_bits(bits);
}

BitWord BitWord::parse_hex(std::string_view text, unsigned size) {
    if (text.empty()) {
        throw ParameterError("empty hex string");
    }
    if (text.size() > 16) {
        throw ParameterError("hex string too long: " + std::string(text));
    }
    std::uint64_t v = 0;
    for (char c : text) {
        int digit;
        if (c >= '0' && c <= '9') {
            digit = c - '0';
        } else if (c >= 'a' && c <= 'f') {
            digit = c - 'a' + 10;
        } else if (c >= 'A' && c <= 'F') {
            digit = c - 'A' + 10;
        } else {
            throw ParameterError(std::string("invalid hex digit '") + c + "'");
        }
        v = (v << 4) | static_cast<std::uint64_t>(digit);
    }
    if (size < 64 && v > mask_for(size)) {
        throw ParameterError("hex value " + std::string(text) + " does not fit in " +
                             std::to_string(size) + " bits");
    }
    return BitWord(v, size);
}

int BitWord::bit(unsigned i) const {
    if (i >= size_) {
        throw ParameterError("bit index " + std::to_string(i) + " out of range for " +
                             std::to_string(size_) + "-bit word");
    }
    return static_cast<int>((value_ >> (size_ - 1 - i)) & 1u);
}

void BitWord::set_bit(unsigned i, int b) {
    if (i >= size_) {
        throw ParameterError("bit index " + std::to_string(i) + " out of range for " +
                             std::to_string(size_) + "-bit word");
    }
    if (b != 0 && b != 1) {
        throw ParameterError("bit values must be 0 or 1");
    }
    const std::uint64_t m = std::uint64_t{1} << (size_ - 1 - i);
    value_ = b ? (value_ | m) : (value_ & ~m);
}

BitWord BitWord::rotl(unsigned j) const {
    j %= size_;
    if (j == 0) {
        return *this;
    }
    const std::uint64_t m = mask_for(size_);
    return BitWord(((value_ << j) | (value_ >> (size_ - j))) & m, size_);
}

BitWord BitWord::rotr(unsigned j) const {
    j %= size_;
    return rotl(size_ - j);
}

unsigned BitWord::hamming_weight() const {
    return static_cast<unsigned>(std::popcount(value_));
}

BitWord BitWord::operator^(const BitWord& other) const {
    check_same_size(other, "XOR");
    return BitWord(value_ ^ other.value_, size_);
}

BitWord BitWord::operator&(const BitWord& other) const {
    check_same_size(other, "AND");
    return BitWord(value_ & other.value_, size_);
}

BitWord BitWord::operator~() const {
    return BitWord(~value_ & mask_for(size_), size_);
}

std::string BitWord::to_binary() const {
    std::string s(size_, '0');
    for (unsigned i = 0; i < size_; ++i) {
        s[i] = static_cast<char>('0' + bit(i));
    }
    return s;
}

std::string BitWord::to_hex() const {
    const unsigned digits = (size_ + 3) / 4;
    static const char* kHex = "0123456789abcdef";
    std::string s(digits, '0');
    for (unsigned i = 0; i < digits; ++i) {
        s[digits - 1 - i] = kHex[(value_ >> (4 * i)) & 0xf];
    }
    return s;
}

void BitWord::check_same_size(const BitWord& other, const char* op) const {
    if (size_ != other.size_) {
        throw ParameterError(std::string(op) + " of words with different sizes (" +
                             std::to_string(size_) + " vs " + std::to_string(other.size_) + ")");
    }
}

} // namespace simonq
