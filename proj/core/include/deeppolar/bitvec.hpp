#pragma once

#include <cstdint>
#include <cstddef>
#include <string>
#include <vector>

namespace deeppolar {

/// Fixed-length vector over GF(2), packed into 64-bit words.
/// Bit positions are 0-based; the published index sets of a code are 1-based
/// and converted at the API boundary.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}
    BitVector(std::initializer_list<int> bits);

    static BitVector from_bits(const std::vector<uint8_t>& bits);

    std::size_t size() const { return n_; }
    bool empty() const { return n_ == 0; }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(std::size_t i, bool v) {
        uint64_t m = uint64_t(1) << (i & 63);
        if (v) words_[i >> 6] |= m; else words_[i >> 6] &= ~m;
    }
    void flip(std::size_t i) { words_[i >> 6] ^= uint64_t(1) << (i & 63); }
    void clear();

    BitVector& operator^=(const BitVector& o);
    friend BitVector operator^(BitVector a, const BitVector& b) { a ^= b; return a; }
    bool operator==(const BitVector& o) const { return n_ == o.n_ && words_ == o.words_; }
    bool operator!=(const BitVector& o) const { return !(*this == o); }

    /// Lexicographic order with 0 < 1, position 0 most significant.
    bool lex_less(const BitVector& o) const;

    std::size_t popcount() const;
    bool any() const;

    /// Hamming distance; vectors must have equal length.
    std::size_t distance(const BitVector& o) const;

    const std::vector<uint64_t>& words() const { return words_; }
    std::vector<uint64_t>& words() { return words_; }

    std::vector<uint8_t> to_bits() const;

    /// "0110..." with position 0 first.
    std::string to_binary_string() const;
    /// MSB-first hex, left padded to ceil(n/4) digits; bit 0 is the MSB.
    std::string to_hex_string() const;

    /// Accepts either form for a vector of known length n: a string of
    /// exactly n characters from {0,1} is binary, anything else is parsed
    /// as hex (optionally "0x"-prefixed). Throws std::invalid_argument.
    static BitVector parse(const std::string& s, std::size_t n);

private:
    std::size_t n_ = 0;
    std::vector<uint64_t> words_;
    void trim();
};

} // namespace deeppolar
