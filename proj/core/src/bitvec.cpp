#include "deeppolar/bitvec.hpp"

#include <bit>
#include <cctype>
#include <stdexcept>

namespace deeppolar {

BitVector::BitVector(std::initializer_list<int> bits) : BitVector(bits.size()) {
    std::size_t i = 0;
    for (int b : bits) set(i++, b != 0);
}

BitVector BitVector::from_bits(const std::vector<uint8_t>& bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) v.set(i, bits[i] != 0);
    return v;
}

void BitVector::clear() {
    for (auto& w : words_) w = 0;
}

BitVector& BitVector::operator^=(const BitVector& o) {
    if (o.n_ != n_) throw std::invalid_argument("BitVector xor: length mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
}

bool BitVector::lex_less(const BitVector& o) const {
    std::size_t m = std::min(n_, o.n_);
    for (std::size_t i = 0; i < m; ++i) {
        bool a = get(i), b = o.get(i);
        if (a != b) return !a;
    }
    return n_ < o.n_;
}

std::size_t BitVector::popcount() const {
    std::size_t c = 0;
    for (uint64_t w : words_) c += std::size_t(std::popcount(w));
    return c;
}

bool BitVector::any() const {
    for (uint64_t w : words_)
        if (w) return true;
    return false;
}

std::size_t BitVector::distance(const BitVector& o) const {
    if (o.n_ != n_) throw std::invalid_argument("BitVector distance: length mismatch");
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) c += std::size_t(std::popcount(words_[i] ^ o.words_[i]));
    return c;
}

std::vector<uint8_t> BitVector::to_bits() const {
    std::vector<uint8_t> out(n_);
    for (std::size_t i = 0; i < n_; ++i) out[i] = get(i) ? 1 : 0;
    return out;
}

std::string BitVector::to_binary_string() const {
    std::string s(n_, '0');
    for (std::size_t i = 0; i < n_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

std::string BitVector::to_hex_string() const {
    // the vector read as a big-endian integer (bit 0 most significant),
    // left-padded with zero bits to a whole number of hex digits
    std::size_t digits = (n_ + 3) / 4;
    std::size_t pad = 4 * digits - n_;
    std::string s(digits, '0');
    for (std::size_t d = 0; d < digits; ++d) {
        unsigned nib = 0;
        for (unsigned b = 0; b < 4; ++b) {
            std::size_t padded = 4 * d + b;
            if (padded < pad) continue;
            if (get(padded - pad)) nib |= 8u >> b;
        }
        s[d] = "0123456789abcdef"[nib];
    }
    return s;
}

void BitVector::trim() {
    if (n_ & 63) words_.back() &= (uint64_t(1) << (n_ & 63)) - 1;
}

BitVector BitVector::parse(const std::string& s, std::size_t n) {
    std::string t = s;
    if (t.rfind("0x", 0) == 0 || t.rfind("0X", 0) == 0) t = t.substr(2);
    if (t.empty()) throw std::invalid_argument("empty bit string");

    bool binary_like = true;
    for (char c : t)
        if (c != '0' && c != '1') { binary_like = false; break; }

    BitVector v(n);
    if (binary_like && t.size() == n) {
        for (std::size_t i = 0; i < n; ++i) v.set(i, t[i] == '1');
        return v;
    }

    std::size_t digits = (n + 3) / 4;
    if (t.size() != digits)
        throw std::invalid_argument("bit string \"" + s + "\" is neither a length-" + std::to_string(n) +
                                    " binary string nor a length-" + std::to_string(digits) + " hex string");
    std::size_t pad = 4 * digits - n;
    for (std::size_t d = 0; d < digits; ++d) {
        char c = char(std::tolower(static_cast<unsigned char>(t[d])));
        unsigned nib;
        if (c >= '0' && c <= '9') nib = unsigned(c - '0');
        else if (c >= 'a' && c <= 'f') nib = unsigned(c - 'a' + 10);
        else throw std::invalid_argument(std::string("bad hex digit '") + t[d] + "'");
        for (unsigned b = 0; b < 4; ++b) {
            std::size_t padded = 4 * d + b;
            bool bit = (nib >> (3 - b)) & 1;
            if (padded < pad) {
                if (bit) throw std::invalid_argument("hex string overflows " + std::to_string(n) + " bits");
            } else {
                v.set(padded - pad, bit);
            }
        }
    }
    return v;
}

} // namespace deeppolar
