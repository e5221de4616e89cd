#pragma once

#include "deeppolar/bitvec.hpp"

#include <string>

namespace deeppolar {

/// CRC generator polynomial. coeff(j) is the coefficient of D^j, so the hex
/// form encodes the polynomial directly: 0x61 = D^6 + D^5 + 1.
/// Leading and trailing coefficients must both be 1.
struct CrcSpec {
    uint64_t poly = 0;
    int degree = 0;

    static CrcSpec from_poly(uint64_t poly);
    static CrcSpec from_hex(const std::string& hex);

    bool coeff(int j) const { return (poly >> j) & 1; }
    std::string to_hex() const;
};

/// Systematic CRC: append the remainder of d(x) * x^degree divided by g(x).
/// Message bits enter the division high-order-first (d_1 is the highest
/// power); the remainder is appended high-order-first, so the x^0 bit of the
/// remainder comes last.
BitVector crc_append(const BitVector& d, const CrcSpec& spec);

/// True when the extended block divides g(x) exactly.
bool crc_check(const BitVector& d_ext, const CrcSpec& spec);

} // namespace deeppolar
