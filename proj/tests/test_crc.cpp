#include "deeppolar/crc.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace deeppolar;

namespace {
const std::vector<uint8_t> kPoly61{1, 0, 0, 0, 0, 1, 1}; // 1 + D^5 + D^6, coeff of D^j at [j]
}

TEST_CASE("CrcSpec parsing") {
    CrcSpec crc = CrcSpec::from_hex("0x61");
    CHECK(crc.degree == 6);
    CHECK(crc.coeff(0));
    CHECK(crc.coeff(5));
    CHECK(crc.coeff(6));
    CHECK_FALSE(crc.coeff(1));
    CHECK(crc.to_hex() == "0x61");

    CHECK_THROWS_AS(CrcSpec::from_hex("0x60"), std::invalid_argument); // even constant term
    CHECK_THROWS_AS(CrcSpec::from_hex("0x1"), std::invalid_argument);  // degree zero
}

TEST_CASE("CRC golden vectors from long division") {
    CrcSpec crc = CrcSpec::from_hex("0x61");

    // d = [1]: remainder of x^6 mod (x^6 + x^5 + 1) = x^5 + 1
    BitVector one{1};
    BitVector ext = crc_append(one, crc);
    CHECK(ext == BitVector{1, 1, 0, 0, 0, 0, 1});

    auto oracle_rem = oracle::crc_long_division({1}, kPoly61);
    for (int j = 0; j < 6; ++j) CHECK(ext.get(std::size_t(1 + j)) == (oracle_rem[std::size_t(j)] != 0));

    // frozen vector for an 8-bit message, remainder computed by the oracle
    std::vector<uint8_t> msg{1, 0, 1, 1, 0, 0, 1, 0};
    auto rem = oracle::crc_long_division(msg, kPoly61);
    BitVector ext2 = crc_append(BitVector::from_bits(msg), crc);
    for (std::size_t j = 0; j < 6; ++j) CHECK(ext2.get(8 + j) == (rem[j] != 0));

    // all-zero message gives an all-zero CRC
    CHECK(crc_append(BitVector(10), crc) == BitVector(16));
}

TEST_CASE("CRC round trip and soundness") {
    CrcSpec crc = CrcSpec::from_hex("0x61");
    std::mt19937_64 rng(21);
    for (int t = 0; t < 1000; ++t) {
        std::size_t k = 1 + rng() % 64;
        auto d = BitVector(k);
        for (std::size_t i = 0; i < k; ++i) d.set(i, (rng() & 1) != 0);
        BitVector ext = crc_append(d, crc);
        CHECK(crc_check(ext, crc));

        // any single-bit corruption fails
        std::size_t flip = rng() % ext.size();
        ext.flip(flip);
        CHECK_FALSE(crc_check(ext, crc));
    }
}
