#include "deeppolar/gf2.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace deeppolar;

namespace {

BitVector random_bits(std::size_t n, std::mt19937_64& rng) {
    auto v = BitVector(n);
    for (std::size_t i = 0; i < n; ++i) v.set(i, (rng() & 1) != 0);
    return v;
}

} // namespace

TEST_CASE("polar transform basics") {
    auto zero = BitVector(16);
    CHECK(polar_transform(zero) == zero);

    CHECK(polar_transform(BitVector{0, 1}) == BitVector{1, 1}); // second row of G_2

    CHECK_THROWS_AS(polar_transform(BitVector(3)), std::invalid_argument);
}

TEST_CASE("polar transform equals dense multiply by G_8") {
    std::mt19937_64 rng(7);
    auto g = oracle::dense_generator(8);
    for (int t = 0; t < 50; ++t) {
        BitVector u = random_bits(8, rng);
        CHECK(polar_transform(u) == oracle::dense_mul(u, g));
    }
}

TEST_CASE("transpose transform basics") {
    auto e1 = BitVector(8);
    e1.set(0, true);
    BitVector ones = transpose_transform(e1);
    CHECK(ones.popcount() == 8); // first column of G_8 is all ones

    std::mt19937_64 rng(8);
    BitVector u = random_bits(32, rng);
    CHECK(transpose_transform(transpose_transform(u)) == u);

    auto g16t = oracle::transpose(oracle::dense_generator(16));
    for (int t = 0; t < 50; ++t) {
        BitVector v = random_bits(16, rng);
        CHECK(transpose_transform(v) == oracle::dense_mul(v, g16t));
    }
}

TEST_CASE("prefix transform is the leading block of G^T") {
    std::mt19937_64 rng(9);

    // k = N reduces to the full transform
    BitVector u = random_bits(8, rng);
    CHECK(transpose_transform_prefix(u, 8) == transpose_transform(u));

    // involution at k=3, N=8
    BitVector p = random_bits(3, rng);
    CHECK(transpose_transform_prefix(transpose_transform_prefix(p, 8), 8) == p);

    // dense 5x5 upper-left block of G_8^T
    auto block = oracle::leading_block(oracle::transpose(oracle::dense_generator(8)), 5);
    for (int t = 0; t < 50; ++t) {
        BitVector v = random_bits(5, rng);
        CHECK(transpose_transform_prefix(v, 8) == oracle::dense_mul(v, block));
    }

    CHECK_THROWS_AS(transpose_transform_prefix(random_bits(9, rng), 8), std::invalid_argument);
}

TEST_CASE("prefix transform matches the head of the padded full transform") {
    std::mt19937_64 rng(10);
    for (std::size_t n : {8u, 32u, 256u}) {
        for (std::size_t k = 1; k <= n; k = 2 * k + 1) {
            BitVector p = random_bits(k, rng);
            auto padded = BitVector(n);
            for (std::size_t i = 0; i < k; ++i) padded.set(i, p.get(i));
            transpose_transform_inplace(padded);
            BitVector head = transpose_transform_prefix(p, n);
            for (std::size_t i = 0; i < k; ++i) CHECK(head.get(i) == padded.get(i));
        }
    }
}

TEST_CASE("involutions and linearity up to N=1024") {
    std::mt19937_64 rng(11);
    for (std::size_t n = 2; n <= 1024; n <<= 1) {
        BitVector a = random_bits(n, rng), b = random_bits(n, rng);
        CHECK(polar_transform(polar_transform(a)) == a);
        CHECK(transpose_transform(transpose_transform(a)) == a);
        CHECK(polar_transform(a ^ b) == (polar_transform(a) ^ polar_transform(b)));
        CHECK(transpose_transform(a ^ b) == (transpose_transform(a) ^ transpose_transform(b)));
    }
    for (std::size_t n = 2; n <= 256; n <<= 1)
        for (std::size_t k = 1; k <= n; k += std::max<std::size_t>(1, n / 5)) {
            BitVector p = random_bits(k, rng), q = random_bits(k, rng);
            CHECK(transpose_transform_prefix(transpose_transform_prefix(p, n), n) == p);
            CHECK(transpose_transform_prefix(p ^ q, n) ==
                  (transpose_transform_prefix(p, n) ^ transpose_transform_prefix(q, n)));
        }
}

TEST_CASE("fast transforms agree with dense G_N for N up to 64") {
    std::mt19937_64 rng(12);
    for (std::size_t n = 2; n <= 64; n <<= 1) {
        auto g = oracle::dense_generator(n);
        auto gt = oracle::transpose(g);
        for (int t = 0; t < 20; ++t) {
            BitVector u = random_bits(n, rng);
            CHECK(polar_transform(u) == oracle::dense_mul(u, g));
            CHECK(transpose_transform(u) == oracle::dense_mul(u, gt));
        }
        // library dense generator agrees with the subset-rule construction
        Gf2Matrix lib = polar_generator_matrix(n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) CHECK(lib.get(r, c) == (g[r][c] != 0));
    }
}

TEST_CASE("row weights") {
    CHECK(row_weight(32, 1) == 1);
    CHECK(row_weight(32, 25) == 4);
    CHECK(row_weight(32, 12) == 8);
    for (std::size_t n = 2; n <= 1024; n <<= 1) CHECK(row_weight(n, n) == n);
    CHECK_THROWS_AS(row_weight(32, 0), std::invalid_argument);
    CHECK_THROWS_AS(row_weight(32, 33), std::invalid_argument);

    // transpose weights are the column weights
    auto g = oracle::dense_generator(16);
    for (std::size_t i = 1; i <= 16; ++i) {
        std::size_t colw = 0;
        for (std::size_t r = 0; r < 16; ++r) colw += g[r][i - 1];
        CHECK(transpose_row_weight(16, i) == colw);
    }
}

TEST_CASE("gf2_solve") {
    // identity
    Gf2Matrix id = Gf2Matrix::identity(6);
    std::mt19937_64 rng(13);
    BitVector b = random_bits(6, rng);
    auto sol = gf2_solve(id, b);
    CHECK(sol.status == SolveStatus::unique);
    CHECK(sol.x == b);

    // zero matrix, zero rhs
    Gf2Matrix zero(4, 3);
    auto sol2 = gf2_solve(zero, BitVector(4));
    CHECK(sol2.status == SolveStatus::multiple);

    // zero matrix, nonzero rhs
    auto b3 = BitVector(4);
    b3.set(1, true);
    CHECK(gf2_solve(zero, b3).status == SolveStatus::none);

    CHECK_THROWS_AS(gf2_solve(zero, BitVector(5)), std::invalid_argument);

    // random 10x6 systems against exhaustive search
    for (int t = 0; t < 40; ++t) {
        Gf2Matrix a(10, 6);
        for (std::size_t r = 0; r < 10; ++r)
            for (std::size_t c = 0; c < 6; ++c) a.set(r, c, (rng() & 1) != 0);
        BitVector rhs = random_bits(10, rng);
        auto fast = gf2_solve(a, rhs);
        auto brute = oracle::brute_force_solve(a, rhs);
        CHECK(int(fast.status) == int(brute.status));
        if (fast.status == SolveStatus::unique) CHECK(fast.x == brute.x);
    }
}

TEST_CASE("bit vector serialization") {
    BitVector v{1, 0, 1, 1, 0, 0, 1, 0, 1};
    CHECK(v.to_binary_string() == "101100101");
    CHECK(v.to_hex_string() == "165"); // 0b101100101 = 0x165, left padded

    CHECK(BitVector::parse("101100101", 9) == v);
    CHECK(BitVector::parse("165", 9) == v);
    CHECK(BitVector::parse("0x165", 9) == v);

    // hex overflowing the length is rejected
    CHECK_THROWS_AS(BitVector::parse("965", 9), std::invalid_argument); // bit above position 0
    CHECK_THROWS_AS(BitVector::parse("zz", 8), std::invalid_argument);

    std::mt19937_64 rng(14);
    for (std::size_t n : {1u, 7u, 8u, 33u, 130u}) {
        BitVector u = random_bits(n, rng);
        CHECK(BitVector::parse(u.to_hex_string(), n) == u);
        CHECK(BitVector::parse(u.to_binary_string(), n) == u);
    }
}
