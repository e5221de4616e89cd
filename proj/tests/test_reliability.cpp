#include "deeppolar/reliability.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

using namespace deeppolar;

TEST_CASE("BEC profile closed-form values") {
    auto p1 = bec_profile(1, 0.5);
    CHECK(p1.values == std::vector<double>{0.5});

    // one recursion step: Z- = 0.75, Z+ = 0.25
    auto p2 = bec_profile(2, 0.5);
    CHECK(p2.values[0] == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(p2.values[1] == doctest::Approx(0.75).epsilon(1e-15));

    auto p32 = bec_profile(32, 0.5);
    CHECK(p32.values[24] > p32.values[11]); // I(W_32^(25)) > I(W_32^(12))

    CHECK_THROWS_AS(bec_profile(32, 1.5), std::invalid_argument);
    CHECK_THROWS_AS(bec_profile(12, 0.5), std::invalid_argument);
}

TEST_CASE("BEC conservation and polarization monotonicity") {
    for (double eps : {0.3, 0.5, 0.7}) {
        double prev_min = 1.0, prev_max = 0.0;
        for (std::size_t n = 1; n <= 1024; n <<= 1) {
            auto p = bec_profile(n, eps);
            double sum = std::accumulate(p.values.begin(), p.values.end(), 0.0);
            CHECK(std::fabs(sum - double(n) * (1.0 - eps)) < 1e-12 * double(n));
            double mn = *std::min_element(p.values.begin(), p.values.end());
            double mx = *std::max_element(p.values.begin(), p.values.end());
            CHECK(mn <= prev_min + 1e-15);
            CHECK(mx >= prev_max - 1e-15);
            prev_min = mn;
            prev_max = mx;
        }
    }
}

TEST_CASE("BEC bit channels by erasure-pattern enumeration at N=4") {
    // Exact capacities: a bit channel is itself a BEC; u_i is recoverable
    // exactly when the pattern leaves it determined given u_{1:i-1}.
    double eps = 0.4;
    auto g = oracle::dense_generator(4);
    std::vector<double> cap(4, 0.0);
    for (int pattern = 0; pattern < 16; ++pattern) {
        double prob = 1.0;
        for (int j = 0; j < 4; ++j) prob *= (pattern >> j & 1) ? eps : (1.0 - eps);
        // u_i determined <=> column i of G restricted to unerased positions is
        // not in the span of columns i+1..N restricted the same way: test by
        // brute force over the 2^(N-i) unknown suffixes.
        for (int i = 0; i < 4; ++i) {
            bool determined = true;
            for (int suffix = 1; suffix < (1 << (3 - i)) && determined; ++suffix) {
                // does some nonzero suffix produce a codeword difference
                // invisible on unerased positions?
                std::vector<uint8_t> diff(4, 0);
                for (int j = i + 1; j < 4; ++j)
                    if ((suffix >> (j - i - 1)) & 1)
                        for (int c = 0; c < 4; ++c) diff[c] ^= g[std::size_t(j)][std::size_t(c)];
                // add u_i difference of 1
                for (int c = 0; c < 4; ++c) diff[c] ^= g[std::size_t(i)][std::size_t(c)];
                bool visible = false;
                for (int c = 0; c < 4; ++c)
                    if (diff[c] && !((pattern >> c) & 1)) visible = true;
                if (!visible) determined = false;
            }
            // suffix = 0 case: flipping u_i alone
            {
                bool visible = false;
                for (int c = 0; c < 4; ++c)
                    if (g[std::size_t(i)][std::size_t(c)] && !((pattern >> c) & 1)) visible = true;
                if (!visible) determined = false;
            }
            if (determined) cap[std::size_t(i)] += prob;
        }
    }
    auto p = bec_profile(4, eps);
    for (int i = 0; i < 4; ++i) CHECK(p.values[std::size_t(i)] == doctest::Approx(cap[std::size_t(i)]).epsilon(1e-12));
}

TEST_CASE("DEGA profile") {
    // N=1: the mean of the BI-AWGN LLR 2y/sigma^2 given +1 is 2/sigma^2
    double rate = 0.5, snr_db = 2.0;
    double sigma2 = 1.0 / (2.0 * rate * std::pow(10.0, snr_db / 10.0));
    auto p1 = dega_profile(1, snr_db, rate);
    CHECK(p1.values[0] == doctest::Approx(2.0 / sigma2).epsilon(1e-12));

    // the plus branch doubles the mean
    auto p2 = dega_profile(2, snr_db, rate);
    CHECK(p2.values[1] == doctest::Approx(2.0 * p1.values[0]).epsilon(1e-12));

    // strictly positive values, maximum at the last index
    for (std::size_t n : {8u, 64u, 128u}) {
        auto p = dega_profile(n, 1.5, 29.0 / 128.0);
        for (double v : p.values) CHECK(v > 0.0);
        CHECK(*std::max_element(p.values.begin(), p.values.end()) == p.values[n - 1]);
    }

    // phi inverse round trip
    for (double m : {0.1, 1.0, 5.0, 9.0, 15.0, 40.0})
        CHECK(dega_phi_inv(dega_phi(m)) == doctest::Approx(m).epsilon(1e-6));
}

TEST_CASE("DEGA ranking agrees with Monte Carlo density evolution at N=8") {
    double rate = 0.5, snr_db = 2.0;
    double sigma2 = 1.0 / (2.0 * rate * std::pow(10.0, snr_db / 10.0));
    const long long samples = 1000000;
    auto mc = oracle::mc_density_evolution(8, sigma2, samples, 0xD15EA5Eull);
    auto ga = dega_profile(8, snr_db, rate).values;

    // Compare rankings only where the Monte Carlo means are clearly separated
    // (five standard errors on a crude variance bound).
    double se = 4.0 * std::sqrt(2.0 / sigma2) / std::sqrt(double(samples));
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            if (mc[std::size_t(i)] > mc[std::size_t(j)] + 5.0 * se)
                CHECK(ga[std::size_t(i)] > ga[std::size_t(j)]);
}

TEST_CASE("sequence profile") {
    std::vector<int> identity{1, 2, 3, 4};
    auto p = sequence_profile(identity);
    CHECK(p.values == std::vector<double>{4, 3, 2, 1});

    std::vector<int> reversed{4, 3, 2, 1};
    auto pr = sequence_profile(reversed);
    CHECK(pr.values[0] == 1.0); // index 1 least reliable here
    CHECK(pr.order_descending().front() == 4);

    // induced ordering equals the input ordering
    std::vector<int> perm{3, 1, 4, 2, 8, 6, 5, 7};
    CHECK(sequence_profile(perm).order_descending() == perm);

    CHECK_THROWS_AS(sequence_profile(std::vector<int>{1, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(sequence_profile(std::vector<int>{0, 1, 2}), std::invalid_argument);
}

TEST_CASE("bundled 5G sequence asset") {
    auto spec = ProfileSpec::parse("seq:5g");
    auto p1024 = spec.build(1024, 1.0);
    CHECK(p1024.n == 1024);

    auto order = p1024.order_descending();
    CHECK(order.front() == 1024);
    CHECK(order.back() == 1);
    // spot checks against the published table (0-based 1023, 1022, 1021, 1019)
    CHECK(order[1] == 1023);
    CHECK(order[2] == 1022);
    CHECK(order[3] == 1020);
    // least reliable end: 0, 1, 2, 4 (0-based)
    CHECK(order[1023] == 1);
    CHECK(order[1022] == 2);
    CHECK(order[1021] == 3);
    CHECK(order[1020] == 5);

    // nested restriction to N=128 is a permutation with 128 on top
    auto p128 = spec.build(128, 1.0);
    auto o128 = p128.order_descending();
    CHECK(o128.size() == 128);
    CHECK(o128.front() == 128);
    std::vector<int> sorted = o128;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 1; i <= 128; ++i) CHECK(sorted[std::size_t(i - 1)] == i);

    // restriction preserves relative order
    auto seq1024 = p1024.order_descending();
    std::vector<int> filtered;
    for (int q : seq1024)
        if (q <= 128) filtered.push_back(q);
    CHECK(filtered == o128);
}
