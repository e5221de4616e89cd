#include "deeppolar/analysis.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace deeppolar {

long long WeightDistribution::total() const {
    long long t = 0;
    for (auto& [w, c] : counts) t += c;
    return t;
}

int WeightDistribution::min_distance() const {
    for (auto& [w, c] : counts)
        if (w > 0 && c > 0) return w;
    return 0;
}

namespace {

// Weight histogram of the span of `rows` over the message range [begin, end):
// message m maps to the codeword of gray(m) = m ^ (m >> 1).
void enumerate_block(const std::vector<BitVector>& rows, std::size_t n, uint64_t begin, uint64_t end,
                     std::map<int, long long>& counts) {
    uint64_t gray = begin ^ (begin >> 1);
    BitVector cw(n);
    for (int b = 0; b < int(rows.size()); ++b)
        if ((gray >> b) & 1) cw ^= rows[std::size_t(b)];
    counts[int(cw.popcount())]++;
    uint64_t prev = gray;
    for (uint64_t m = begin + 1; m < end; ++m) {
        uint64_t g = m ^ (m >> 1);
        cw ^= rows[std::size_t(std::countr_zero(g ^ prev))];
        prev = g;
        counts[int(cw.popcount())]++;
    }
}

std::vector<BitVector> generator_rows(const DeepPolarCode& code) {
    int k = code.message_length();
    std::vector<BitVector> rows;
    rows.reserve(std::size_t(k));
    for (int b = 0; b < k; ++b) {
        auto e = BitVector(std::size_t(k));
        e.set(std::size_t(b), true);
        rows.push_back(encode(code, e));
    }
    return rows;
}

WeightDistribution wd_from_rows(const std::vector<BitVector>& rows, std::size_t n, int threads) {
    WeightDistribution wd;
    wd.k = int(rows.size());
    uint64_t total = uint64_t(1) << rows.size();
    if (threads <= 1 || total < 1024) {
        enumerate_block(rows, n, 0, total, wd.counts);
        return wd;
    }
    std::size_t t_count = std::size_t(threads);
    std::vector<std::map<int, long long>> partial(t_count);
    std::vector<std::thread> workers;
    uint64_t chunk = (total + t_count - 1) / t_count;
    for (std::size_t t = 0; t < t_count; ++t) {
        uint64_t begin = t * chunk, end = std::min(total, begin + chunk);
        if (begin >= end) break;
        workers.emplace_back([&, begin, end, t] { enumerate_block(rows, n, begin, end, partial[t]); });
    }
    for (auto& w : workers) w.join();
    for (auto& p : partial)
        for (auto& [w, c] : p) wd.counts[w] += c;
    return wd;
}

} // namespace

WeightDistribution weight_distribution(const DeepPolarCode& code, int threads) {
    if (code.message_length() > kMlEnumerationGuard)
        throw std::invalid_argument("2^" + std::to_string(code.message_length()) +
                                    " messages exceed the enumeration guard");
    return wd_from_rows(generator_rows(code), std::size_t(code.block_length()), threads);
}

int min_weight_scl_estimate(const DeepPolarCode& code, int list_size) {
    if (list_size < 2) throw std::invalid_argument("estimate needs list size >= 2");
    std::vector<double> llr(std::size_t(code.block_length()), kLlrMax);
    SclOutcome out = scl_bpc_decode_full(code, llr, list_size);

    long long best = -1;
    for (const auto& path : out.paths) {
        if (!path.u_last.any()) continue;
        if (code.crc) {
            BitVector d_ext = extract_extended_message(code, path.u_last);
            if (!crc_check(d_ext, *code.crc)) continue;
        }
        long long w = (long long)(polar_transform(path.u_last).popcount());
        if (w > 0 && (best < 0 || w < best)) best = w;
    }
    if (best < 0) throw std::runtime_error("no nonzero codeword survived the list");
    return int(best);
}

double ml_bler_approx(double a_dmin, int d_min, double snr) {
    if (snr < 0.0) throw std::invalid_argument("snr must be nonnegative");
    return a_dmin * q_function(std::sqrt(double(d_min) * snr));
}

DeepPolarCode polar_code_from_profile(const ReliabilityProfile& profile, int k) {
    LayerSpec layer = build_layer(int(profile.n), k, 1, profile, 0, LayerDirection::forward);
    DeepPolarCode code;
    code.layers.push_back(std::move(layer));
    return code;
}

DeepPolarCode code_from_info_set(std::size_t n, const std::vector<int>& info_set) {
    LayerSpec layer;
    layer.n = int(n);
    layer.k = int(info_set.size());
    layer.d_min = 1;
    layer.direction = LayerDirection::forward;
    layer.info_set = info_set;
    std::sort(layer.info_set.begin(), layer.info_set.end());
    std::vector<char> used(n + 1, 0);
    for (int idx : layer.info_set) {
        if (idx < 1 || std::size_t(idx) > n || used[std::size_t(idx)])
            throw std::invalid_argument("bad information set");
        used[std::size_t(idx)] = 1;
    }
    for (std::size_t i = 1; i <= n; ++i)
        if (!used[i]) layer.frozen_set.push_back(int(i));
    DeepPolarCode code;
    code.layers.push_back(std::move(layer));
    return code;
}

RmSubcodeResult best_rm_subcodebook(std::size_t n, int k, int parent_d_min, long long subset_guard) {
    auto parent = rm_mask(n, std::size_t(parent_d_min));
    int p = int(parent.size());
    if (k > p) throw std::invalid_argument("sub-codebook larger than the parent code");

    // number of subsets
    long long subsets = 1;
    for (int i = 0; i < k; ++i) {
        subsets = subsets * (p - i) / (i + 1);
        if (subsets > subset_guard)
            throw std::invalid_argument("subset search exceeds the guard");
    }

    std::vector<BitVector> parent_rows;
    for (int idx : parent) {
        BitVector u(n);
        u.set(std::size_t(idx - 1), true);
        parent_rows.push_back(polar_transform(u));
    }

    auto spectrum_less = [n](const WeightDistribution& a, const WeightDistribution& b) {
        for (int w = 1; w <= int(n); ++w) {
            long long ca = a.at(w), cb = b.at(w);
            if (ca != cb) return ca < cb;
        }
        return false;
    };

    RmSubcodeResult best;
    std::vector<int> pick(std::size_t(k), 0);
    for (int i = 0; i < k; ++i) pick[std::size_t(i)] = i;
    while (true) {
        std::vector<BitVector> rows;
        for (int i : pick) rows.push_back(parent_rows[std::size_t(i)]);
        WeightDistribution wd = wd_from_rows(rows, n, 1);
        if (best.info_set.empty() || spectrum_less(wd, best.wd)) {
            best.wd = wd;
            best.info_set.clear();
            for (int i : pick) best.info_set.push_back(parent[std::size_t(i)]);
        }
        // next combination
        int pos = k - 1;
        while (pos >= 0 && pick[std::size_t(pos)] == p - k + pos) --pos;
        if (pos < 0) break;
        ++pick[std::size_t(pos)];
        for (int j = pos + 1; j < k; ++j) pick[std::size_t(j)] = pick[std::size_t(j - 1)] + 1;
    }
    return best;
}

} // namespace deeppolar
