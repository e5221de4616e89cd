#pragma once

#include "deeppolar/codec.hpp"

#include <map>

namespace deeppolar {

struct WeightDistribution {
    int k = 0;                          ///< message length of the enumerated code
    std::map<int, long long> counts;    ///< weight -> number of codewords

    long long at(int weight) const {
        auto it = counts.find(weight);
        return it == counts.end() ? 0 : it->second;
    }
    long long total() const;
    /// Smallest nonzero codeword weight; 0 when only the zero codeword exists.
    int min_distance() const;
};

/// Exact weight histogram over all 2^K messages. Successive messages follow
/// a Gray sequence so each codeword is one row-image XOR away from the
/// previous one; blocks of the message space enumerate independently (with a
/// fresh Gray restart) when threads > 1. Guarded at 2^K <= 2^26.
WeightDistribution weight_distribution(const DeepPolarCode& code, int threads = 1);

/// Minimum-distance estimate from list decoding: decode the noiseless
/// all-zero word with a large list, re-encode every surviving path and take
/// the smallest nonzero codeword weight. Both branches at the first
/// non-frozen bit survive (list size >= 2), so the all-zero path cannot
/// crowd out deviations. For S >= 2^K no path is ever pruned and the result
/// is exact.
int min_weight_scl_estimate(const DeepPolarCode& code, int list_size);

/// A_dmin * Q(sqrt(d_min * snr)), snr in linear units (1/sigma^2 for BPSK
/// with unit symbol energy).
double ml_bler_approx(double a_dmin, int d_min, double snr);

/// Best K-row sub-codebook of the length-n RM-style parent code whose rows
/// have weight >= parent_d_min: enumerates all subsets and keeps the
/// lexicographically smallest weight spectrum (fewest minimum-weight
/// codewords first). subset_guard caps the number of subsets visited.
struct RmSubcodeResult {
    std::vector<int> info_set; ///< 1-based rows of G_n
    WeightDistribution wd;
};
RmSubcodeResult best_rm_subcodebook(std::size_t n, int k, int parent_d_min,
                                    long long subset_guard = 1000000);

/// Polar-style single-layer code over G_n: the k most reliable indices of
/// the profile (no weight mask).
DeepPolarCode polar_code_from_profile(const ReliabilityProfile& profile, int k);

/// Single-layer code with an explicit information set (RM-type baselines).
DeepPolarCode code_from_info_set(std::size_t n, const std::vector<int>& info_set);

} // namespace deeppolar
