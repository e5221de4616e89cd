#pragma once

#include "deeppolar/bitvec.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace deeppolar {

/// LLR magnitude cap, natural log units. BEC maps known bits to +-kLlrMax and
/// erasures to 0; log(1 + e^-60) underflows double rounding, so a clamped
/// path metric update at a correct hard bit contributes exactly 0.
inline constexpr double kLlrMax = 60.0;

enum class ChannelKind { bi_awgn, bec };

/// BI-AWGN with BPSK (parameterized by Eb/N0 in dB unless param_is_esn0) or
/// BEC with erasure probability param.
struct ChannelModel {
    ChannelKind kind = ChannelKind::bi_awgn;
    double param = 0.0;
    double rate = 1.0;        ///< code rate, used for the Eb/N0 conversion
    bool param_is_esn0 = false;

    static ChannelModel awgn_ebn0(double ebn0_db, double rate) { return {ChannelKind::bi_awgn, ebn0_db, rate, false}; }
    static ChannelModel awgn_esn0(double esn0_db) { return {ChannelKind::bi_awgn, esn0_db, 1.0, true}; }
    static ChannelModel bec(double eps) { return {ChannelKind::bec, eps, 1.0, false}; }

    /// Noise variance per real dimension, unit symbol energy.
    double sigma2() const;
};

/// Deterministic per-trial engine derived from (seed, point, trial); results
/// do not depend on the order trials are executed in.
std::mt19937_64 trial_rng(uint64_t seed, uint64_t point, uint64_t trial);

/// Transmit codeword x and return channel LLRs ln p(y|0)/p(y|1), length N.
/// BI-AWGN: y = (1-2x) + n, llr = 2y/sigma^2, clamped to +-kLlrMax.
/// BEC: erased positions give 0, the rest +-kLlrMax.
std::vector<double> transmit(const BitVector& x, const ChannelModel& model, std::mt19937_64& rng);

/// AWGN observations themselves (for decoders that consume y directly).
std::vector<double> transmit_awgn_observations(const BitVector& x, const ChannelModel& model,
                                               std::mt19937_64& rng);

/// Gaussian upper tail probability.
double q_function(double x);

} // namespace deeppolar
