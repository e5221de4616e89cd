#pragma once

#include "deeppolar/analysis.hpp"

#include <functional>
#include <ostream>
#include <string>

namespace deeppolar {

enum class DecoderKind { sc, scl_bpc, parallel_scl, ml };

DecoderKind decoder_kind_from_string(const std::string& name);
std::string to_string(DecoderKind kind);

/// One Monte Carlo experiment: a code, a decoder and a channel parameter
/// sweep. Per-trial randomness derives from (seed, point index, trial index),
/// so results are bit-identical for any thread count.
struct SimConfig {
    DeepPolarCode code;
    DecoderKind decoder = DecoderKind::scl_bpc;
    int list_size = 8;
    ChannelKind channel = ChannelKind::bi_awgn;
    bool esn0 = false;               ///< sweep values are Es/N0 instead of Eb/N0
    std::vector<double> sweep;       ///< Eb/N0 dB points or erasure probabilities
    long long max_trials = 100000;
    long long target_errors = 200;   ///< early stop once reached (checked per batch)
    uint64_t seed = 1;
    int threads = 1;
};

struct PointResult {
    double param = 0.0;
    long long trials = 0;
    long long block_errors = 0;
    long long bit_errors = 0;
    double bler = 0.0;
    double ber = 0.0;
    double ci95 = 0.0; ///< 1.96 sqrt(bler (1-bler) / trials)
    double seconds = 0.0;
};

struct SimResult {
    std::vector<PointResult> points;
};

/// Validates the decoder/code pairing (hypothesis budget, enumeration guard)
/// before any trial runs; throws std::invalid_argument on a bad pairing.
void validate_sim_config(const SimConfig& config);

using ProgressFn = std::function<void(const PointResult&)>;

SimResult run_bler(const SimConfig& config, const ProgressFn& progress = nullptr);

/// Decode one LLR vector with the configured decoder (the per-trial kernel
/// of run_bler; exposed for oracle-swap tests).
DecodeResult decode_with(const SimConfig& config, const std::vector<double>& llr);

/// CRC-aided polar baseline: one forward layer holding the K + degree most
/// reliable indices of the profile, CRC-extended messages, SCL decoding with
/// CRC-based list selection.
DeepPolarCode ca_polar_baseline(std::size_t n, int k, const CrcSpec& crc,
                                const ReliabilityProfile& profile);

/// Fixed CSV contract: param,trials,block_errors,bler,ci95,bit_errors,ber,seconds
void write_csv(const SimResult& result, std::ostream& out);

/// Parse the sim JSON (schema mirrors SimConfig):
///   { "code": "path.json" | {...}, "decoder": "scl-bpc", "list": 8,
///     "channel": "awgn" | "bec", "esn0": false, "sweep": [...],
///     "max_trials": 100000, "target_errors": 200, "seed": 1 }
/// Relative code paths resolve against base_dir.
SimConfig sim_config_from_json(const std::string& json_text, const std::string& base_dir = "");
SimConfig load_sim_config(const std::string& path);

} // namespace deeppolar
