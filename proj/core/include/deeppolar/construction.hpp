#pragma once

#include "deeppolar/crc.hpp"
#include "deeppolar/gf2.hpp"
#include "deeppolar/reliability.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace deeppolar {

/// Thrown when a requested code cannot be built; the message names the
/// violated constraint.
struct construction_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class LayerDirection { transpose, forward };

/// One encoding layer. Index sets are 1-based and sorted ascending;
/// info_set, conn_set and frozen_set partition 1..n.
struct LayerSpec {
    int n = 0;
    int k = 0;
    int d_min = 1;
    LayerDirection direction = LayerDirection::forward;
    std::vector<int> info_set;
    std::vector<int> conn_set;
    std::vector<int> frozen_set;
};

/// Full description of a deep polar code: layers sorted by strictly
/// increasing blocklength, the last one forward, plus an optional CRC
/// prepended to the message before the layer split.
struct DeepPolarCode {
    std::vector<LayerSpec> layers;
    std::optional<CrcSpec> crc;

    int block_length() const { return layers.back().n; }
    int num_layers() const { return int(layers.size()); }
    /// Message bits carried per block, excluding CRC bits.
    int message_length() const;
    /// Sum of layer payloads = message_length() + CRC degree.
    int info_total() const;
    double rate() const { return double(message_length()) / block_length(); }
    int crc_bits() const { return crc ? crc->degree : 0; }
};

/// Indices whose G_N row weight is at least d_min, ascending.
std::vector<int> rm_mask(std::size_t n, std::size_t d_min);
/// Same for G_N^T rows (inner layers see the transpose transform).
std::vector<int> transpose_rm_mask(std::size_t n, std::size_t d_min);

/// Select the layer's index sets from a reliability profile: the k most
/// reliable mask indices become the information set, the next n_prev the
/// connection set, the rest of 1..n is frozen. Throws construction_error
/// when the mask cannot host k + n_prev indices.
LayerSpec build_layer(int n, int k, int d_min, const ReliabilityProfile& profile,
                      int n_prev, LayerDirection direction);

/// Per-layer inputs for build_code. d_min == 0 selects the largest power of
/// two whose mask still hosts the layer payload plus connection bits.
/// Explicit info/conn sets override the reliability selection: the transpose
/// bit channels are all equally reliable, so which mask indices of an inner
/// layer carry information is a free design choice, and the shipped deep
/// configurations pin sets found by a weight-spectrum search.
struct LayerConfig {
    int n = 0;
    int k = 0;
    int d_min = 0;
    std::vector<int> info; ///< optional explicit information set (1-based)
    std::vector<int> conn; ///< optional explicit connection set (1-based)
};

struct CodeConfig {
    std::vector<LayerConfig> layers; ///< any order; normalized by blocklength
    ProfileSpec profile;
    std::optional<CrcSpec> crc;
};

DeepPolarCode build_code(const CodeConfig& config);

/// Parse the JSON code description:
///   { "layers": [{"n":..,"k":..,"dmin":..}, ...],
///     "profile": "bec:0.5" | "dega:1.5" | "seq:PATH",
///     "crc": "0x61" | null }
/// Relative sequence paths resolve against base_dir (the config file's
/// directory when loading from disk).
CodeConfig code_config_from_json(const std::string& json_text, const std::string& base_dir = "");
CodeConfig load_code_config(const std::string& path);
DeepPolarCode load_code(const std::string& path);

/// The message embedding w used by the unified pre-transform view: layer L
/// info bits sit at the outer information set, and each inner layer's input
/// vector is nested at the connection positions (ascending) of the layer
/// above. Everything else is zero. d_ext includes CRC bits when present.
BitVector pretransform_input_vector(const DeepPolarCode& code, const BitVector& d_ext);

/// N x N matrix T with encode(d) == pretransform_input_vector(d_ext) * T * G_N.
/// Inner pre-transforms are applied layer 1 upward on their nested
/// coordinates; rows at the outer frozen set are zeroed, which leaves the
/// product unchanged because those inputs are zero. For L = 1 this is the
/// identity with frozen rows cleared.
Gf2Matrix unified_pretransform(const DeepPolarCode& code);

} // namespace deeppolar
