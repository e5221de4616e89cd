#pragma once

#include "deeppolar/channel.hpp"
#include "deeppolar/construction.hpp"

#include <cstdint>
#include <vector>

namespace deeppolar {

struct DecodeDiagnostics {
    long long paths_killed_bpc = 0; ///< list entries removed by a failed parity check
    long long paths_pruned = 0;     ///< list entries removed by metric pruning
};

struct DecodeResult {
    BitVector message;                 ///< K message bits, CRC stripped
    std::vector<BitVector> layer_bits; ///< decoded info bits per layer, ascending
    bool success = false;
    double best_metric = 0.0;
    DecodeDiagnostics diag;
};

/// Contiguous split of an extended message into per-layer info vectors,
/// ascending layer order. d_ext.size() must equal code.info_total().
std::vector<BitVector> split_message(const BitVector& d_ext, const DeepPolarCode& code);

/// Successive deep polar encoding. d carries message_length() bits; the CRC
/// is appended internally when configured. Layer l < L multiplies by
/// G^T_{N_l}, its output lands on the next layer's connection set in
/// ascending index order, and the last layer applies the forward transform.
BitVector encode(const DeepPolarCode& code, const BitVector& d);

/// Per-path view exposed to traces and tests.
struct LayerPrefixState {
    int consumed = 0;    ///< connection bits of the layer above consumed so far
    BitVector recovered; ///< recovered input prefix of this layer
};

struct DecoderPath {
    BitVector decoded_prefix; ///< u_{L,1:i} decided so far
    double path_metric = 0.0;
    std::vector<LayerPrefixState> layer_state; ///< one entry per inner layer
};

/// Alive list after every bit position, for list-behaviour tests.
struct SclTrace {
    std::vector<std::vector<DecoderPath>> steps;
};

struct SclOptions {
    bool min_sum = false;          ///< approximate check-node update (CLI option)
    bool full_bpc_recheck = false; ///< recompute every parity check from scratch and compare
    SclTrace* trace = nullptr;
};

struct FinalPath {
    BitVector u_last; ///< complete last-layer input vector
    double metric = 0.0;
};

struct SclOutcome {
    DecodeResult result;
    std::vector<FinalPath> paths; ///< surviving paths, best metric first
};

/// SCL with backpropagation parity checks. llr uses the ln p(y|0)/p(y|1)
/// convention, one entry per codeword position. With list_size 1 this is the
/// SC decoder with parity checks. When the CRC is configured the most
/// reliable CRC-passing path is selected, falling back to the best metric.
/// If a checkpoint would kill every path, the kill is skipped and the decode
/// completes without further checks, flagged success = false.
DecodeResult scl_bpc_decode(const DeepPolarCode& code, const std::vector<double>& llr,
                            int list_size, const SclOptions& options = {});

/// Same, also returning every surviving path (for weight searches).
SclOutcome scl_bpc_decode_full(const DeepPolarCode& code, const std::vector<double>& llr,
                               int list_size, const SclOptions& options = {});

/// Pure predicate: the backpropagation parity check on a decided prefix
/// u_{L,1:i}, recomputed from scratch. Gathers the decided connection bits,
/// applies the self-inverse prefix transform per inner layer and checks that
/// every recovered frozen position is zero, recursing through the layers.
bool bpc_prefix_check(const DeepPolarCode& code, const BitVector& u_last_prefix);

/// One SCL run per connection-bit hypothesis: the 2^(K_total - K_L) inner
/// bit patterns are encoded through the inner layers and frozen onto the
/// outer connection set; the hypothesis whose best final path metric is
/// smallest wins. Throws std::invalid_argument beyond hypothesis_budget.
DecodeResult parallel_scl_decode(const DeepPolarCode& code, const std::vector<double>& llr,
                                 int list_size, std::size_t hypothesis_budget = std::size_t(1) << 16,
                                 const SclOptions& options = {});

std::size_t parallel_scl_hypothesis_count(const DeepPolarCode& code);

/// Exhaustive ML decoding by codeword enumeration, guarded at 2^K <= 2^26.
/// ml_decode_llr maximizes the correlation sum (1-2c_i) llr_i, which equals
/// squared-distance ML for any monotone per-position weighting; ties break
/// toward the lexicographically smallest message.
DecodeResult ml_decode_llr(const DeepPolarCode& code, const std::vector<double>& llr);
/// Squared Euclidean distance against BPSK observations y.
DecodeResult ml_decode_awgn(const DeepPolarCode& code, const std::vector<double>& y);

struct BecMlOutcome {
    DecodeResult result;
    SolveStatus status = SolveStatus::multiple; ///< unique, multiple (ambiguous) or none
};

/// Erasure-channel ML: solve the generator system restricted to unerased
/// positions. A unique solution decodes exactly; rank deficiency is reported
/// as ambiguous and counts as a block error.
BecMlOutcome ml_decode_bec(const DeepPolarCode& code, const std::vector<double>& llr);

/// Reverse of the encoder on a complete last-layer input vector: peels each
/// inner layer with the transpose transform and concatenates the per-layer
/// info bits (CRC bits included when configured).
BitVector extract_extended_message(const DeepPolarCode& code, const BitVector& u_last);

/// Maximum number of messages an enumerating decoder will visit.
inline constexpr int kMlEnumerationGuard = 26;

} // namespace deeppolar
