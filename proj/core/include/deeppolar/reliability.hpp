#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace deeppolar {

enum class ProfileKind { bec_capacity, dega_mean_llr, rank_order };

/// Per-bit-channel reliability scores for one blocklength; higher is more
/// reliable. Index i of values corresponds to bit channel i+1.
struct ReliabilityProfile {
    std::size_t n = 0;
    ProfileKind kind = ProfileKind::bec_capacity;
    double channel_param = 0.0; ///< erasure probability or design SNR (dB)
    std::vector<double> values;

    /// Indices 1..n sorted most reliable first; equal values break toward
    /// the larger index.
    std::vector<int> order_descending() const;
};

/// Exact BEC bit-channel capacities I(W_N^(i)) from the erasure-probability
/// recursion Z- = 2Z - Z^2, Z+ = Z^2, I = 1 - Z, in natural bit order.
ReliabilityProfile bec_profile(std::size_t n, double eps);

/// Mean LLRs from density evolution with the Gaussian approximation for the
/// BI-AWGN channel at the given design Eb/N0; rate only enters the noise
/// variance conversion sigma^2 = 1 / (2 R 10^(EbN0/10)).
ReliabilityProfile dega_profile(std::size_t n, double design_snr_db, double rate);

/// Rank-order profile from an explicit ordering (most reliable first).
/// ordering must be a permutation of 1..N.
ReliabilityProfile sequence_profile(const std::vector<int>& ordering);

/// All bit channels of the transpose transform equal the raw channel, so the
/// profile is flat and index selection falls entirely to the tie rule.
ReliabilityProfile flat_profile(std::size_t n, ProfileKind kind, double channel_param, double value);

/// Load a reliability sequence: whitespace-separated 1-based indices, most
/// reliable first; '#' starts a comment line.
std::vector<int> load_sequence_file(const std::string& path);

/// Keep the entries <= n, preserving order. The bundled 3GPP sequence is
/// nested, so this yields the sequence for any shorter blocklength.
std::vector<int> restrict_sequence(const std::vector<int>& seq, std::size_t n);

/// Parsed form of a profile selector "bec:EPS", "dega:SNR_DB" or "seq:PATH".
/// The dega design point is an Es/N0 figure in dB. The special path "5g"
/// resolves to the bundled 3GPP sequence (override the directory with the
/// DEEPPOLAR_DATA_DIR environment variable).
struct ProfileSpec {
    ProfileKind kind = ProfileKind::bec_capacity;
    double param = 0.0;
    std::string sequence_path;

    static ProfileSpec parse(const std::string& text);

    /// Profile for the outer (forward transform) layer.
    ReliabilityProfile build(std::size_t n, double rate) const;
    /// Profile for an inner (transpose transform) layer.
    ReliabilityProfile build_inner(std::size_t n, double rate) const;

    std::string to_string() const;
};

/// GA function phi(m) = 1 - E[tanh(L/2)], L ~ N(m, 2m), and its inverse.
/// Two-regime approximation; the crossover is at m = 10.
double dega_phi(double m);
double dega_phi_inv(double y);

} // namespace deeppolar
