#pragma once

#include "deeppolar/bitvec.hpp"

#include <cstdint>
#include <vector>

namespace deeppolar {

/// Hamming weight of row i (1-based) of G_N, N a power of two.
/// Equals 2^popcount(i-1).
std::size_t row_weight(std::size_t n, std::size_t i);

/// Hamming weight of row i (1-based) of G_N^T, i.e. column weight of G_N.
std::size_t transpose_row_weight(std::size_t n, std::size_t i);

/// In-place butterfly computing u <- u * G_N with G_N = G_2^{(x)n} in natural
/// order (no bit-reversal permutation). O(N log N) XORs on packed words.
void polar_transform_inplace(BitVector& u);
BitVector polar_transform(BitVector u);

/// u <- u * G_N^T. Self inverse.
void transpose_transform_inplace(BitVector& u);
BitVector transpose_transform(BitVector u);

/// prefix * G^T_{N,1:k} where k = prefix.size() and G^T_{N,1:k} is the
/// upper-left k x k submatrix of G_N^T. Because G^T is upper triangular the
/// result equals the first k outputs of the full transform on a zero-padded
/// input, and the k x k leading block is the same for every N >= k.
/// Self inverse for every k. Requires 1 <= k <= N, N a power of two.
BitVector transpose_transform_prefix(const BitVector& prefix, std::size_t n);

/// Dense GF(2) matrix, packed row-major. Used for pre-transform oracles and
/// erasure-channel ML solving; the transform kernels above never touch it.
class Gf2Matrix {
public:
    Gf2Matrix() = default;
    Gf2Matrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const {
        return (words_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1;
    }
    void set(std::size_t r, std::size_t c, bool v) {
        uint64_t m = uint64_t(1) << (c & 63);
        uint64_t& w = words_[r * wpr_ + (c >> 6)];
        if (v) w |= m; else w &= ~m;
    }

    void xor_row(std::size_t dst, std::size_t src);

    static Gf2Matrix identity(std::size_t n);
    Gf2Matrix transposed() const;

    /// Row vector times matrix: v.size() == rows().
    BitVector mul_left(const BitVector& v) const;

    bool operator==(const Gf2Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && words_ == o.words_;
    }

private:
    std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<uint64_t> words_;
};

/// G_N built by Kronecker doubling: G_{2N} = [[G_N, 0], [G_N, G_N]].
Gf2Matrix polar_generator_matrix(std::size_t n);

enum class SolveStatus { unique, none, multiple };

struct Gf2Solution {
    SolveStatus status = SolveStatus::none;
    BitVector x; ///< a solution when status != none (free variables set to 0)
};

/// Solve A x = b over GF(2) by Gaussian elimination.
/// Requires A.rows() == b.size().
Gf2Solution gf2_solve(const Gf2Matrix& a, const BitVector& b);

} // namespace deeppolar
