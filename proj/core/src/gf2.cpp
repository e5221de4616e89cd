#include "deeppolar/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace deeppolar {

namespace {

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

void require_pow2(std::size_t n) {
    if (!is_pow2(n)) throw std::invalid_argument("length " + std::to_string(n) + " is not a power of two");
}

// Repeating mask with d ones then d zeros, d in {1,2,...,32}.
uint64_t stage_mask(unsigned d) {
    if (d == 64) return ~uint64_t(0);
    uint64_t block = (uint64_t(1) << d) - 1;
    uint64_t m = 0;
    for (unsigned s = 0; s < 64; s += 2 * d) m |= block << s;
    return m;
}

} // namespace

std::size_t row_weight(std::size_t n, std::size_t i) {
    require_pow2(n);
    if (i < 1 || i > n) throw std::invalid_argument("row index out of range");
    return std::size_t(1) << std::popcount(uint64_t(i - 1));
}

std::size_t transpose_row_weight(std::size_t n, std::size_t i) {
    require_pow2(n);
    if (i < 1 || i > n) throw std::invalid_argument("row index out of range");
    unsigned lg = unsigned(std::countr_zero(uint64_t(n)));
    return std::size_t(1) << (lg - unsigned(std::popcount(uint64_t(i - 1))));
}

void polar_transform_inplace(BitVector& u) {
    std::size_t n = u.size();
    require_pow2(n);
    auto& w = u.words();
    // lower half of each 2d block absorbs the upper half: u[i] ^= u[i+d]
    for (std::size_t d = 1; d < n; d <<= 1) {
        if (d < 64) {
            uint64_t m = stage_mask(unsigned(d));
            for (auto& word : w) word ^= (word >> d) & m;
        } else {
            std::size_t dw = d >> 6;
            for (std::size_t b = 0; b < w.size(); b += 2 * dw)
                for (std::size_t i = 0; i < dw; ++i) w[b + i] ^= w[b + dw + i];
        }
    }
}

BitVector polar_transform(BitVector u) {
    polar_transform_inplace(u);
    return u;
}

void transpose_transform_inplace(BitVector& u) {
    std::size_t n = u.size();
    require_pow2(n);
    auto& w = u.words();
    // upper half absorbs the lower half: u[i+d] ^= u[i]
    for (std::size_t d = 1; d < n; d <<= 1) {
        if (d < 64) {
            uint64_t m = stage_mask(unsigned(d));
            for (auto& word : w) word ^= (word & m) << d;
        } else {
            std::size_t dw = d >> 6;
            for (std::size_t b = 0; b < w.size(); b += 2 * dw)
                for (std::size_t i = 0; i < dw; ++i) w[b + dw + i] ^= w[b + i];
        }
    }
}

BitVector transpose_transform(BitVector u) {
    transpose_transform_inplace(u);
    return u;
}

BitVector transpose_transform_prefix(const BitVector& prefix, std::size_t n) {
    require_pow2(n);
    std::size_t k = prefix.size();
    if (k < 1 || k > n) throw std::invalid_argument("prefix length must be in [1, N]");
    std::size_t m = std::bit_ceil(k);
    BitVector padded(m);
    for (std::size_t i = 0; i < k; ++i) padded.set(i, prefix.get(i));
    transpose_transform_inplace(padded);
    BitVector out(k);
    for (std::size_t i = 0; i < k; ++i) out.set(i, padded.get(i));
    return out;
}

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), words_(rows * wpr_, 0) {}

void Gf2Matrix::xor_row(std::size_t dst, std::size_t src) {
    for (std::size_t i = 0; i < wpr_; ++i) words_[dst * wpr_ + i] ^= words_[src * wpr_ + i];
}

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
    Gf2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

Gf2Matrix Gf2Matrix::transposed() const {
    Gf2Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t w = 0; w < wpr_; ++w) {
            uint64_t word = words_[r * wpr_ + w];
            while (word) {
                unsigned b = unsigned(std::countr_zero(word));
                word &= word - 1;
                t.set(w * 64 + b, r, true);
            }
        }
    return t;
}

BitVector Gf2Matrix::mul_left(const BitVector& v) const {
    if (v.size() != rows_) throw std::invalid_argument("vector/matrix size mismatch");
    BitVector out(cols_);
    auto& ow = out.words();
    for (std::size_t r = 0; r < rows_; ++r)
        if (v.get(r))
            for (std::size_t i = 0; i < wpr_; ++i) ow[i] ^= words_[r * wpr_ + i];
    return out;
}

Gf2Matrix polar_generator_matrix(std::size_t n) {
    require_pow2(n);
    Gf2Matrix g = Gf2Matrix::identity(1);
    for (std::size_t m = 1; m < n; m <<= 1) {
        Gf2Matrix next(2 * m, 2 * m);
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t c = 0; c < m; ++c)
                if (g.get(r, c)) {
                    next.set(r, c, true);
                    next.set(r + m, c, true);
                    next.set(r + m, c + m, true);
                }
        g = next;
    }
    return g;
}

Gf2Solution gf2_solve(const Gf2Matrix& a, const BitVector& b) {
    if (a.rows() != b.size()) throw std::invalid_argument("gf2_solve: A rows != b length");
    std::size_t rows = a.rows(), cols = a.cols();

    // augmented working copy
    Gf2Matrix w(rows, cols + 1);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c)
            if (a.get(r, c)) w.set(r, c, true);
        if (b.get(r)) w.set(r, cols, true);
    }

    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && !w.get(p, c)) ++p;
        if (p == rows) continue;
        if (p != rank)
            for (std::size_t i = 0; i <= cols; ++i) {
                bool t = w.get(p, i);
                w.set(p, i, w.get(rank, i));
                w.set(rank, i, t);
            }
        for (std::size_t r = 0; r < rows; ++r)
            if (r != rank && w.get(r, c)) w.xor_row(r, rank);
        pivot_col.push_back(c);
        ++rank;
    }

    for (std::size_t r = rank; r < rows; ++r)
        if (w.get(r, cols)) return {SolveStatus::none, BitVector(cols)};

    Gf2Solution sol;
    sol.x = BitVector(cols);
    for (std::size_t r = 0; r < rank; ++r) sol.x.set(pivot_col[r], w.get(r, cols));
    sol.status = (rank == cols) ? SolveStatus::unique : SolveStatus::multiple;
    return sol;
}

} // namespace deeppolar
