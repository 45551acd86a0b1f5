#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hsto {

// C(n, m) mod 2 via Lucas: odd iff the bits of m are a subset of the bits of n.
inline bool binom_parity(std::uint64_t n, std::uint64_t m) {
    return m <= n && (m & ~n) == 0;
}

// (p_1 + ... + p_r)! / (p_1! ... p_r!) mod 2: odd iff the parts are pairwise bit-disjoint.
bool multinomial_parity(std::span<const std::uint64_t> parts);

class F2Vector {
public:
    F2Vector() = default;
    explicit F2Vector(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }
    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v = true) {
        std::uint64_t bit = std::uint64_t{1} << (i & 63);
        if (v) w_[i >> 6] |= bit; else w_[i >> 6] &= ~bit;
    }
    void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t{1} << (i & 63); }
    bool is_zero() const;
    std::size_t weight() const;

    F2Vector& operator^=(const F2Vector& o);
    friend F2Vector operator^(F2Vector a, const F2Vector& b) { return a ^= b; }
    friend bool operator==(const F2Vector&, const F2Vector&) = default;

    std::vector<std::uint64_t>& words() { return w_; }
    const std::vector<std::uint64_t>& words() const { return w_; }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

// Dense bit-packed matrix over F2, row-major.
class F2Matrix {
public:
    F2Matrix() = default;
    F2Matrix(std::size_t rows, std::size_t cols);
    static F2Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const {
        return (data_[r * stride_ + (c >> 6)] >> (c & 63)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool v = true) {
        std::uint64_t bit = std::uint64_t{1} << (c & 63);
        auto& w = data_[r * stride_ + (c >> 6)];
        if (v) w |= bit; else w &= ~bit;
    }
    void flip(std::size_t r, std::size_t c) {
        data_[r * stride_ + (c >> 6)] ^= std::uint64_t{1} << (c & 63);
    }

    F2Vector row(std::size_t r) const;
    F2Vector column(std::size_t c) const;
    void set_column(std::size_t c, const F2Vector& v);

    F2Matrix transpose() const;
    F2Vector apply(const F2Vector& v) const;
    bool is_zero() const;

    friend F2Matrix operator*(const F2Matrix& a, const F2Matrix& b);
    friend F2Matrix operator+(const F2Matrix& a, const F2Matrix& b);
    friend bool operator==(const F2Matrix&, const F2Matrix&) = default;

    std::string to_string() const;

private:
    std::size_t rows_ = 0, cols_ = 0, stride_ = 0;
    std::vector<std::uint64_t> data_;
};

struct RankKernel {
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;    // pivot column of each nonzero row of the echelon form
    std::vector<F2Vector> kernel;       // one vector per free column, reduced echelon form
};

// Gaussian elimination on rows; kernel vectors have a single 1 among the free columns.
RankKernel rank_kernel(const F2Matrix& m);
std::size_t rank(const F2Matrix& m);
// Rank by eliminating columns instead of rows.
std::size_t column_rank(const F2Matrix& m);
// Some x with m x = b, if one exists.
std::optional<F2Vector> solve(const F2Matrix& m, const F2Vector& b);

} // namespace hsto

namespace hsto {

// Growing span of vectors kept in echelon form.
class F2Span {
public:
    explicit F2Span(std::size_t n) : n_(n) {}
    // Reduces v against the basis; returns true if v was independent (and adds it).
    bool add(F2Vector v);
    bool contains(F2Vector v) const;
    std::size_t dim() const { return basis_.size(); }

private:
    void reduce(F2Vector& v) const;
    std::size_t n_;
    std::vector<F2Vector> basis_;
    std::vector<std::size_t> lead_;
};

// Matrix whose columns are the given vectors (all of length rows).
F2Matrix from_columns(const std::vector<F2Vector>& cols, std::size_t rows);

} // namespace hsto
