#include "hsto/f2core.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace hsto {

bool multinomial_parity(std::span<const std::uint64_t> parts) {
    std::uint64_t seen = 0;
    for (auto p : parts) {
        if (seen & p) return false;
        seen |= p;
    }
    return true;
}

bool F2Vector::is_zero() const {
    return std::all_of(w_.begin(), w_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t F2Vector::weight() const {
    std::size_t n = 0;
    for (auto w : w_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

F2Vector& F2Vector::operator^=(const F2Vector& o) {
    if (o.n_ != n_) throw std::invalid_argument("F2Vector size mismatch");
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
}

F2Matrix::F2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_((cols + 63) / 64), data_(rows * ((cols + 63) / 64), 0) {}

F2Matrix F2Matrix::identity(std::size_t n) {
    F2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
}

F2Vector F2Matrix::row(std::size_t r) const {
    F2Vector v(cols_);
    std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>(r * stride_), stride_, v.words().begin());
    return v;
}

F2Vector F2Matrix::column(std::size_t c) const {
    F2Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        if (get(r, c)) v.set(r);
    return v;
}

void F2Matrix::set_column(std::size_t c, const F2Vector& v) {
    if (v.size() != rows_) throw std::invalid_argument("set_column: size mismatch");
    for (std::size_t r = 0; r < rows_; ++r) set(r, c, v.get(r));
}

F2Matrix F2Matrix::transpose() const {
    F2Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (get(r, c)) t.set(c, r);
    return t;
}

F2Vector F2Matrix::apply(const F2Vector& v) const {
    if (v.size() != cols_) throw std::invalid_argument("apply: size mismatch");
    F2Vector out(rows_);
    const auto& vw = v.words();
    for (std::size_t r = 0; r < rows_; ++r) {
        std::uint64_t acc = 0;
        const std::uint64_t* row = data_.data() + r * stride_;
        for (std::size_t w = 0; w < stride_; ++w) acc ^= row[w] & vw[w];
        if (std::popcount(acc) & 1) out.set(r);
    }
    return out;
}

bool F2Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](std::uint64_t w) { return w == 0; });
}

F2Matrix operator*(const F2Matrix& a, const F2Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: size mismatch");
    F2Matrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
        std::uint64_t* orow = out.data_.data() + r * out.stride_;
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (!a.get(r, k)) continue;
            const std::uint64_t* brow = b.data_.data() + k * b.stride_;
            for (std::size_t w = 0; w < b.stride_; ++w) orow[w] ^= brow[w];
        }
    }
    return out;
}

F2Matrix operator+(const F2Matrix& a, const F2Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum: size mismatch");
    F2Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] ^= b.data_[i];
    return out;
}

std::string F2Matrix::to_string() const {
    std::string s;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) s += get(r, c) ? '1' : '0';
        s += '\n';
    }
    return s;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(std::vector<F2Vector>& rows, std::size_t ncols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && !rows[p].get(c)) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != r && rows[i].get(c)) rows[i] ^= rows[r];
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::vector<F2Vector> rows_of(const F2Matrix& m) {
    std::vector<F2Vector> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
    return rows;
}

} // namespace

RankKernel rank_kernel(const F2Matrix& m) {
    auto rows = rows_of(m);
    RankKernel out;
    out.pivots = rref(rows, m.cols());
    out.rank = out.pivots.size();

    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : out.pivots) is_pivot[c] = true;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        F2Vector v(m.cols());
        v.set(f);
        for (std::size_t i = 0; i < out.pivots.size(); ++i)
            if (rows[i].get(f)) v.set(out.pivots[i]);
        out.kernel.push_back(std::move(v));
    }
    return out;
}

std::size_t rank(const F2Matrix& m) {
    auto rows = rows_of(m);
    return rref(rows, m.cols()).size();
}

std::size_t column_rank(const F2Matrix& m) {
    std::vector<F2Vector> cols;
    cols.reserve(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));
    return rref(cols, m.rows()).size();
}

std::optional<F2Vector> solve(const F2Matrix& m, const F2Vector& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve: size mismatch");
    std::vector<F2Vector> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        F2Vector row(m.cols() + 1);
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m.get(r, c)) row.set(c);
        if (b.get(r)) row.set(m.cols());
        rows.push_back(std::move(row));
    }
    auto pivots = rref(rows, m.cols() + 1);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    F2Vector x(m.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i)
        if (rows[i].get(m.cols())) x.set(pivots[i]);
    return x;
}

} // namespace hsto

namespace hsto {

namespace {

std::size_t leading_bit(const F2Vector& v) {
    const auto& w = v.words();
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(w[i]));
    return v.size();
}

} // namespace

void F2Span::reduce(F2Vector& v) const {
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (v.get(lead_[i])) v ^= basis_[i];
}

bool F2Span::add(F2Vector v) {
    if (v.size() != n_) throw std::invalid_argument("F2Span: size mismatch");
    reduce(v);
    std::size_t lead = leading_bit(v);
    if (lead == n_) return false;
    // keep basis fully reduced at the new pivot
    for (auto& b : basis_)
        if (b.get(lead)) b ^= v;
    basis_.push_back(std::move(v));
    lead_.push_back(lead);
    return true;
}

bool F2Span::contains(F2Vector v) const {
    reduce(v);
    return v.is_zero();
}

F2Matrix from_columns(const std::vector<F2Vector>& cols, std::size_t rows) {
    F2Matrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(c, cols[c]);
    return m;
}

} // namespace hsto
