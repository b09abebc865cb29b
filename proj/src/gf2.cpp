#include "ipmod/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace ipmod::gf2 {

BitVector BitVector::unit(std::size_t size, std::size_t index) {
    BitVector v(size);
    v.set(index);
    return v;
}

void BitVector::set(std::size_t i, bool value) {
    const auto mask = std::uint64_t{1} << (i % 64);
    if (value) {
        words_[i / 64] |= mask;
    } else {
        words_[i / 64] &= ~mask;
    }
}

BitVector& BitVector::operator^=(const BitVector& other) {
    if (other.size_ != size_) {
        throw std::invalid_argument("BitVector size mismatch");
    }
    for (std::size_t w = 0; w < words_.size(); ++w) {
        words_[w] ^= other.words_[w];
    }
    return *this;
}

bool BitVector::is_zero() const {
    for (auto w : words_) {
        if (w != 0) {
            return false;
        }
    }
    return true;
}

std::size_t BitVector::popcount() const {
    std::size_t n = 0;
    for (auto w : words_) {
        n += static_cast<std::size_t>(std::popcount(w));
    }
    return n;
}

std::size_t BitVector::first_set() const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if (words_[w] != 0) {
            return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
        }
    }
    return size_;
}

std::size_t BitVector::last_set() const {
    for (std::size_t w = words_.size(); w-- > 0;) {
        if (words_[w] != 0) {
            return w * 64 + 63 - static_cast<std::size_t>(std::countl_zero(words_[w]));
        }
    }
    return size_;
}

bool BitVector::dot(const BitVector& other) const {
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        acc ^= words_[w] & other.words_[w];
    }
    return (std::popcount(acc) & 1) != 0;
}

bool BitVector::lex_less(const BitVector& other) const {
    for (std::size_t i = 0; i < size_ && i < other.size_; ++i) {
        if (get(i) != other.get(i)) {
            return other.get(i);
        }
    }
    return size_ < other.size_;
}

std::string BitVector::to_string() const {
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i) {
        if (get(i)) {
            s[i] = '1';
        }
    }
    return s;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows, BitVector(cols)) {}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m.set(i, i);
    }
    return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<BitVector>& rows, std::size_t cols) {
    BitMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) {
            throw std::invalid_argument("row length mismatch");
        }
        m.data_[r] = rows[r];
    }
    return m;
}

BitMatrix BitMatrix::from_columns(const std::vector<BitVector>& columns, std::size_t rows) {
    BitMatrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows) {
            throw std::invalid_argument("column length mismatch");
        }
        for (std::size_t r = 0; r < rows; ++r) {
            if (columns[c].get(r)) {
                m.set(r, c);
            }
        }
    }
    return m;
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    BitMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) {
            throw std::invalid_argument("ragged bit matrix literal");
        }
        for (std::size_t c = 0; c < cols; ++c) {
            if (rows[r][c] == '1') {
                m.set(r, c);
            } else if (rows[r][c] != '0') {
                throw std::invalid_argument("bit matrix literal must contain only 0 and 1");
            }
        }
    }
    return m;
}

BitVector BitMatrix::column(std::size_t c) const {
    BitVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        if (get(r, c)) {
            v.set(r);
        }
    }
    return v;
}

std::vector<BitVector> BitMatrix::columns() const {
    const auto t = transpose();
    std::vector<BitVector> out;
    out.reserve(cols_);
    for (std::size_t c = 0; c < cols_; ++c) {
        out.push_back(t.row(c));
    }
    return out;
}

bool BitMatrix::is_zero() const {
    for (const auto& r : data_) {
        if (!r.is_zero()) {
            return false;
        }
    }
    return true;
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (get(r, c)) {
                t.set(c, r);
            }
        }
    }
    return t;
}

BitVector BitMatrix::apply(const BitVector& v) const {
    if (v.size() != cols_) {
        throw std::invalid_argument("matrix-vector size mismatch");
    }
    BitVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        if (data_[r].dot(v)) {
            out.set(r);
        }
    }
    return out;
}

BitMatrix& BitMatrix::operator+=(const BitMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw std::invalid_argument("matrix sum shape mismatch");
    }
    for (std::size_t r = 0; r < rows_; ++r) {
        data_[r] ^= other.data_[r];
    }
    return *this;
}

BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols_ != b.rows_) {
        throw std::invalid_argument("matrix product shape mismatch");
    }
    BitMatrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (a.get(r, k)) {
                out.data_[r] ^= b.data_[k];
            }
        }
    }
    return out;
}

std::string BitMatrix::to_string() const {
    std::string s;
    for (std::size_t r = 0; r < rows_; ++r) {
        s += data_[r].to_string();
        s += '\n';
    }
    return s;
}

EchelonForm rref(BitMatrix m) {
    EchelonForm out;
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < m.cols() && pivot_row < m.rows(); ++c) {
        std::size_t r = pivot_row;
        while (r < m.rows() && !m.get(r, c)) {
            ++r;
        }
        if (r == m.rows()) {
            continue;
        }
        std::swap(m.row(r), m.row(pivot_row));
        for (std::size_t other = 0; other < m.rows(); ++other) {
            if (other != pivot_row && m.get(other, c)) {
                m.row(other) ^= m.row(pivot_row);
            }
        }
        out.pivot_columns.push_back(c);
        ++pivot_row;
    }
    out.reduced = std::move(m);
    return out;
}

std::size_t rank(const BitMatrix& m) {
    // Forward elimination only; no back substitution needed for the count.
    BitMatrix work = m;
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < work.cols() && pivot_row < work.rows(); ++c) {
        std::size_t r = pivot_row;
        while (r < work.rows() && !work.get(r, c)) {
            ++r;
        }
        if (r == work.rows()) {
            continue;
        }
        std::swap(work.row(r), work.row(pivot_row));
        for (std::size_t other = pivot_row + 1; other < work.rows(); ++other) {
            if (work.get(other, c)) {
                work.row(other) ^= work.row(pivot_row);
            }
        }
        ++pivot_row;
    }
    return pivot_row;
}

std::vector<BitVector> kernel_basis(const BitMatrix& m) {
    const auto form = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : form.pivot_columns) {
        is_pivot[c] = true;
    }
    std::vector<BitVector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) {
            continue;
        }
        BitVector v(m.cols());
        v.set(free);
        for (std::size_t i = 0; i < form.pivot_columns.size(); ++i) {
            if (form.reduced.get(i, free)) {
                v.set(form.pivot_columns[i]);
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<BitVector> column_space_basis(const BitMatrix& m) {
    const auto form = rref(m.transpose());
    std::vector<BitVector> basis;
    for (std::size_t i = 0; i < form.rank(); ++i) {
        basis.push_back(form.reduced.row(i));
    }
    return basis;
}

std::optional<BitVector> solve(const BitMatrix& m, const BitVector& b) {
    if (b.size() != m.rows()) {
        throw std::invalid_argument("solve: right-hand side length mismatch");
    }
    // Row-reduce the augmented matrix [m | b].
    BitMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (m.get(r, c)) {
                aug.set(r, c);
            }
        }
        if (b.get(r)) {
            aug.set(r, m.cols());
        }
    }
    const auto form = rref(std::move(aug));
    if (!form.pivot_columns.empty() && form.pivot_columns.back() == m.cols()) {
        return std::nullopt;
    }
    BitVector x(m.cols());
    for (std::size_t i = 0; i < form.pivot_columns.size(); ++i) {
        if (form.reduced.get(i, m.cols())) {
            x.set(form.pivot_columns[i]);
        }
    }
    return x;
}

std::optional<BitMatrix> inverse(const BitMatrix& m) {
    if (m.rows() != m.cols()) {
        return std::nullopt;
    }
    const std::size_t n = m.rows();
    BitMatrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            if (m.get(r, c)) {
                aug.set(r, c);
            }
        }
        aug.set(r, n + r);
    }
    const auto form = rref(std::move(aug));
    if (form.rank() < n || (n > 0 && form.pivot_columns[n - 1] != n - 1)) {
        return std::nullopt;
    }
    BitMatrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            if (form.reduced.get(r, n + c)) {
                inv.set(r, c);
            }
        }
    }
    return inv;
}

}  // namespace ipmod::gf2
