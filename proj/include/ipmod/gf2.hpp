#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ipmod::gf2 {

/// Packed vector over the two-element field.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    static BitVector unit(std::size_t size, std::size_t index);

    [[nodiscard]] std::size_t size() const { return size_; }
    [[nodiscard]] bool get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
    void set(std::size_t i, bool value = true);
    void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }

    BitVector& operator^=(const BitVector& other);
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
    friend bool operator==(const BitVector& a, const BitVector& b) = default;

    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] std::size_t popcount() const;
    /// Index of the first set bit, or size() when zero.
    [[nodiscard]] std::size_t first_set() const;
    /// Index of the last set bit, or size() when zero.
    [[nodiscard]] std::size_t last_set() const;
    /// Parity of the bitwise AND.
    [[nodiscard]] bool dot(const BitVector& other) const;

    /// Lexicographic comparison on the bit string read from index 0.
    [[nodiscard]] bool lex_less(const BitVector& other) const;

    [[nodiscard]] std::string to_string() const;

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Dense row-major bit matrix. A matrix with `cols` columns acts on vectors of length `cols`.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);

    static BitMatrix identity(std::size_t n);
    static BitMatrix from_rows(const std::vector<BitVector>& rows, std::size_t cols);
    static BitMatrix from_columns(const std::vector<BitVector>& columns, std::size_t rows);
    /// Parses rows like {"101", "011"}.
    static BitMatrix from_strings(const std::vector<std::string>& rows);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] bool empty() const { return rows_ == 0 || cols_ == 0; }

    [[nodiscard]] bool get(std::size_t r, std::size_t c) const { return data_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool value = true) { data_[r].set(c, value); }
    void flip(std::size_t r, std::size_t c) { data_[r].flip(c); }

    [[nodiscard]] const BitVector& row(std::size_t r) const { return data_[r]; }
    BitVector& row(std::size_t r) { return data_[r]; }
    [[nodiscard]] BitVector column(std::size_t c) const;
    [[nodiscard]] std::vector<BitVector> columns() const;

    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] BitMatrix transpose() const;
    [[nodiscard]] BitVector apply(const BitVector& v) const;

    BitMatrix& operator+=(const BitMatrix& other);
    friend BitMatrix operator+(BitMatrix a, const BitMatrix& b) { return a += b; }
    friend BitMatrix operator*(const BitMatrix& a, const BitMatrix& b);
    friend bool operator==(const BitMatrix& a, const BitMatrix& b) = default;

    [[nodiscard]] std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BitVector> data_;
};

/// Reduced row echelon form with first-nonzero pivot choice.
struct EchelonForm {
    BitMatrix reduced;
    std::vector<std::size_t> pivot_columns;  // pivot column of row i, increasing

    [[nodiscard]] std::size_t rank() const { return pivot_columns.size(); }
};

EchelonForm rref(BitMatrix m);

std::size_t rank(const BitMatrix& m);

/// Canonical basis of {x : m x = 0}, one vector per free column, read off the reduced form.
std::vector<BitVector> kernel_basis(const BitMatrix& m);

/// Reduced basis of the column space of m (rows of rref(m^T)).
std::vector<BitVector> column_space_basis(const BitMatrix& m);

/// Some x with m x = b, or nullopt when b is outside the column space.
std::optional<BitVector> solve(const BitMatrix& m, const BitVector& b);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<BitMatrix> inverse(const BitMatrix& m);

}  // namespace ipmod::gf2
