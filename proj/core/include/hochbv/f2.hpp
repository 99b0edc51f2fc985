#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hochbv {

/* Bit-packed vector over the two-element field.  Canonical form: unused
 * high bits of the last word stay zero, so operator== is plain word
 * comparison. */
class F2Vector {
public:
    F2Vector() = default;
    explicit F2Vector(std::size_t len) : len_(len), words_((len + 63) / 64, 0) {}

    static F2Vector basis(std::size_t len, std::size_t i);
    static F2Vector from_bits(std::initializer_list<int> bits);

    std::size_t size() const { return len_; }
    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v);
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    bool is_zero() const;
    std::size_t popcount() const;
    std::vector<std::size_t> support() const;

    F2Vector& operator^=(const F2Vector& o);
    friend F2Vector operator^(F2Vector a, const F2Vector& b) { a ^= b; return a; }

    // parity of the coordinatewise product
    bool dot(const F2Vector& o) const;

    bool operator==(const F2Vector&) const = default;
    auto operator<=>(const F2Vector&) const = default;

    // "0110..."; leftmost character is coordinate 0
    std::string str() const;

private:
    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;
};

class F2Matrix {
public:
    F2Matrix() = default;
    F2Matrix(std::size_t rows, std::size_t cols)
        : cols_(cols), rows_(rows, F2Vector(cols)) {}

    static F2Matrix identity(std::size_t n);
    static F2Matrix from_rows(std::vector<F2Vector> rows);
    // rows given as bit lists, e.g. {{1,0,1},{0,1,1}}
    static F2Matrix from_bits(std::initializer_list<std::initializer_list<int>> rows);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool v) { rows_[r].set(c, v); }
    const F2Vector& row(std::size_t r) const { return rows_[r]; }
    F2Vector& row(std::size_t r) { return rows_[r]; }
    void append_row(F2Vector v);
    void append_col(const F2Vector& v);

    F2Vector mul(const F2Vector& x) const;  // length rows(), x of length cols()
    F2Matrix mul(const F2Matrix& o) const;
    F2Matrix transposed() const;

    bool operator==(const F2Matrix&) const = default;
    std::string str() const;

private:
    std::size_t cols_ = 0;
    std::vector<F2Vector> rows_;
};

/* Row reduction with deterministic pivoting: columns scanned left to
 * right, pivot row is the first row (top to bottom) with a nonzero entry
 * in the current column.  Reduces in place to reduced row-echelon form
 * and returns the pivot columns. */
std::vector<std::size_t> row_reduce(F2Matrix& m);

std::size_t rank(const F2Matrix& m);

// basis of {x : m x = 0}, one vector per free column, deterministic order
std::vector<F2Vector> kernel_basis(const F2Matrix& m);

// one solution of m x = b with free coordinates set to zero, or nullopt
std::optional<F2Vector> solve(const F2Matrix& m, const F2Vector& b);

std::optional<F2Matrix> inverse(const F2Matrix& m);

/* Incremental echelon container keyed by pivot position.  residue()
 * reduces a vector by the stored rows; insert() keeps the residue when it
 * is nonzero. */
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t width) : width_(width) {}

    F2Vector residue(F2Vector v) const;
    bool insert(F2Vector v);
    std::size_t dim() const { return by_pivot_.size(); }
    std::size_t width() const { return width_; }
    bool contains(const F2Vector& v) const { return residue(v).is_zero(); }
    std::vector<F2Vector> rows() const;

private:
    std::size_t width_;
    std::map<std::size_t, F2Vector> by_pivot_;
};

}  // namespace hochbv
