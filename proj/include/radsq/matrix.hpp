#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "radsq/field.hpp"

namespace radsq {

/// Dense row-major matrix of residues. Carries no field; the arithmetic
/// routines below take the Field explicitly.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> data);

    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
    static Matrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Scalar operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    std::vector<Scalar> column(std::size_t c) const;
    void set_column(std::size_t c, std::span<const Scalar> v);

    const std::vector<Scalar>& data() const noexcept { return data_; }

    bool is_zero() const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

std::string to_string(const Matrix& m);

namespace linalg {

Matrix multiply(const Field& f, const Matrix& a, const Matrix& b);
Matrix add(const Field& f, const Matrix& a, const Matrix& b);
Matrix subtract(const Field& f, const Matrix& a, const Matrix& b);
Matrix scaled(const Field& f, const Matrix& a, Scalar s);
Matrix transpose(const Matrix& a);
Matrix hconcat(const Matrix& a, const Matrix& b);
Matrix vconcat(const Matrix& a, const Matrix& b);
/// Columns [first, first + count) of a.
Matrix column_block(const Matrix& a, std::size_t first, std::size_t count);
Matrix select_columns(const Matrix& a, std::span<const std::size_t> columns);

struct Echelon {
    Matrix reduced;                  ///< reduced row echelon form
    std::vector<std::size_t> pivots; ///< pivot column of each nonzero row
};

/// Reduced row echelon form by first-nonzero pivoting.
Echelon echelon(const Field& f, Matrix a);

std::size_t rank(const Field& f, const Matrix& a);

/// Columns form a basis of { x : a x = 0 }; shape cols(a) x nullity.
Matrix kernel_basis(const Field& f, const Matrix& a);

/// A subset of the columns of a forming a basis of its column space.
Matrix column_space_basis(const Field& f, const Matrix& a);

/// Some X with a X = b, or nullopt when the system is inconsistent.
std::optional<Matrix> solve(const Field& f, const Matrix& a, const Matrix& b);

/// Standard basis vectors completing the columns of u to a basis, chosen in
/// index order. u must have independent columns.
Matrix complement_basis(const Field& f, const Matrix& u);

bool is_invertible(const Field& f, const Matrix& a);
Matrix inverse(const Field& f, const Matrix& a);

} // namespace linalg
} // namespace radsq
