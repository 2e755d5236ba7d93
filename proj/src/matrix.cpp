#include "radsq/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "radsq/errors.hpp"
#include "radsq/simd/kernels.hpp"

namespace radsq {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows * cols)
        throw EngineError("matrix data size does not match shape");
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

std::vector<Scalar> Matrix::column(std::size_t c) const {
    std::vector<Scalar> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v[r] = (*this)(r, c);
    return v;
}

void Matrix::set_column(std::size_t c, std::span<const Scalar> v) {
    for (std::size_t r = 0; r < rows_; ++r)
        (*this)(r, c) = v[r];
}

bool Matrix::is_zero() const {
    for (Scalar x : data_)
        if (x != 0)
            return false;
    return true;
}

std::string to_string(const Matrix& m) {
    std::ostringstream os;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c)
            os << (c ? " " : "") << m(r, c);
        os << '\n';
    }
    return os.str();
}

namespace linalg {

namespace {

void require(bool ok, const char* what) {
    if (!ok)
        throw EngineError(what);
}

} // namespace

Matrix multiply(const Field& f, const Matrix& a, const Matrix& b) {
    require(a.cols() == b.rows(), "multiply: shape mismatch");
    Matrix c(a.rows(), b.cols());
    if (b.cols() == 0)
        return c;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto out = c.row(i);
        for (std::size_t k = 0; k < a.cols(); ++k)
            if (Scalar s = a(i, k); s != 0)
                simd::axpy_mod(out, b.row(k), s, f.prime());
    }
    return c;
}

Matrix add(const Field& f, const Matrix& a, const Matrix& b) {
    require(a.rows() == b.rows() && a.cols() == b.cols(), "add: shape mismatch");
    Matrix c = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        simd::axpy_mod(c.row(i), b.row(i), 1, f.prime());
    return c;
}

Matrix subtract(const Field& f, const Matrix& a, const Matrix& b) {
    require(a.rows() == b.rows() && a.cols() == b.cols(), "subtract: shape mismatch");
    Matrix c = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        simd::axpy_mod(c.row(i), b.row(i), f.neg(1), f.prime());
    return c;
}

Matrix scaled(const Field& f, const Matrix& a, Scalar s) {
    Matrix c = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        simd::scale_mod(c.row(i), s, f.prime());
    return c;
}

Matrix transpose(const Matrix& a) {
    Matrix t(a.cols(), a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            t(c, r) = a(r, c);
    return t;
}

Matrix hconcat(const Matrix& a, const Matrix& b) {
    require(a.rows() == b.rows(), "hconcat: row mismatch");
    Matrix m(a.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c)
            m(r, c) = a(r, c);
        for (std::size_t c = 0; c < b.cols(); ++c)
            m(r, a.cols() + c) = b(r, c);
    }
    return m;
}

Matrix vconcat(const Matrix& a, const Matrix& b) {
    require(a.cols() == b.cols(), "vconcat: column mismatch");
    std::vector<Scalar> data = a.data();
    data.insert(data.end(), b.data().begin(), b.data().end());
    return Matrix(a.rows() + b.rows(), a.cols(), std::move(data));
}

Matrix column_block(const Matrix& a, std::size_t first, std::size_t count) {
    require(first + count <= a.cols(), "column_block: out of range");
    Matrix m(a.rows(), count);
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < count; ++c)
            m(r, c) = a(r, first + c);
    return m;
}

Matrix select_columns(const Matrix& a, std::span<const std::size_t> columns) {
    Matrix m(a.rows(), columns.size());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < columns.size(); ++c)
            m(r, c) = a(r, columns[c]);
    return m;
}

Echelon echelon(const Field& f, Matrix a) {
    Echelon e;
    const std::size_t rows = a.rows(), cols = a.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && a(pivot, c) == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        if (pivot != r) {
            auto x = a.row(pivot), y = a.row(r);
            std::swap_ranges(x.begin(), x.end(), y.begin());
        }
        auto prow = a.row(r).subspan(c);
        if (Scalar lead = prow[0]; lead != 1)
            simd::scale_mod(prow, f.inv(lead), f.prime());
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r)
                continue;
            if (Scalar s = a(i, c); s != 0)
                simd::axpy_mod(a.row(i).subspan(c), prow, f.neg(s), f.prime());
        }
        e.pivots.push_back(c);
        ++r;
    }
    e.reduced = std::move(a);
    return e;
}

std::size_t rank(const Field& f, const Matrix& a) {
    // Eliminate along the shorter dimension.
    if (a.cols() > a.rows())
        return echelon(f, transpose(a)).pivots.size();
    return echelon(f, a).pivots.size();
}

Matrix kernel_basis(const Field& f, const Matrix& a) {
    const std::size_t cols = a.cols();
    Echelon e = echelon(f, a);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : e.pivots)
        is_pivot[c] = true;
    Matrix basis(cols, cols - e.pivots.size());
    std::size_t k = 0;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free])
            continue;
        basis(free, k) = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i)
            basis(e.pivots[i], k) = f.neg(e.reduced(i, free));
        ++k;
    }
    return basis;
}

Matrix column_space_basis(const Field& f, const Matrix& a) {
    Echelon e = echelon(f, a);
    return select_columns(a, e.pivots);
}

std::optional<Matrix> solve(const Field& f, const Matrix& a, const Matrix& b) {
    require(a.rows() == b.rows(), "solve: row mismatch");
    Echelon e = echelon(f, hconcat(a, b));
    Matrix x(a.cols(), b.cols());
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
        std::size_t c = e.pivots[i];
        if (c >= a.cols())
            return std::nullopt;
        for (std::size_t j = 0; j < b.cols(); ++j)
            x(c, j) = e.reduced(i, a.cols() + j);
    }
    return x;
}

Matrix complement_basis(const Field& f, const Matrix& u) {
    const std::size_t n = u.rows();
    // Pivots of [u | I] beyond u's columns pick the completing unit vectors.
    Echelon e = echelon(f, hconcat(u, Matrix::identity(n)));
    std::vector<std::size_t> extra;
    for (std::size_t c : e.pivots) {
        if (c < u.cols())
            continue;
        extra.push_back(c - u.cols());
    }
    require(e.pivots.size() == n && n - extra.size() == u.cols(),
            "complement_basis: columns are not independent");
    Matrix m(n, extra.size());
    for (std::size_t k = 0; k < extra.size(); ++k)
        m(extra[k], k) = 1;
    return m;
}

bool is_invertible(const Field& f, const Matrix& a) {
    return a.rows() == a.cols() && rank(f, a) == a.rows();
}

Matrix inverse(const Field& f, const Matrix& a) {
    require(a.rows() == a.cols(), "inverse: not square");
    auto x = solve(f, a, Matrix::identity(a.rows()));
    require(x.has_value() && rank(f, a) == a.rows(), "inverse: singular matrix");
    return *x;
}

} // namespace linalg
} // namespace radsq
