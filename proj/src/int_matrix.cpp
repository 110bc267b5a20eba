#include "catdias/int_matrix.hpp"

#include "catdias/error.hpp"

#include <fmt/format.h>
#include <fmt/ranges.h>

namespace catdias {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<std::int64_t> data)
    : rows_(rows), cols_(cols), data_(std::move(data))
{
    if (data_.size() != rows * cols)
        throw ParameterError(fmt::format("{} entries for a {}x{} matrix", data_.size(), rows, cols));
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t k = 0; k < n; ++k)
        m(k, k) = 1;
    return m;
}

std::vector<std::int64_t> IntMatrix::column(std::size_t c) const
{
    std::vector<std::int64_t> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v[r] = (*this)(r, c);
    return v;
}

void IntMatrix::set_column(std::size_t c, const std::vector<std::int64_t>& v)
{
    if (v.size() != rows_)
        throw ParameterError("column length mismatch");
    for (std::size_t r = 0; r < rows_; ++r)
        (*this)(r, c) = v[r];
}

std::vector<std::vector<std::int64_t>> IntMatrix::nested() const
{
    std::vector<std::vector<std::int64_t>> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        out[r].assign(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                      data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
    return out;
}

IntMatrix IntMatrix::transpose() const
{
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

IntMatrix IntMatrix::operator-() const
{
    return -1 * *this;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols() != b.rows())
        throw ParameterError(fmt::format("cannot multiply {}x{} by {}x{}", a.rows(), a.cols(),
                                         b.rows(), b.cols()));
    IntMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const std::int64_t x = a(r, k);
            if (x == 0)
                continue;
            for (std::size_t c = 0; c < b.cols(); ++c)
                out(r, c) += x * b(k, c);
        }
    return out;
}

IntMatrix operator*(std::int64_t s, const IntMatrix& a)
{
    IntMatrix out(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            out(r, c) = s * a(r, c);
    return out;
}

IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b)
{
    IntMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t r1 = 0; r1 < a.rows(); ++r1)
        for (std::size_t c1 = 0; c1 < a.cols(); ++c1)
            for (std::size_t r2 = 0; r2 < b.rows(); ++r2)
                for (std::size_t c2 = 0; c2 < b.cols(); ++c2)
                    out(r1 * b.rows() + r2, c1 * b.cols() + c2) = a(r1, c1) * b(r2, c2);
    return out;
}

IntMatrix power(const IntMatrix& a, unsigned exponent)
{
    if (a.rows() != a.cols())
        throw ParameterError("power of a non-square matrix");
    IntMatrix result = IntMatrix::identity(a.rows());
    for (unsigned k = 0; k < exponent; ++k)
        result = result * a;
    return result;
}

std::vector<std::vector<int>> differing_entries(const IntMatrix& a, const IntMatrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ParameterError(fmt::format("cannot compare {}x{} with {}x{}", a.rows(), a.cols(),
                                         b.rows(), b.cols()));
    std::vector<std::vector<int>> out;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (a(r, c) != b(r, c))
                out.push_back({static_cast<int>(r + 1), static_cast<int>(c + 1)});
    return out;
}

std::string to_string(const IntMatrix& m)
{
    std::vector<std::string> rows;
    for (const auto& row : m.nested())
        rows.push_back(fmt::format("[{}]", fmt::join(row, ",")));
    return fmt::format("[{}]", fmt::join(rows, ","));
}

} // namespace catdias
