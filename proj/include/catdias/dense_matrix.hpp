#pragma once

#include "catdias/error.hpp"

#include <cstddef>
#include <vector>

namespace catdias {

// Matrix over a field; the field object supplies arithmetic.
template <class Element>
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols, const Element& fill)
        : rows_(rows), cols_(cols), data_(rows * cols, fill)
    {
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Element& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Element& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool operator==(const DenseMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Element> data_;
};

template <class Field>
using MatrixOver = DenseMatrix<typename Field::Element>;

template <class Field>
MatrixOver<Field> zero_matrix(const Field& k, std::size_t rows, std::size_t cols)
{
    return MatrixOver<Field>(rows, cols, k.zero());
}

template <class Field>
MatrixOver<Field> identity_matrix(const Field& k, std::size_t n)
{
    auto m = zero_matrix(k, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = k.one();
    return m;
}

template <class Field>
MatrixOver<Field> multiply(const Field& k, const MatrixOver<Field>& a, const MatrixOver<Field>& b)
{
    if (a.cols() != b.rows())
        throw ParameterError("matrix product dimension mismatch");
    auto out = zero_matrix(k, a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t t = 0; t < a.cols(); ++t) {
            if (k.is_zero(a(r, t)))
                continue;
            for (std::size_t c = 0; c < b.cols(); ++c)
                out(r, c) = k.add(out(r, c), k.mul(a(r, t), b(t, c)));
        }
    return out;
}

template <class Field>
bool matrices_equal(const Field& k, const MatrixOver<Field>& a, const MatrixOver<Field>& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        return false;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (!k.equal(a(r, c), b(r, c)))
                return false;
    return true;
}

// Row space of a set of vectors in reduced row echelon form; reduces
// vectors modulo that space.
template <class Field>
class RowReducer {
public:
    using Element = typename Field::Element;

    RowReducer(const Field& k, std::size_t width) : k_(k), width_(width), is_pivot_(width, 0) {}

    std::size_t width() const { return width_; }
    std::size_t rank() const { return rows_.size(); }

    // Adds v to the span. Returns false if v was already in it.
    bool insert(std::vector<Element> v)
    {
        reduce(v);
        std::size_t pc = 0;
        while (pc < width_ && k_.is_zero(v[pc]))
            ++pc;
        if (pc == width_)
            return false;
        const Element scale = k_.inv(v[pc]);
        for (auto& x : v)
            x = k_.mul(x, scale);
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const Element f = rows_[r][pc];
            if (k_.is_zero(f))
                continue;
            for (std::size_t c = 0; c < width_; ++c)
                rows_[r][c] = k_.sub(rows_[r][c], k_.mul(f, v[c]));
        }
        rows_.push_back(std::move(v));
        pivots_.push_back(pc);
        is_pivot_[pc] = 1;
        return true;
    }

    // Replaces v by its normal form: zero at every pivot column.
    void reduce(std::vector<Element>& v) const
    {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const Element f = v[pivots_[r]];
            if (k_.is_zero(f))
                continue;
            for (std::size_t c = 0; c < width_; ++c)
                v[c] = k_.sub(v[c], k_.mul(f, rows_[r][c]));
        }
    }

    // Non-pivot columns, ascending: a basis of the quotient.
    std::vector<std::size_t> free_columns() const
    {
        std::vector<std::size_t> out;
        for (std::size_t c = 0; c < width_; ++c)
            if (!is_pivot_[c])
                out.push_back(c);
        return out;
    }

private:
    Field k_;
    std::size_t width_;
    std::vector<std::vector<Element>> rows_;
    std::vector<std::size_t> pivots_;
    std::vector<char> is_pivot_;
};

} // namespace catdias
