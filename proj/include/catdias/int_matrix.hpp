#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace catdias {

// Integer vector in the basis of simple classes.
using K0Vector = std::vector<std::int64_t>;

// Dense integer matrix, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<std::int64_t> data);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    // 0-based.
    std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<std::int64_t> column(std::size_t c) const;
    void set_column(std::size_t c, const std::vector<std::int64_t>& v);
    std::vector<std::vector<std::int64_t>> nested() const;

    IntMatrix transpose() const;
    IntMatrix operator-() const;
    bool operator==(const IntMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::int64_t> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator*(std::int64_t s, const IntMatrix& a);
IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b);
IntMatrix power(const IntMatrix& a, unsigned exponent);

// (row, col) pairs, 1-based, where the two matrices differ. Shapes must agree.
std::vector<std::vector<int>> differing_entries(const IntMatrix& a, const IntMatrix& b);

std::string to_string(const IntMatrix& m);

} // namespace catdias
