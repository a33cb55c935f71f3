#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace opprank {

/// Dense 0/1 matrix, 64 entries per word, row-major.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), words_((cols + 63) / 64),
          data_(rows * words_, 0) {}

    static BitMatrix identity(std::size_t n) {
        BitMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t words_per_row() const { return words_; }

    bool get(std::size_t r, std::size_t c) const {
        return (data_[r * words_ + c / 64] >> (c % 64)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool v) {
        uint64_t& w = data_[r * words_ + c / 64];
        uint64_t mask = uint64_t(1) << (c % 64);
        if (v) w |= mask; else w &= ~mask;
    }

    const uint64_t* row(std::size_t r) const { return data_.data() + r * words_; }
    uint64_t* row(std::size_t r) { return data_.data() + r * words_; }

    std::size_t row_sum(std::size_t r) const {
        std::size_t s = 0;
        const uint64_t* w = row(r);
        for (std::size_t i = 0; i < words_; ++i) s += std::popcount(w[i]);
        return s;
    }

    /// popcount(row(a) & other.row(b)) — used for intersection numbers.
    std::size_t row_and_popcount(std::size_t a, const BitMatrix& other,
                                 std::size_t b) const {
        std::size_t s = 0;
        const uint64_t* x = row(a);
        const uint64_t* y = other.row(b);
        for (std::size_t i = 0; i < words_; ++i) s += std::popcount(x[i] & y[i]);
        return s;
    }

    bool is_symmetric() const {
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = r + 1; c < cols_; ++c)
                if (get(r, c) != get(c, r)) return false;
        return true;
    }

    bool zero_diagonal() const {
        for (std::size_t r = 0; r < rows_ && r < cols_; ++r)
            if (get(r, r)) return false;
        return true;
    }

    bool operator==(const BitMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

private:
    std::size_t rows_ = 0, cols_ = 0, words_ = 0;
    std::vector<uint64_t> data_;
};

}  // namespace opprank
