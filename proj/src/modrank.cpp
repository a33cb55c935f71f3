#include "opprank/modrank.hpp"

#include <algorithm>
#include <stdexcept>

#include "opprank/field.hpp"

namespace opprank {

namespace {

using Clock = std::chrono::steady_clock;

std::chrono::milliseconds since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0);
}

// bit-sliced add mod 3 on one word pair: value encoding 0=(0,0), 1=(1,0), 2=(0,1)
inline void add3(uint64_t x0, uint64_t x1, uint64_t y0, uint64_t y1,
                 uint64_t& z0, uint64_t& z1) {
    uint64_t t = (x0 | y1) ^ (x1 | y0);
    z0 = t ^ (x1 | y1);
    z1 = t ^ (x0 | y0);
}

std::size_t rank2(PackedMatrix& m) {
    const std::size_t words = m.words;
    std::size_t rank = 0, row = 0;
    for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
        const std::size_t w = col / 64;
        const uint64_t mask = uint64_t(1) << (col % 64);
        std::size_t pivot = row;
        while (pivot < m.rows && !(m.plane_lo[pivot * words + w] & mask)) ++pivot;
        if (pivot == m.rows) continue;
        if (pivot != row)
            for (std::size_t i = 0; i < words; ++i)
                std::swap(m.plane_lo[pivot * words + i], m.plane_lo[row * words + i]);
        const uint64_t* pr = &m.plane_lo[row * words];
        for (std::size_t r = row + 1; r < m.rows; ++r) {
            uint64_t* rr = &m.plane_lo[r * words];
            if (rr[w] & mask)
                for (std::size_t i = w; i < words; ++i) rr[i] ^= pr[i];
        }
        ++row;
        ++rank;
    }
    return rank;
}

std::size_t rank3(PackedMatrix& m) {
    const std::size_t words = m.words;
    std::size_t rank = 0, row = 0;
    auto lo = m.plane_lo.data();
    auto hi = m.plane_hi.data();
    for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
        const std::size_t w = col / 64;
        const uint64_t mask = uint64_t(1) << (col % 64);
        std::size_t pivot = row;
        while (pivot < m.rows &&
               !((lo[pivot * words + w] | hi[pivot * words + w]) & mask))
            ++pivot;
        if (pivot == m.rows) continue;
        if (pivot != row)
            for (std::size_t i = 0; i < words; ++i) {
                std::swap(lo[pivot * words + i], lo[row * words + i]);
                std::swap(hi[pivot * words + i], hi[row * words + i]);
            }
        // normalize pivot to 1 (multiplying by 2 is plane swap)
        if (hi[row * words + w] & mask)
            for (std::size_t i = 0; i < words; ++i)
                std::swap(lo[row * words + i], hi[row * words + i]);
        const uint64_t* plo = &lo[row * words];
        const uint64_t* phi = &hi[row * words];
        for (std::size_t r = row + 1; r < m.rows; ++r) {
            uint64_t* rlo = &lo[r * words];
            uint64_t* rhi = &hi[r * words];
            bool e1 = rlo[w] & mask, e2 = rhi[w] & mask;
            if (!e1 && !e2) continue;
            // entry 1: subtract pivot (add 2*pivot); entry 2: add pivot
            for (std::size_t i = w; i < words; ++i) {
                uint64_t a0 = e1 ? phi[i] : plo[i];  // pivot row times (3 - entry)
                uint64_t a1 = e1 ? plo[i] : phi[i];
                add3(rlo[i], rhi[i], a0, a1, rlo[i], rhi[i]);
            }
        }
        ++row;
        ++rank;
    }
    return rank;
}

std::size_t rank_dense(PackedMatrix& m) {
    const long p = m.p;
    const std::size_t cols = m.cols;
    std::size_t rank = 0, row = 0;
    auto inv_mod = [p](long a) {
        long r = 1, b = a % p, e = p - 2;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    };
    for (std::size_t col = 0; col < cols && row < m.rows; ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows && m.dense[pivot * cols + col] == 0) ++pivot;
        if (pivot == m.rows) continue;
        if (pivot != row)
            for (std::size_t i = 0; i < cols; ++i)
                std::swap(m.dense[pivot * cols + i], m.dense[row * cols + i]);
        const long pinv = inv_mod(m.dense[row * cols + col]);
        for (std::size_t i = col; i < cols; ++i)
            m.dense[row * cols + i] =
                uint32_t(long(m.dense[row * cols + i]) * pinv % p);
        for (std::size_t r = row + 1; r < m.rows; ++r) {
            long c = m.dense[r * cols + col];
            if (!c) continue;
            for (std::size_t i = col; i < cols; ++i) {
                long v = long(m.dense[r * cols + i]) -
                         c * long(m.dense[row * cols + i]) % p;
                m.dense[r * cols + i] = uint32_t(v < 0 ? v + p : v);
            }
        }
        ++row;
        ++rank;
    }
    return rank;
}

}  // namespace

PackedMatrix PackedMatrix::from_bitmatrix(const BitMatrix& m, long p) {
    std::vector<std::vector<long>> rows(m.rows(), std::vector<long>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) rows[r][c] = m.get(r, c);
    return from_rows(m.rows(), m.cols(), rows, p);
}

PackedMatrix PackedMatrix::from_rows(std::size_t rows, std::size_t cols,
                                     const std::vector<std::vector<long>>& a,
                                     long p) {
    if (!is_prime(p)) throw std::invalid_argument("PackedMatrix: p must be prime");
    if (a.size() != rows) throw std::invalid_argument("PackedMatrix: row count");
    PackedMatrix m;
    m.rows = rows;
    m.cols = cols;
    m.p = p;
    auto residue = [p](long v) {
        long r = v % p;
        return r < 0 ? r + p : r;
    };
    if (p == 2 || p == 3) {
        m.words = (cols + 63) / 64;
        m.plane_lo.assign(rows * m.words, 0);
        if (p == 3) m.plane_hi.assign(rows * m.words, 0);
        for (std::size_t r = 0; r < rows; ++r) {
            if (a[r].size() != cols)
                throw std::invalid_argument("PackedMatrix: ragged rows");
            for (std::size_t c = 0; c < cols; ++c) {
                long v = residue(a[r][c]);
                if (v == 1 || (p == 2 && v))
                    m.plane_lo[r * m.words + c / 64] |= uint64_t(1) << (c % 64);
                else if (v == 2)
                    m.plane_hi[r * m.words + c / 64] |= uint64_t(1) << (c % 64);
            }
        }
    } else {
        m.dense.assign(rows * cols, 0);
        for (std::size_t r = 0; r < rows; ++r) {
            if (a[r].size() != cols)
                throw std::invalid_argument("PackedMatrix: ragged rows");
            for (std::size_t c = 0; c < cols; ++c)
                m.dense[r * cols + c] = uint32_t(residue(a[r][c]));
        }
    }
    return m;
}

long PackedMatrix::get(std::size_t r, std::size_t c) const {
    if (p == 2 || p == 3) {
        long v = (plane_lo[r * words + c / 64] >> (c % 64)) & 1;
        if (p == 3 && ((plane_hi[r * words + c / 64] >> (c % 64)) & 1)) v = 2;
        return v;
    }
    return dense[r * cols + c];
}

RankReport rank_mod_p(PackedMatrix m) {
    auto t0 = Clock::now();
    RankReport rep;
    rep.modulus = m.p;
    if (m.p == 2)
        rep.rank = rank2(m);
    else if (m.p == 3)
        rep.rank = rank3(m);
    else
        rep.rank = rank_dense(m);
    rep.elapsed = since(t0);
    return rep;
}

RankReport rank_mod_p(const BitMatrix& m, long p) {
    return rank_mod_p(PackedMatrix::from_bitmatrix(m, p));
}

RankReport rank_mod_p(const std::vector<std::vector<long>>& m, long p) {
    std::size_t rows = m.size();
    std::size_t cols = rows ? m[0].size() : 0;
    return rank_mod_p(PackedMatrix::from_rows(rows, cols, m, p));
}

RankReport rank_rational(IntMat m) {
    auto t0 = Clock::now();
    RankReport rep;
    rep.modulus = 0;
    std::size_t rows = m.size();
    std::size_t cols = rows ? m[0].size() : 0;
    for (auto& r : m)
        if (r.size() != cols) throw std::invalid_argument("rank_rational: ragged");
    // Bareiss fraction-free elimination with row/column pivot search
    mpz_class prev = 1;
    std::size_t rank = 0, row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != row) std::swap(m[pivot], m[row]);
        for (std::size_t r = row + 1; r < rows; ++r) {
            for (std::size_t c = col + 1; c < cols; ++c) {
                mpz_class num = m[row][col] * m[r][c] - m[r][col] * m[row][c];
                mpz_divexact(m[r][c].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            m[r][col] = 0;
        }
        prev = m[row][col];
        ++row;
        ++rank;
    }
    rep.rank = rank;
    rep.elapsed = since(t0);
    return rep;
}

RankReport rank_rational(const RatMat& m) {
    // clear denominators row by row (row scaling preserves rank)
    IntMat z(m.size());
    for (std::size_t r = 0; r < m.size(); ++r) {
        mpz_class lcm = 1;
        for (const auto& q : m[r])
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
        z[r].reserve(m[r].size());
        for (const auto& q : m[r]) {
            mpq_class scaled = q * mpq_class(lcm);
            z[r].push_back(scaled.get_num());
        }
    }
    return rank_rational(std::move(z));
}

}  // namespace opprank
