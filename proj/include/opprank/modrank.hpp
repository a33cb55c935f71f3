#pragma once

#include <chrono>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "opprank/bitmat.hpp"

namespace opprank {

using IntMat = std::vector<std::vector<mpz_class>>;
using RatMat = std::vector<std::vector<mpq_class>>;

struct RankReport {
    std::size_t rank = 0;
    long modulus = 0;  // 0 means rational
    std::chrono::milliseconds elapsed{0};
};

/// Residues mod p in packed words.  p=2 uses one bit plane, p=3 two
/// bit-sliced planes (2 bits per entry), other small p dense 32-bit lanes.
struct PackedMatrix {
    std::size_t rows = 0, cols = 0;
    long p = 0;
    std::size_t words = 0;             // words per plane row (p = 2, 3)
    std::vector<uint64_t> plane_lo;    // p = 2: the only plane; p = 3: low bits
    std::vector<uint64_t> plane_hi;    // p = 3 only
    std::vector<uint32_t> dense;       // other p: row-major residues

    static PackedMatrix from_bitmatrix(const BitMatrix& m, long p);
    static PackedMatrix from_rows(std::size_t rows, std::size_t cols,
                                  const std::vector<std::vector<long>>& a, long p);
    long get(std::size_t r, std::size_t c) const;
};

/// Exact rank over GF(p), Gaussian elimination, deterministic pivot order
/// (first nonzero in row-major order).
RankReport rank_mod_p(PackedMatrix m);
RankReport rank_mod_p(const BitMatrix& m, long p);
RankReport rank_mod_p(const std::vector<std::vector<long>>& m, long p);

/// Exact rank over Q by fraction-free (Bareiss) elimination, no overflow.
RankReport rank_rational(IntMat m);
RankReport rank_rational(const RatMat& m);

}  // namespace opprank
