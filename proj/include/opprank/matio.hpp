#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "opprank/bitmat.hpp"

namespace opprank {

/// Integer matrix in the `mat` text format:
///   mat R C
///   <R rows of C space-separated integers>
/// `#` starts a comment line.  Canonical serialization is single-spaced with
/// one row per line, so write(parse(x)) is byte-stable.
struct MatFile {
    std::size_t rows = 0, cols = 0;
    std::vector<std::vector<long long>> a;
};

MatFile parse_matrix(std::istream& in);       // throws with line numbers
void serialize_matrix(const MatFile& m, std::ostream& out);

MatFile mat_from_bitmatrix(const BitMatrix& b);
BitMatrix bitmatrix_from_mat(const MatFile& m);  // requires 0/1 entries

/// FNV-1a 64-bit content hash (traceability, not cryptographic).
uint64_t fnv1a64(std::string_view bytes);

/// Slurp a file; throws std::runtime_error when unreadable.
std::string read_file(const std::string& path);

}  // namespace opprank
