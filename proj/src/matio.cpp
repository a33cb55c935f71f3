#include "opprank/matio.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace opprank {

namespace {

[[noreturn]] void fail(int lineno, const std::string& msg) {
    throw std::runtime_error("mat parse error at line " + std::to_string(lineno) +
                             ": " + msg);
}

}  // namespace

MatFile parse_matrix(std::istream& in) {
    MatFile m;
    std::string line;
    int lineno = 0;
    bool have_header = false;
    std::size_t read_rows = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view sv(line);
        if (!sv.empty() && sv.back() == '\r') sv.remove_suffix(1);
        if (sv.empty() || sv.front() == '#') continue;
        std::istringstream iss{std::string(sv)};
        if (!have_header) {
            std::string word;
            long r = 0, c = 0;
            if (!(iss >> word >> r >> c) || word != "mat" || r <= 0 || c <= 0)
                fail(lineno, "expected header 'mat R C'");
            m.rows = std::size_t(r);
            m.cols = std::size_t(c);
            m.a.reserve(m.rows);
            have_header = true;
        } else {
            if (read_rows == m.rows) fail(lineno, "more rows than declared");
            std::vector<long long> row;
            row.reserve(m.cols);
            long long v;
            while (iss >> v) row.push_back(v);
            if (!iss.eof()) fail(lineno, "non-integer token");
            if (row.size() != m.cols)
                fail(lineno, "row has " + std::to_string(row.size()) +
                                 " entries, expected " + std::to_string(m.cols));
            m.a.push_back(std::move(row));
            ++read_rows;
        }
    }
    if (!have_header || read_rows != m.rows)
        fail(lineno, "truncated file: expected " + std::to_string(m.rows) +
                         " rows, got " + std::to_string(read_rows));
    return m;
}

void serialize_matrix(const MatFile& m, std::ostream& out) {
    out << "mat " << m.rows << ' ' << m.cols << '\n';
    for (const auto& row : m.a) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out << ' ';
            out << row[c];
        }
        out << '\n';
    }
}

MatFile mat_from_bitmatrix(const BitMatrix& b) {
    MatFile m;
    m.rows = b.rows();
    m.cols = b.cols();
    m.a.assign(m.rows, std::vector<long long>(m.cols, 0));
    for (std::size_t r = 0; r < m.rows; ++r)
        for (std::size_t c = 0; c < m.cols; ++c)
            if (b.get(r, c)) m.a[r][c] = 1;
    return m;
}

BitMatrix bitmatrix_from_mat(const MatFile& m) {
    BitMatrix b(m.rows, m.cols);
    for (std::size_t r = 0; r < m.rows; ++r)
        for (std::size_t c = 0; c < m.cols; ++c) {
            long long v = m.a[r][c];
            if (v != 0 && v != 1)
                throw std::invalid_argument("bitmatrix_from_mat: entry not 0/1");
            if (v) b.set(r, c, true);
        }
    return b;
}

uint64_t fnv1a64(std::string_view bytes) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char ch : bytes) {
        h ^= ch;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace opprank
