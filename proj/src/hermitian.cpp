#include "opprank/hermitian.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace opprank {

namespace {

struct PrimePower {
    int p;
    int t;
};

PrimePower factor_prime_power(long q) {
    for (long p = 2; p * p <= q; ++p) {
        if (q % p == 0) {
            int t = 0;
            long r = q;
            while (r % p == 0) { r /= p; ++t; }
            if (r != 1)
                throw std::invalid_argument("HermitianSpace: q is not a prime power");
            return {int(p), t};
        }
    }
    return {int(q), 1};  // q prime
}

}  // namespace

HermitianSpace::HermitianSpace(int d_, long q_)
    : d(d_), q(q_), F([&] {
          if (d_ < 1) throw std::invalid_argument("HermitianSpace: d must be >= 1");
          if (q_ < 2) throw std::invalid_argument("HermitianSpace: q must be >= 2");
          auto pp = factor_prime_power(q_);
          return Field(pp.p, 2 * pp.t);  // GF(q^2)
      }()) {}

std::string Subspace::key() const {
    std::string s;
    s.reserve(2 + m.size() * 2);
    s.push_back(char(dim));
    s.push_back(char(amb));
    for (auto e : m) {
        s.push_back(char(e & 0xff));
        s.push_back(char((e >> 8) & 0xff));
    }
    return s;
}

int rref(const Field& F, std::vector<Field::Elem>& rows, int nrows, int ncols) {
    int rank = 0;
    for (int col = 0; col < ncols && rank < nrows; ++col) {
        int pivot = -1;
        for (int r = rank; r < nrows; ++r)
            if (rows[std::size_t(r) * ncols + col]) { pivot = r; break; }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int c = 0; c < ncols; ++c)
                std::swap(rows[std::size_t(pivot) * ncols + c],
                          rows[std::size_t(rank) * ncols + c]);
        Field::Elem inv = F.inv(rows[std::size_t(rank) * ncols + col]);
        for (int c = col; c < ncols; ++c) {
            auto& x = rows[std::size_t(rank) * ncols + c];
            x = F.mul(x, inv);
        }
        for (int r = 0; r < nrows; ++r) {
            if (r == rank) continue;
            Field::Elem f0 = rows[std::size_t(r) * ncols + col];
            if (!f0) continue;
            for (int c = col; c < ncols; ++c)
                rows[std::size_t(r) * ncols + c] =
                    F.sub(rows[std::size_t(r) * ncols + c],
                          F.mul(f0, rows[std::size_t(rank) * ncols + c]));
        }
        ++rank;
    }
    return rank;
}

Field::Elem hermitian_form(const HermitianSpace& H,
                           std::span<const Field::Elem> x,
                           std::span<const Field::Elem> y) {
    if ((int)x.size() != H.ambient_dim() || (int)y.size() != H.ambient_dim())
        throw std::invalid_argument("hermitian_form: length mismatch");
    const Field& F = H.F;
    Field::Elem acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        acc = F.add(acc, F.mul(x[i], F.conj(y[i])));
    return acc;
}

bool is_totally_isotropic(const HermitianSpace& H, const Subspace& S) {
    if (S.dim == 0)
        throw std::invalid_argument("is_totally_isotropic: dimension 0 input");
    if (S.amb != H.ambient_dim())
        throw std::invalid_argument("is_totally_isotropic: wrong ambient dimension");
    for (int i = 0; i < S.dim; ++i)
        for (int j = i; j < S.dim; ++j)
            if (hermitian_form(H, S.row(i), S.row(j))) return false;
    return true;
}

namespace {

// Recursive enumeration of maximal totally isotropic subspaces of a
// non-degenerate Hermitian space of even dimension m with Gram matrix G
// (m x m, row-major).  Bases are returned as (m/2) x m row matrices in the
// coordinates of G.  Form convention: f(x,y) = sum_ij x_i G_ij conj(y_j).
struct Enumerator {
    const Field& F;

    Field::Elem form(const std::vector<Field::Elem>& G, int m,
                     const Field::Elem* x, const Field::Elem* y) const {
        Field::Elem acc = 0;
        for (int i = 0; i < m; ++i) {
            if (!x[i]) continue;
            Field::Elem row = 0;
            for (int j = 0; j < m; ++j)
                if (y[j]) row = F.add(row, F.mul(G[std::size_t(i) * m + j], F.conj(y[j])));
            acc = F.add(acc, F.mul(x[i], row));
        }
        return acc;
    }

    std::vector<std::vector<Field::Elem>> run(int m, const std::vector<Field::Elem>& G) {
        std::vector<std::vector<Field::Elem>> out;
        if (m == 0) {
            out.emplace_back();
            return out;
        }
        const long n = F.order();
        std::unordered_set<std::string> seen;
        // canonical isotropic vectors: pivot position j, v[j] = 1
        std::vector<Field::Elem> v(m, 0);
        for (int j = m - 1; j >= 0; --j) {
            std::fill(v.begin(), v.end(), 0);
            v[j] = 1;
            long free = m - 1 - j;
            long count = 1;
            for (long i = 0; i < free; ++i) count *= n;
            for (long idx = 0; idx < count; ++idx) {
                long t = idx;
                for (int c = j + 1; c < m; ++c) { v[c] = Field::Elem(t % n); t /= n; }
                if (form(G, m, v.data(), v.data())) continue;
                extend(m, G, v, out, seen);
            }
        }
        return out;
    }

    void extend(int m, const std::vector<Field::Elem>& G,
                const std::vector<Field::Elem>& v,
                std::vector<std::vector<Field::Elem>>& out,
                std::unordered_set<std::string>& seen) {
        // perp of v: kernel of w -> sum_i w_i c_i with c_i = sum_j G_ij conj(v_j)
        std::vector<Field::Elem> c(m, 0);
        for (int i = 0; i < m; ++i) {
            Field::Elem acc = 0;
            for (int j = 0; j < m; ++j)
                if (v[j]) acc = F.add(acc, F.mul(G[std::size_t(i) * m + j], F.conj(v[j])));
            c[i] = acc;
        }
        int piv = -1;
        for (int i = 0; i < m; ++i)
            if (c[i]) { piv = i; break; }
        if (piv < 0) throw std::logic_error("degenerate Gram matrix");
        // kernel basis: e_i - (c_i / c_piv) e_piv for i != piv  (m-1 vectors)
        // complement of <v> inside the perp: greedily take kernel vectors
        // that keep [v; taken] independent
        std::vector<Field::Elem> basis;  // rows of [v; b_2; ...]
        basis.insert(basis.end(), v.begin(), v.end());
        int rows = 1;
        std::vector<std::vector<Field::Elem>> comp;
        std::vector<Field::Elem> work;
        for (int i = 0; i < m && rows < m - 1; ++i) {
            if (i == piv) continue;
            std::vector<Field::Elem> w(m, 0);
            w[i] = 1;
            w[piv] = F.neg(F.div(c[i], c[piv]));
            work = basis;
            work.insert(work.end(), w.begin(), w.end());
            if (rref(F, work, rows + 1, m) == rows + 1) {
                basis.insert(basis.end(), w.begin(), w.end());
                comp.push_back(std::move(w));
                ++rows;
            }
        }
        if ((int)comp.size() != m - 2)
            throw std::logic_error("perp complement has wrong dimension");
        // Gram of the residue space
        const int mm = m - 2;
        std::vector<Field::Elem> G2(std::size_t(mm) * mm);
        for (int i = 0; i < mm; ++i)
            for (int j = 0; j < mm; ++j)
                G2[std::size_t(i) * mm + j] = form(G, m, comp[i].data(), comp[j].data());
        // recurse and lift
        auto subs = run(mm, G2);
        const int half = m / 2;
        for (const auto& sb : subs) {
            std::vector<Field::Elem> rowsbuf(std::size_t(half) * m, 0);
            for (int c2 = 0; c2 < m; ++c2) rowsbuf[c2] = v[c2];
            for (int r = 0; r + 1 < half; ++r)
                for (int k = 0; k < mm; ++k) {
                    Field::Elem co = sb[std::size_t(r) * mm + k];
                    if (!co) continue;
                    for (int c2 = 0; c2 < m; ++c2)
                        rowsbuf[std::size_t(r + 1) * m + c2] =
                            F.add(rowsbuf[std::size_t(r + 1) * m + c2],
                                  F.mul(co, comp[k][c2]));
                }
            int rk = rref(F, rowsbuf, half, m);
            if (rk != half) throw std::logic_error("lifted basis not independent");
            std::string key(reinterpret_cast<const char*>(rowsbuf.data()),
                            rowsbuf.size() * sizeof(Field::Elem));
            if (seen.insert(key).second) out.push_back(std::move(rowsbuf));
        }
    }
};

}  // namespace

GeneratorSet enumerate_generators(const HermitianSpace& H, std::size_t cap) {
    static const long kSupportedQ[] = {2, 3, 4, 5, 8, 9};
    if (H.d != 2 && H.d != 3)
        throw std::invalid_argument("enumerate_generators: d must be 2 or 3");
    if (std::find(std::begin(kSupportedQ), std::end(kSupportedQ), H.q) ==
        std::end(kSupportedQ))
        throw std::invalid_argument("enumerate_generators: q outside supported range");

    const int m = H.ambient_dim();
    std::vector<Field::Elem> G(std::size_t(m) * m, 0);
    for (int i = 0; i < m; ++i) G[std::size_t(i) * m + i] = 1;

    Enumerator en{H.F};
    auto bases = en.run(m, G);
    if (bases.size() > cap)
        throw std::runtime_error("enumerate_generators: cap exceeded");

    GeneratorSet gs;
    gs.items.reserve(bases.size());
    for (auto& b : bases) {
        Subspace s;
        s.dim = H.d;
        s.amb = m;
        s.m = std::move(b);
        gs.items.push_back(std::move(s));
    }
    std::sort(gs.items.begin(), gs.items.end(),
              [](const Subspace& a, const Subspace& b) { return a.m < b.m; });
    for (std::size_t i = 0; i < gs.items.size(); ++i) {
        if (!is_totally_isotropic(H, gs.items[i]))
            throw std::logic_error("enumerated subspace is not totally isotropic");
        gs.index.emplace(gs.items[i].key(), int(i));
    }
    if (gs.index.size() != gs.items.size())
        throw std::logic_error("duplicate generators after canonicalization");
    return gs;
}

std::vector<BitMatrix> relation_matrices(const HermitianSpace& H,
                                         const GeneratorSet& G) {
    if (G.items.empty())
        throw std::invalid_argument("relation_matrices: empty generator set");
    const int d = H.d;
    const int m = H.ambient_dim();
    const std::size_t n = G.items.size();
    std::vector<BitMatrix> A(d + 1, BitMatrix(n, n));
    std::vector<Field::Elem> stacked(std::size_t(2 * d) * m);
    for (std::size_t a = 0; a < n; ++a) {
        A[0].set(a, a, true);
        for (std::size_t b = a + 1; b < n; ++b) {
            std::copy(G.items[a].m.begin(), G.items[a].m.end(), stacked.begin());
            std::copy(G.items[b].m.begin(), G.items[b].m.end(),
                      stacked.begin() + std::size_t(d) * m);
            int rk = rref(H.F, stacked, 2 * d, m);
            int meet = 2 * d - rk;   // dim(a) + dim(b) - dim(a+b)
            int codim = d - meet;
            A[codim].set(a, b, true);
            A[codim].set(b, a, true);
        }
    }
    return A;
}

}  // namespace opprank
