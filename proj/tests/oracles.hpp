#pragma once

// Test-only brute-force oracles, deliberately independent of the library's
// enumeration and search paths.

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "opprank/clique.hpp"
#include "opprank/field.hpp"
#include "opprank/hermitian.hpp"

namespace oracle {

using opprank::Field;
using opprank::HermitianSpace;
using opprank::Subspace;

// All r-dimensional subspaces of F^amb as reduced-echelon bases, by direct
// enumeration of pivot columns and free entries.
inline std::vector<std::vector<Field::Elem>> all_subspaces(const Field& F, int amb,
                                                           int r) {
    std::vector<std::vector<Field::Elem>> out;
    std::vector<int> pivots(r);
    // choose pivot columns c_0 < ... < c_{r-1}
    std::vector<int> idx(r);
    for (int i = 0; i < r; ++i) idx[i] = i;
    const long n = F.order();
    while (true) {
        // free positions: row i, column c with c > idx[i], c not a pivot
        std::vector<std::pair<int, int>> free_pos;
        for (int i = 0; i < r; ++i)
            for (int c = idx[i] + 1; c < amb; ++c)
                if (std::find(idx.begin(), idx.end(), c) == idx.end())
                    free_pos.emplace_back(i, c);
        long total = 1;
        for (std::size_t t = 0; t < free_pos.size(); ++t) total *= n;
        for (long pat = 0; pat < total; ++pat) {
            std::vector<Field::Elem> m(std::size_t(r) * amb, 0);
            for (int i = 0; i < r; ++i) m[std::size_t(i) * amb + idx[i]] = 1;
            long t = pat;
            for (auto [i, c] : free_pos) {
                m[std::size_t(i) * amb + c] = Field::Elem(t % n);
                t /= n;
            }
            out.push_back(std::move(m));
        }
        // next pivot combination
        int i = r - 1;
        while (i >= 0 && idx[i] == amb - r + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

// filter-everything oracle for generators of H(3, q^2)
inline std::vector<Subspace> generators_by_filter(const HermitianSpace& H) {
    std::vector<Subspace> out;
    for (auto& m : all_subspaces(H.F, H.ambient_dim(), H.d)) {
        Subspace s;
        s.dim = H.d;
        s.amb = H.ambient_dim();
        s.m = std::move(m);
        if (opprank::is_totally_isotropic(H, s)) out.push_back(std::move(s));
    }
    return out;
}

// level-by-level isotropic extension oracle (used for H(5,4)); independent
// of the library's perp/residue recursion
inline std::size_t generator_count_by_extension(const HermitianSpace& H) {
    const int amb = H.ambient_dim();
    const Field& F = H.F;
    long total_vectors = 1;
    for (int i = 0; i < amb; ++i) total_vectors *= F.order();
    std::vector<std::vector<Field::Elem>> vectors;
    for (long v = 1; v < total_vectors; ++v) {
        std::vector<Field::Elem> x(amb);
        long t = v;
        for (int i = 0; i < amb; ++i) { x[i] = Field::Elem(t % F.order()); t /= F.order(); }
        if (opprank::hermitian_form(H, x, x) == 0) vectors.push_back(std::move(x));
    }
    std::set<std::vector<Field::Elem>> level;
    for (const auto& x : vectors) {
        std::vector<Field::Elem> rows = x;
        opprank::rref(F, rows, 1, amb);
        level.insert(rows);
    }
    for (int dim = 2; dim <= H.d; ++dim) {
        std::set<std::vector<Field::Elem>> next;
        for (const auto& base : level) {
            int cur = dim - 1;
            for (const auto& x : vectors) {
                bool ok = true;
                for (int i = 0; i < cur && ok; ++i) {
                    std::span<const Field::Elem> row(base.data() + std::size_t(i) * amb,
                                                     std::size_t(amb));
                    if (opprank::hermitian_form(H, row, x) != 0) ok = false;
                }
                if (!ok) continue;
                std::vector<Field::Elem> rows = base;
                rows.insert(rows.end(), x.begin(), x.end());
                if (opprank::rref(F, rows, cur + 1, amb) != cur + 1) continue;
                next.insert(rows);
            }
        }
        level = std::move(next);
    }
    return level.size();
}

// plain recursive maximum clique, exponential, for small n
inline std::size_t brute_force_max_clique(const opprank::Graph& g) {
    std::vector<int> best;
    std::vector<int> cur;
    std::vector<int> cand(g.n);
    for (std::size_t i = 0; i < g.n; ++i) cand[i] = int(i);
    auto rec = [&](auto&& self, std::vector<int> P) -> void {
        if (cur.size() + P.size() <= best.size()) return;
        if (P.empty()) {
            if (cur.size() > best.size()) best = cur;
            return;
        }
        while (!P.empty()) {
            if (cur.size() + P.size() <= best.size()) return;
            int v = P.back();
            P.pop_back();
            std::vector<int> P2;
            for (int u : P)
                if (g.adjacent(u, v)) P2.push_back(u);
            cur.push_back(v);
            self(self, std::move(P2));
            cur.pop_back();
        }
    };
    rec(rec, cand);
    return best.size();
}

}  // namespace oracle
