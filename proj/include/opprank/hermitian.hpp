#pragma once

#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "opprank/bitmat.hpp"
#include "opprank/field.hpp"

namespace opprank {

/// The Hermitian polar space H(2d-1, q^2): ambient GF(q^2)^{2d} with the
/// non-degenerate form f(x,y) = sum_i x_i conj(y_i) (identity Gram matrix;
/// all non-degenerate Hermitian forms of a given dimension are equivalent).
struct HermitianSpace {
    int d;
    long q;       // q = p^t; the field has order q^2
    Field F;

    HermitianSpace(int d, long q);
    int ambient_dim() const { return 2 * d; }
};

/// Subspace of the ambient space, stored as its reduced-row-echelon basis.
/// Equal subspaces have identical bases, so `key()` is a canonical handle.
struct Subspace {
    int dim = 0;
    int amb = 0;
    std::vector<Field::Elem> m;  // dim x amb, row-major

    std::string key() const;
    bool operator==(const Subspace&) const = default;
    std::span<const Field::Elem> row(int r) const {
        return {m.data() + std::size_t(r) * amb, std::size_t(amb)};
    }
};

struct GeneratorSet {
    std::vector<Subspace> items;                   // deterministic order
    std::unordered_map<std::string, int> index;    // canonical key -> position
};

/// f(x,y) = sum x_i conj(y_i).  Throws on length mismatch.
Field::Elem hermitian_form(const HermitianSpace& H,
                           std::span<const Field::Elem> x,
                           std::span<const Field::Elem> y);

/// True iff f vanishes on all pairs of basis vectors.  Rejects dim 0.
bool is_totally_isotropic(const HermitianSpace& H, const Subspace& S);

/// All generators (maximal totally isotropic subspaces, dimension d), each
/// exactly once, ordered lexicographically by canonical basis.  Built by
/// extending totally isotropic flags inside perps.  Throws if the result
/// would exceed `cap`.
GeneratorSet enumerate_generators(const HermitianSpace& H, std::size_t cap = 10000);

/// Codimension-relation matrices A_0..A_d of the dual polar graph:
/// A_i[a][b] = 1 iff dim(a cap b) = d - i.  A_0 = I, sum A_i = J, and A_d is
/// the oppositeness matrix (pairwise disjoint generators).
std::vector<BitMatrix> relation_matrices(const HermitianSpace& H,
                                         const GeneratorSet& G);

/// Reduced row echelon form over F; returns the rank.  Rows are modified in
/// place; the first `rank` rows form the canonical basis.
int rref(const Field& F, std::vector<Field::Elem>& rows, int nrows, int ncols);

}  // namespace opprank
