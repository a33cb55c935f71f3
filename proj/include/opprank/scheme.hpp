#pragma once

#include <vector>

#include <gmpxx.h>

#include "opprank/bitmat.hpp"
#include "opprank/modrank.hpp"

namespace opprank {

/// A symmetric association scheme given by its adjacency matrices A_0..A_d,
/// together with everything derived from them.  P and Q are the (d+1)^2
/// rational eigenmatrices (P*Q = n*I), f the multiplicities f_i = Q_{0i}.
struct SchemeData {
    std::size_t n = 0;
    int d = 0;
    std::vector<BitMatrix> A;
    std::vector<long> p_ijk;          // (d+1)^3 intersection numbers
    // filled by eigenmatrices_metric:
    std::vector<mpz_class> theta;     // eigenvalues of A_1, decreasing
    RatMat P, Q;
    std::vector<mpz_class> f;

    long p(int i, int j, int k) const {
        return p_ijk[(std::size_t(i) * (d + 1) + j) * (d + 1) + k];
    }
};

/// Verify the scheme axioms (partition, identity, symmetry, constant
/// intersection numbers via exact integer matrix products) and compute
/// p_ijk.  Throws with an (i,j,k,entry) witness on violation.
SchemeData verify_scheme_axioms(std::vector<BitMatrix> A);

/// Eigenmatrices of a metric scheme: builds the tridiagonal intersection
/// recurrence for A_1, extracts the (required integral) eigenvalues from the
/// exact characteristic polynomial, derives P by the three-term recurrence
/// and Q = n P^{-1} by exact rational inversion.  Eigenvalues are ordered
/// decreasing, so eigenspace 0 is the all-ones space and f_0 = 1.
/// Throws on non-metric schemes and non-integral spectra.
void eigenmatrices_metric(SchemeData& S);

/// f_d = q^{2d-1} - q (q^{2d-2}-1)/(q+1), the oppositeness idempotent rank
/// of the dual polar scheme of H(2d-1, q^2).
mpz_class multiplicity_f_d(long q, int d);

struct CongruenceReport {
    int d = 0;
    long q = 0;           // the prime p
    std::size_t n = 0;
    bool integral = false;
    bool congruent = false;
    mpz_class rank_bound;  // f_d
};

/// For the dual polar scheme of H(2d-1, p^2) with d even: checks that
/// n p^{d-1} E_d = sum_i f_d (-1)^i p^{d-1-i} A_i has integer entries and is
/// entrywise congruent to A_d mod p; reports the rank bound f_d.
CongruenceReport idempotent_congruence_check(const SchemeData& S, long p);

/// E_j = (1/n) sum_i Q_{ij} A_i as an exact rational matrix.
RatMat idempotent_matrix(const SchemeData& S, int j);

}  // namespace opprank
