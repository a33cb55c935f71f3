#pragma once

#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace opprank {

struct BoundReport {
    std::string family;  // lemma1 | thm1a | thm1b | thm1c | thm2 |
                         // counting_spread | counting_ovoid | odd_d | debeule
    std::map<std::string, long> params;
    mpz_class value;
};

/// Best unconditional clique bound from a p-rank r: r+1 if p | r, else r
/// (|Y| = r+1 is only consistent with the two-case statement when p | r).
mpz_class clique_bound_from_rank(const mpz_class& r, long p);

/// The two-case statement itself: does clique size y satisfy the bound for
/// rank r mod p?  (y <= r+1 when p | y-1, else y <= r.)
bool lemma1_admits(const mpz_class& r, long p, const mpz_class& y);

/// rank_p(A(q)) = rank_p(A(p))^t for q = p^t: returns r_prime^t exactly.
mpz_class steinberg_lift(const mpz_class& r_prime, long t);

/// Partial-spread bound for H(2d-1, q^2), q = p^t, d even:
///   d = 2:        ((2p^3+p)/3)^t + 1            (family thm1a)
///   d = 2, p = 3: 19^t                          (family thm1b)
///   d > 2:        (p^{2d-1} - p(p^{2d-2}-1)/(p+1))^t + 1   (family thm1c)
BoundReport theorem1_bound(long p, long t, int d);

/// Partial-ovoid bound 26^t + 1 for the Ree-Tits octagon O(2^t).
BoundReport theorem2_bound(long t);

/// Legacy comparison bounds for partial spreads of H(2d-1, q^2):
/// counting q^{2d-1}+1 always; q^d+1 for odd d; (q^3+q+2)/2 for d = 2.
std::vector<BoundReport> baseline_spread_bounds(long q, int d);

/// Counting bound (sr)^2 + 1 for partial ovoids of a generalized octagon.
BoundReport ovoid_counting_bound(long s, long r);

/// Published p-rank formulas evaluated exactly:
///   h3_lines              (2p^3+p)/3
///   h5_generators         (11p^5+5p^3+4p)/20
///   triality_hexagon      (4p^5+p)/5
///   h5_multiplicity_bound p^5-p^4+p^3-p^2+p
/// Throws when the division is not exact (signals misuse).
mpz_class published_rank_formula(const std::string& name, long p);

}  // namespace opprank
