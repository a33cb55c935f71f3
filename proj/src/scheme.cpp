#include "opprank/scheme.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "opprank/field.hpp"

namespace opprank {

namespace {

std::string ijk(int i, int j, int k) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + "," +
           std::to_string(k) + ")";
}

// exact characteristic polynomial of a rational matrix (Faddeev-LeVerrier),
// returned monic, coefficients low-to-high
std::vector<mpq_class> char_poly(const RatMat& M) {
    const std::size_t n = M.size();
    RatMat Ak = M;
    std::vector<mpq_class> c(n + 1);
    c[n] = 1;
    RatMat work;
    for (std::size_t k = 1; k <= n; ++k) {
        if (k > 1) {
            // Ak = M * (A_{k-1} + c_{n-k+1} I)
            work.assign(n, std::vector<mpq_class>(n, 0));
            for (std::size_t i = 0; i < n; ++i) Ak[i][i] += c[n - k + 1];
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t l = 0; l < n; ++l) {
                    if (M[i][l] == 0) continue;
                    for (std::size_t j = 0; j < n; ++j)
                        work[i][j] += M[i][l] * Ak[l][j];
                }
            Ak.swap(work);
        }
        mpq_class tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += Ak[i][i];
        c[n - k] = -tr / long(k);
    }
    return c;
}

// all integer roots (with multiplicity) of a monic integer-coefficient
// polynomial; empty result marks a non-integral root
std::vector<mpz_class> integer_roots(std::vector<mpq_class> poly) {
    std::vector<mpz_class> roots;
    auto eval = [&](const mpz_class& x) {
        mpq_class acc = 0;
        for (std::size_t i = poly.size(); i-- > 0;) acc = acc * x + poly[i];
        return acc;
    };
    while (poly.size() > 1) {
        // trailing zero coefficients: root 0
        if (poly[0] == 0) {
            roots.emplace_back(0);
            poly.erase(poly.begin());
            continue;
        }
        if (poly[0].get_den() != 1)
            return {};  // monic integer polynomial expected
        mpz_class c0 = abs(poly[0].get_num());
        bool found = false;
        for (mpz_class t = 1; t * t <= c0 && !found; ++t) {
            if (c0 % t != 0) continue;
            const mpz_class cofactor = c0 / t;
            for (const mpz_class& cand : {t, cofactor}) {
                for (int sgn : {1, -1}) {
                    mpz_class x = sgn * cand;
                    if (eval(x) == 0) {
                        roots.push_back(x);
                        // synthetic division by (X - x)
                        std::vector<mpq_class> quo(poly.size() - 1);
                        mpq_class carry = 0;
                        for (std::size_t i = poly.size(); i-- > 1;) {
                            carry = poly[i] + carry * x;
                            quo[i - 1] = carry;
                        }
                        poly = std::move(quo);
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
        }
        if (!found) return {};
    }
    return roots;
}

}  // namespace

SchemeData verify_scheme_axioms(std::vector<BitMatrix> A) {
    if (A.empty()) throw std::invalid_argument("scheme: no matrices");
    const std::size_t n = A[0].rows();
    const int d = int(A.size()) - 1;
    for (const auto& m : A)
        if (m.rows() != n || m.cols() != n)
            throw std::invalid_argument("scheme: matrices must be square, equal size");
    if (!(A[0] == BitMatrix::identity(n)))
        throw std::invalid_argument("scheme axiom violation: A_0 != I");
    for (int i = 0; i <= d; ++i) {
        if (!A[i].is_symmetric())
            throw std::invalid_argument("scheme axiom violation: A_" +
                                        std::to_string(i) + " not symmetric");
    }
    // partition: sum A_i = J, checked wordwise (disjoint and covering)
    for (std::size_t r = 0; r < n; ++r) {
        std::size_t total = 0;
        for (int i = 0; i <= d; ++i) total += A[i].row_sum(r);
        if (total != n)
            throw std::invalid_argument(
                "scheme axiom violation: relations do not partition row " +
                std::to_string(r));
        for (std::size_t w = 0; w < A[0].words_per_row(); ++w) {
            uint64_t acc = 0;
            for (int i = 0; i <= d; ++i) {
                if (acc & A[i].row(r)[w])
                    throw std::invalid_argument(
                        "scheme axiom violation: overlapping relations in row " +
                        std::to_string(r));
                acc |= A[i].row(r)[w];
            }
        }
    }
    SchemeData S;
    S.n = n;
    S.d = d;
    S.p_ijk.assign(std::size_t(d + 1) * (d + 1) * (d + 1), -1);
    // relation index of every pair
    std::vector<std::vector<int8_t>> rel(n, std::vector<int8_t>(n, -1));
    for (int i = 0; i <= d; ++i)
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                if (A[i].get(r, c)) rel[r][c] = int8_t(i);
    // (A_i A_j)[x][y] = |{z : x R_i z, z R_j y}| = popcount(row_i(x) & row_j(y))
    // (symmetry of A_j makes column y of A_j equal to row y)
    for (int i = 0; i <= d; ++i)
        for (int j = 0; j <= d; ++j) {
            for (std::size_t x = 0; x < n; ++x)
                for (std::size_t y = 0; y < n; ++y) {
                    long v = long(A[i].row_and_popcount(x, A[j], y));
                    long& slot =
                        S.p_ijk[(std::size_t(i) * (d + 1) + j) * (d + 1) + rel[x][y]];
                    if (slot < 0)
                        slot = v;
                    else if (slot != v)
                        throw std::invalid_argument(
                            "scheme axiom violation: p_ijk not constant at " +
                            ijk(i, j, rel[x][y]) + ", entry (" + std::to_string(x) +
                            "," + std::to_string(y) + ")");
                }
        }
    for (auto& v : S.p_ijk)
        if (v < 0) v = 0;  // relation class empty for that (i,j) pair
    S.A = std::move(A);
    return S;
}

void eigenmatrices_metric(SchemeData& S) {
    const int d = S.d;
    if (d < 1) throw std::invalid_argument("eigenmatrices: need d >= 1");
    if (S.p_ijk.empty()) throw std::invalid_argument("eigenmatrices: run axioms first");
    // metric check: p_{1,i}^k = 0 for |k-i| > 1 and the off-diagonal chain nonzero
    for (int i = 0; i <= d; ++i)
        for (int k = 0; k <= d; ++k)
            if (std::abs(k - i) > 1 && S.p(1, i, k) != 0)
                throw std::invalid_argument("eigenmatrices: scheme is not metric (p_1," +
                                            std::to_string(i) + "^" +
                                            std::to_string(k) + " != 0)");
    for (int i = 0; i + 1 <= d; ++i)
        if (S.p(1, i, i + 1) == 0)
            throw std::invalid_argument("eigenmatrices: scheme is not metric (chain broken)");

    // v_i(x): A_i = v_i(A_1); three-term recurrence
    std::vector<std::vector<mpq_class>> v(d + 1);
    v[0] = {1};
    v[1] = {0, 1};
    for (int i = 1; i < d; ++i) {
        // x * v_i - p_{1,i}^i v_i - p_{1,i}^{i-1} v_{i-1}, divided by p_{1,i}^{i+1}
        std::vector<mpq_class> next(v[i].size() + 1, 0);
        for (std::size_t t = 0; t < v[i].size(); ++t) next[t + 1] += v[i][t];
        for (std::size_t t = 0; t < v[i].size(); ++t) next[t] -= v[i][t] * S.p(1, i, i);
        for (std::size_t t = 0; t < v[i - 1].size(); ++t)
            next[t] -= v[i - 1][t] * S.p(1, i, i - 1);
        for (auto& c : next) c /= S.p(1, i, i + 1);
        v[i + 1] = std::move(next);
    }

    // intersection matrix of A_1: L[k][i] = p_{1,i}^k, eigenvalues = spectrum of A_1
    RatMat L(d + 1, std::vector<mpq_class>(d + 1, 0));
    for (int k = 0; k <= d; ++k)
        for (int i = 0; i <= d; ++i) L[k][i] = S.p(1, i, k);
    auto cp = char_poly(L);
    auto roots = integer_roots(cp);
    if ((int)roots.size() != d + 1)
        throw std::invalid_argument(
            "eigenmatrices: non-integral eigenvalue (characteristic polynomial "
            "does not split over Z)");
    std::sort(roots.begin(), roots.end(), std::greater<>());
    for (int i = 0; i + 1 <= d; ++i)
        if (roots[i] == roots[i + 1])
            throw std::invalid_argument("eigenmatrices: repeated eigenvalue");
    S.theta = roots;

    S.P.assign(d + 1, std::vector<mpq_class>(d + 1, 0));
    for (int e = 0; e <= d; ++e)
        for (int j = 0; j <= d; ++j) {
            mpq_class acc = 0;
            for (std::size_t t = v[j].size(); t-- > 0;)
                acc = acc * S.theta[e] + v[j][t];
            S.P[e][j] = acc;
            if (acc.get_den() != 1)
                throw std::logic_error("eigenmatrices: non-integral P entry");
        }

    // Q = n P^{-1} by exact Gauss-Jordan
    const int m = d + 1;
    RatMat aug(m, std::vector<mpq_class>(2 * m, 0));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) aug[i][j] = S.P[i][j];
        aug[i][m + i] = 1;
    }
    for (int col = 0; col < m; ++col) {
        int piv = -1;
        for (int r2 = col; r2 < m; ++r2)
            if (aug[r2][col] != 0) { piv = r2; break; }
        if (piv < 0) throw std::logic_error("eigenmatrices: P is singular");
        std::swap(aug[piv], aug[col]);
        mpq_class inv = 1 / aug[col][col];
        for (auto& x : aug[col]) x *= inv;
        for (int r2 = 0; r2 < m; ++r2) {
            if (r2 == col || aug[r2][col] == 0) continue;
            mpq_class fct = aug[r2][col];
            for (int c2 = 0; c2 < 2 * m; ++c2) aug[r2][c2] -= fct * aug[col][c2];
        }
    }
    S.Q.assign(m, std::vector<mpq_class>(m, 0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) S.Q[i][j] = aug[i][m + j] * long(S.n);

    // multiplicities f_j = Q_{0j}: positive integers summing to n
    S.f.assign(m, 0);
    mpz_class total = 0;
    for (int j = 0; j < m; ++j) {
        if (S.Q[0][j].get_den() != 1 || S.Q[0][j] <= 0)
            throw std::invalid_argument("eigenmatrices: multiplicity f_" +
                                        std::to_string(j) +
                                        " is not a positive integer");
        S.f[j] = S.Q[0][j].get_num();
        total += S.f[j];
    }
    if (total != long(S.n))
        throw std::logic_error("eigenmatrices: multiplicities do not sum to n");
}

mpz_class multiplicity_f_d(long q, int d) {
    if (q < 2 || d < 2)
        throw std::invalid_argument("multiplicity_f_d: need q >= 2, d >= 2");
    mpz_class Q = q;
    mpz_class qp;  // q^{2d-1}
    mpz_pow_ui(qp.get_mpz_t(), Q.get_mpz_t(), 2 * d - 1);
    mpz_class qe;  // q^{2d-2}
    mpz_pow_ui(qe.get_mpz_t(), Q.get_mpz_t(), 2 * d - 2);
    mpz_class frac = (qe - 1) / (Q + 1);
    if (frac * (Q + 1) != qe - 1)
        throw std::logic_error("multiplicity_f_d: non-integral division");
    return qp - Q * frac;
}

CongruenceReport idempotent_congruence_check(const SchemeData& S, long p) {
    CongruenceReport rep;
    rep.d = S.d;
    rep.q = p;
    rep.n = S.n;
    if (S.d % 2 != 0)
        throw std::invalid_argument("idempotent_congruence_check: d must be even");
    if (!is_prime(p))
        throw std::invalid_argument("idempotent_congruence_check: q must be prime");
    const int d = S.d;
    mpz_class fd = multiplicity_f_d(p, d);
    rep.rank_bound = fd;
    // n p^{d-1} E_d = sum_i f_d (-1)^i p^{d-1-i} A_i; the i = d term is f_d / p
    if (fd % p != 0)
        throw std::logic_error(
            "idempotent_congruence_check: f_d not divisible by p");
    rep.integral = true;
    std::vector<mpz_class> coeff(d + 1);
    for (int i = 0; i < d; ++i) {
        mpz_class pw;
        mpz_class P = p;
        mpz_pow_ui(pw.get_mpz_t(), P.get_mpz_t(), d - 1 - i);
        coeff[i] = fd * pw * ((i % 2) ? -1 : 1);
    }
    coeff[d] = fd / p;  // d even: sign +
    // entrywise congruence to A_d mod p: relations partition the entries, so
    // walk every pair and compare the coefficient of its class
    std::vector<mpz_class> cmod(d + 1);
    for (int i = 0; i <= d; ++i) {
        cmod[i] = coeff[i] % p;
        if (cmod[i] < 0) cmod[i] += p;
    }
    for (std::size_t x = 0; x < S.n; ++x)
        for (std::size_t y = 0; y < S.n; ++y) {
            int cls = -1;
            for (int i = 0; i <= d; ++i)
                if (S.A[i].get(x, y)) { cls = i; break; }
            mpz_class want = (cls == d) ? 1 : 0;
            if (cmod[cls] != want) {
                rep.congruent = false;
                return rep;
            }
        }
    rep.congruent = true;
    return rep;
}

RatMat idempotent_matrix(const SchemeData& S, int j) {
    if (S.Q.empty())
        throw std::invalid_argument("idempotent_matrix: run eigenmatrices first");
    RatMat E(S.n, std::vector<mpq_class>(S.n, 0));
    for (int i = 0; i <= S.d; ++i) {
        mpq_class c = S.Q[i][j] / long(S.n);
        if (c == 0) continue;
        for (std::size_t x = 0; x < S.n; ++x)
            for (std::size_t y = 0; y < S.n; ++y)
                if (S.A[i].get(x, y)) E[x][y] += c;
    }
    return E;
}

}  // namespace opprank
