#include "opprank/bounds.hpp"

#include <stdexcept>

#include "opprank/field.hpp"
#include "opprank/scheme.hpp"

namespace opprank {

namespace {

mpz_class zpow(const mpz_class& base, long e) {
    if (e < 0) throw std::invalid_argument("zpow: negative exponent");
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), (unsigned long)e);
    return r;
}

mpz_class exact_div(const mpz_class& num, const mpz_class& den) {
    mpz_class q = num / den;
    if (q * den != num)
        throw std::invalid_argument("bounds: non-integral result (misuse)");
    return q;
}

}  // namespace

mpz_class clique_bound_from_rank(const mpz_class& r, long p) {
    if (r < 0 || !is_prime(p))
        throw std::invalid_argument("clique_bound_from_rank: need r >= 0, p prime");
    return (r % p == 0) ? r + 1 : r;
}

bool lemma1_admits(const mpz_class& r, long p, const mpz_class& y) {
    if (!is_prime(p)) throw std::invalid_argument("lemma1_admits: p must be prime");
    if ((y - 1) % p == 0) return y <= r + 1;
    return y <= r;
}

mpz_class steinberg_lift(const mpz_class& r_prime, long t) {
    if (r_prime < 1 || t < 1)
        throw std::invalid_argument("steinberg_lift: need r' >= 1, t >= 1");
    return zpow(r_prime, t);
}

BoundReport theorem1_bound(long p, long t, int d) {
    if (!is_prime(p)) throw std::invalid_argument("theorem1_bound: p must be prime");
    if (t < 1) throw std::invalid_argument("theorem1_bound: t must be >= 1");
    if (d < 2 || d % 2 != 0)
        throw std::invalid_argument("theorem1_bound: d must be even and >= 2");
    BoundReport rep;
    rep.params = {{"p", p}, {"t", t}, {"d", d}};
    if (d == 2 && p == 3) {
        rep.family = "thm1b";
        rep.value = zpow(19, t);
    } else if (d == 2) {
        rep.family = "thm1a";
        mpz_class base = exact_div(2 * zpow(p, 3) + p, 3);
        rep.value = zpow(base, t) + 1;
    } else {
        rep.family = "thm1c";
        rep.value = zpow(multiplicity_f_d(p, d), t) + 1;
    }
    return rep;
}

BoundReport theorem2_bound(long t) {
    if (t < 1) throw std::invalid_argument("theorem2_bound: t must be >= 1");
    BoundReport rep;
    rep.family = "thm2";
    rep.params = {{"t", t}};
    rep.value = zpow(26, t) + 1;
    return rep;
}

std::vector<BoundReport> baseline_spread_bounds(long q, int d) {
    if (q < 2 || d < 1)
        throw std::invalid_argument("baseline_spread_bounds: need q >= 2, d >= 1");
    std::vector<BoundReport> out;
    BoundReport counting;
    counting.family = "counting_spread";
    counting.params = {{"q", q}, {"d", d}};
    counting.value = zpow(q, 2 * d - 1) + 1;
    out.push_back(counting);
    if (d % 2 == 1) {
        BoundReport odd;
        odd.family = "odd_d";
        odd.params = {{"q", q}, {"d", d}};
        odd.value = zpow(q, d) + 1;
        out.push_back(odd);
    }
    if (d == 2) {
        BoundReport db;
        db.family = "debeule";
        db.params = {{"q", q}, {"d", d}};
        db.value = exact_div(zpow(q, 3) + q + 2, 2);
        out.push_back(db);
    }
    return out;
}

BoundReport ovoid_counting_bound(long s, long r) {
    if (s < 1 || r < 1)
        throw std::invalid_argument("ovoid_counting_bound: need s, r >= 1");
    BoundReport rep;
    rep.family = "counting_ovoid";
    rep.params = {{"s", s}, {"r", r}};
    mpz_class sr = mpz_class(s) * r;
    rep.value = sr * sr + 1;
    return rep;
}

mpz_class published_rank_formula(const std::string& name, long p) {
    if (!is_prime(p))
        throw std::invalid_argument("published_rank_formula: p must be prime");
    mpz_class P = p;
    if (name == "h3_lines") return exact_div(2 * zpow(P, 3) + P, 3);
    if (name == "h5_generators")
        return exact_div(11 * zpow(P, 5) + 5 * zpow(P, 3) + 4 * P, 20);
    if (name == "triality_hexagon") return exact_div(4 * zpow(P, 5) + P, 5);
    if (name == "h5_multiplicity_bound")
        return zpow(P, 5) - zpow(P, 4) + zpow(P, 3) - P * P + P;
    throw std::invalid_argument("published_rank_formula: unknown formula '" +
                                name + "'");
}

}  // namespace opprank
