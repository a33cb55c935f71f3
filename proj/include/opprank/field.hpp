#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace opprank {

/// Defining data of GF(p^k): prime p, degree k, and the monic irreducible
/// modulus polynomial (coefficients low-to-high, length k+1).
struct FieldSpec {
    int p = 0;
    int k = 0;
    std::vector<int> modulus;
    long order = 0;
};

bool is_prime(long n);

/// Irreducibility over GF(p) by trial division with all monic polynomials of
/// degree <= deg/2 (fields in scope are tiny).
bool poly_irreducible(const std::vector<int>& poly, int p);

/// FieldSpec whose modulus is the lexicographically least monic irreducible
/// polynomial of degree k over GF(p), coefficients compared low-to-high.
/// Deterministic.  Requires p prime, k >= 1, p^k <= 2^16.
FieldSpec make_field(int p, int k);

/// Arithmetic engine over GF(p^k).  An element is its canonical index
/// sum_i c_i p^i for the coefficient vector (c_0, ..., c_{k-1}); equality of
/// elements is equality of indices.  Multiplication is table-backed for small
/// orders and falls back to polynomial arithmetic otherwise.  Immutable and
/// safe to share across threads.
class Field {
public:
    using Elem = uint32_t;

    explicit Field(FieldSpec spec);
    Field(int p, int k) : Field(make_field(p, k)) {}

    const FieldSpec& spec() const { return spec_; }
    long order() const { return spec_.order; }
    int p() const { return spec_.p; }
    int k() const { return spec_.k; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;        // throws std::domain_error on 0
    Elem div(Elem a, Elem b) const;
    Elem pow(Elem a, long e) const;

    /// x -> x^q with q = p^{k/2}; requires even k (field order q^2).
    Elem conj(Elem a) const;
    /// q = p^{k/2} for even k.
    long conj_subfield_order() const;

    /// norm N(x) = x * conj(x); lands in the subfield GF(q).
    Elem norm(Elem a) const { return mul(a, conj(a)); }

    std::vector<int> coeffs(Elem a) const;
    Elem from_coeffs(const std::vector<int>& c) const;

    bool table_backed() const { return !mul_table_.empty(); }

private:
    Elem mul_generic(Elem a, Elem b) const;

    FieldSpec spec_;
    long q_ = 0;  // p^{k/2} when k even, else 0
    std::vector<Elem> mul_table_;   // order^2 entries when table-backed
    std::vector<Elem> inv_table_;
    std::vector<Elem> conj_table_;
};

/// Checked element wrapper: carries its field, mixed-field operations throw.
struct FieldElement {
    const Field* field = nullptr;
    Field::Elem v = 0;

    FieldElement() = default;
    FieldElement(const Field& f, Field::Elem x) : field(&f), v(x) {}

    friend FieldElement operator+(FieldElement a, FieldElement b);
    friend FieldElement operator-(FieldElement a, FieldElement b);
    friend FieldElement operator*(FieldElement a, FieldElement b);
    friend FieldElement operator/(FieldElement a, FieldElement b);
    friend bool operator==(FieldElement a, FieldElement b);
};

}  // namespace opprank
