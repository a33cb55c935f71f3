#include "opprank/field.hpp"

#include <algorithm>
#include <stdexcept>

namespace opprank {

namespace {

constexpr long kOrderCap = 1 << 16;
constexpr long kTableCap = 1024;  // build mul/inv/conj tables up to this order

// polynomial helpers over GF(p), coefficients low-to-high, trailing zeros trimmed
using Poly = std::vector<int>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, int p) {
    // m monic
    trim(a);
    while (a.size() >= m.size()) {
        int c = a.back();
        std::size_t shift = a.size() - m.size();
        for (std::size_t i = 0; i < m.size(); ++i) {
            int& x = a[shift + i];
            x = (x - c * m[i]) % p;
            if (x < 0) x += p;
        }
        trim(a);
    }
    return a;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    trim(c);
    return c;
}

}  // namespace

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool poly_irreducible(const std::vector<int>& poly, int p) {
    Poly f = poly;
    trim(f);
    if (f.size() < 2) return false;
    std::size_t deg = f.size() - 1;
    if (deg == 1) return true;
    // trial division by every monic polynomial of degree 1..deg/2
    for (std::size_t dd = 1; dd <= deg / 2; ++dd) {
        long count = 1;
        for (std::size_t i = 0; i < dd; ++i) count *= p;
        for (long idx = 0; idx < count; ++idx) {
            Poly g(dd + 1, 0);
            long t = idx;
            for (std::size_t i = 0; i < dd; ++i) { g[i] = int(t % p); t /= p; }
            g[dd] = 1;
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

FieldSpec make_field(int p, int k) {
    if (!is_prime(p)) throw std::invalid_argument("make_field: p must be prime");
    if (k < 1) throw std::invalid_argument("make_field: k must be >= 1");
    long order = 1;
    for (int i = 0; i < k; ++i) {
        order *= p;
        if (order > kOrderCap)
            throw std::invalid_argument("make_field: field order exceeds 2^16");
    }
    FieldSpec spec;
    spec.p = p;
    spec.k = k;
    spec.order = order;
    // scan candidate coefficient tuples (c_0,...,c_{k-1}) in lexicographic
    // order, c_0 most significant
    for (long idx = 0;; ++idx) {
        if (idx >= order) throw std::logic_error("make_field: no irreducible found");
        // idx-th tuple (c_0,...,c_{k-1}) in lex order: c_0 is the most
        // significant base-p digit of idx
        Poly m(k + 1, 0);
        long t = idx;
        for (int i = k - 1; i >= 0; --i) { m[i] = int(t % p); t /= p; }
        m[k] = 1;
        bool ok = (k == 1) ? true : poly_irreducible(m, p);
        if (ok) {
            spec.modulus = m;
            return spec;
        }
    }
}

Field::Field(FieldSpec spec) : spec_(std::move(spec)) {
    if (spec_.p < 2 || !is_prime(spec_.p))
        throw std::invalid_argument("Field: non-prime characteristic");
    if ((int)spec_.modulus.size() != spec_.k + 1 || spec_.modulus.back() != 1)
        throw std::invalid_argument("Field: modulus must be monic of degree k");
    if (spec_.k > 1 && !poly_irreducible(spec_.modulus, spec_.p))
        throw std::invalid_argument("Field: modulus is reducible");
    long order = 1;
    for (int i = 0; i < spec_.k; ++i) order *= spec_.p;
    if (spec_.order == 0) spec_.order = order;
    if (spec_.order != order || order < 2 || order > kOrderCap)
        throw std::invalid_argument("Field: bad order");
    if (spec_.k % 2 == 0) {
        q_ = 1;
        for (int i = 0; i < spec_.k / 2; ++i) q_ *= spec_.p;
    }
    if (order <= kTableCap) {
        mul_table_.assign(std::size_t(order) * order, 0);
        for (long a = 0; a < order; ++a)
            for (long b = a; b < order; ++b) {
                Elem v = mul_generic(Elem(a), Elem(b));
                mul_table_[a * order + b] = v;
                mul_table_[b * order + a] = v;
            }
        inv_table_.assign(order, 0);
        for (long a = 1; a < order; ++a)
            inv_table_[a] = pow(Elem(a), order - 2);
        if (q_) {
            conj_table_.assign(order, 0);
            for (long a = 0; a < order; ++a)
                conj_table_[a] = pow(Elem(a), q_);
        }
    }
}

Field::Elem Field::add(Elem a, Elem b) const {
    if (spec_.p == 2) return a ^ b;
    Elem r = 0, mult = 1;
    for (int i = 0; i < spec_.k; ++i) {
        int da = int(a % spec_.p), db = int(b % spec_.p);
        r += Elem((da + db) % spec_.p) * mult;
        a /= spec_.p; b /= spec_.p; mult *= spec_.p;
    }
    return r;
}

Field::Elem Field::neg(Elem a) const {
    if (spec_.p == 2) return a;
    Elem r = 0, mult = 1;
    for (int i = 0; i < spec_.k; ++i) {
        int da = int(a % spec_.p);
        r += Elem((spec_.p - da) % spec_.p) * mult;
        a /= spec_.p; mult *= spec_.p;
    }
    return r;
}

Field::Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Field::Elem Field::mul_generic(Elem a, Elem b) const {
    Poly pa(spec_.k), pb(spec_.k);
    for (int i = 0; i < spec_.k; ++i) { pa[i] = int(a % spec_.p); a /= spec_.p; }
    for (int i = 0; i < spec_.k; ++i) { pb[i] = int(b % spec_.p); b /= spec_.p; }
    Poly pc = poly_mod(poly_mul(pa, pb, spec_.p), spec_.modulus, spec_.p);
    Elem r = 0;
    for (std::size_t i = pc.size(); i-- > 0;) r = r * Elem(spec_.p) + Elem(pc[i]);
    return r;
}

Field::Elem Field::mul(Elem a, Elem b) const {
    if (!mul_table_.empty()) return mul_table_[std::size_t(a) * spec_.order + b];
    return mul_generic(a, b);
}

Field::Elem Field::pow(Elem a, long e) const {
    if (e < 0) { a = inv(a); e = -e; }
    Elem r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

Field::Elem Field::inv(Elem a) const {
    if (a == 0) throw std::domain_error("Field: division by zero");
    if (!inv_table_.empty()) return inv_table_[a];
    return pow(a, spec_.order - 2);
}

Field::Elem Field::div(Elem a, Elem b) const { return mul(a, inv(b)); }

long Field::conj_subfield_order() const {
    if (!q_) throw std::domain_error("Field: order is not a square (odd k)");
    return q_;
}

Field::Elem Field::conj(Elem a) const {
    if (!q_) throw std::domain_error("Field: order is not a square (odd k)");
    if (!conj_table_.empty()) return conj_table_[a];
    return pow(a, q_);
}

std::vector<int> Field::coeffs(Elem a) const {
    std::vector<int> c(spec_.k);
    for (int i = 0; i < spec_.k; ++i) { c[i] = int(a % spec_.p); a /= spec_.p; }
    return c;
}

Field::Elem Field::from_coeffs(const std::vector<int>& c) const {
    if ((int)c.size() != spec_.k)
        throw std::invalid_argument("Field: coefficient vector of wrong length");
    Elem r = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] < 0 || c[i] >= spec_.p)
            throw std::invalid_argument("Field: coefficient out of range");
        r = r * Elem(spec_.p) + Elem(c[i]);
    }
    return r;
}

namespace {
const Field& same_field(const FieldElement& a, const FieldElement& b) {
    if (a.field == nullptr || b.field == nullptr)
        throw std::invalid_argument("FieldElement: unbound element");
    if (a.field->spec().p != b.field->spec().p ||
        a.field->spec().k != b.field->spec().k ||
        a.field->spec().modulus != b.field->spec().modulus)
        throw std::invalid_argument("FieldElement: mixed fields");
    return *a.field;
}
}  // namespace

FieldElement operator+(FieldElement a, FieldElement b) {
    const Field& f = same_field(a, b);
    return {f, f.add(a.v, b.v)};
}
FieldElement operator-(FieldElement a, FieldElement b) {
    const Field& f = same_field(a, b);
    return {f, f.sub(a.v, b.v)};
}
FieldElement operator*(FieldElement a, FieldElement b) {
    const Field& f = same_field(a, b);
    return {f, f.mul(a.v, b.v)};
}
FieldElement operator/(FieldElement a, FieldElement b) {
    const Field& f = same_field(a, b);
    return {f, f.div(a.v, b.v)};
}
bool operator==(FieldElement a, FieldElement b) {
    same_field(a, b);
    return a.v == b.v;
}

}  // namespace opprank
