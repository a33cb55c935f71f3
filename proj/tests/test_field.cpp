#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "opprank/field.hpp"

using namespace opprank;

namespace {

// independent oracle: exhaustive search for the least irreducible quadratic
std::vector<int> least_irreducible_quadratic(int p) {
    for (int c0 = 0; c0 < p; ++c0)
        for (int c1 = 0; c1 < p; ++c1) {
            std::vector<int> m = {c0, c1, 1};
            bool has_root = false;
            for (int x = 0; x < p && !has_root; ++x)
                if ((x * x + c1 * x + c0) % p == 0) has_root = true;
            if (!has_root) return m;
        }
    return {};
}

}  // namespace

TEST_CASE("make_field picks the lex-least irreducible modulus") {
    CHECK(make_field(2, 1).modulus == std::vector<int>{0, 1});  // x
    CHECK(make_field(2, 2).modulus == std::vector<int>{1, 1, 1});  // x^2+x+1
    // oracle: exhaustive irreducibility test over all 9 monic quadratics
    CHECK(make_field(3, 2).modulus == least_irreducible_quadratic(3));
    CHECK(make_field(3, 2).modulus == std::vector<int>{1, 0, 1});
    CHECK(make_field(5, 2).modulus == least_irreducible_quadratic(5));

    CHECK_THROWS_AS(make_field(4, 1), std::invalid_argument);   // non-prime
    CHECK_THROWS_AS(make_field(6, 2), std::invalid_argument);
    CHECK_THROWS_AS(make_field(2, 17), std::invalid_argument);  // 2^17 > cap
    CHECK_THROWS_AS(make_field(3, 0), std::invalid_argument);
}

TEST_CASE("GF(4) basics") {
    Field f(2, 2);
    // omega = x has index 2; omega^2 = omega + 1 (index 3) under x^2+x+1
    CHECK(f.mul(f.one(), f.one()) == f.one());
    CHECK(f.mul(2, 2) == 3);
    CHECK(f.conj(2) == 3);  // conj(omega) = omega^2 = omega+1
    CHECK(f.conj(1) == 1);
    CHECK_THROWS_AS(f.inv(0), std::domain_error);
    CHECK_THROWS_AS(f.div(1, 0), std::domain_error);
}

TEST_CASE("GF(9): every nonzero element has an inverse") {
    Field f(3, 2);
    for (Field::Elem a = 1; a < f.order(); ++a)
        CHECK(f.mul(a, f.inv(a)) == f.one());
}

TEST_CASE("field axioms hold exhaustively for small orders") {
    for (auto [p, k] : {std::pair{2, 2}, {2, 3}, {3, 2}, {5, 1}, {2, 4},
                        {3, 4}, {2, 8}}) {
        Field f(p, k);
        const long n = f.order();
        for (long a = 0; a < n; ++a) {
            CHECK(f.add(Field::Elem(a), 0) == Field::Elem(a));
            CHECK(f.mul(Field::Elem(a), 1) == Field::Elem(a));
            CHECK(f.add(Field::Elem(a), f.neg(Field::Elem(a))) == 0);
        }
        for (long a = 0; a < n; ++a)
            for (long b = 0; b < n; ++b) {
                auto ea = Field::Elem(a), eb = Field::Elem(b);
                CHECK(f.add(ea, eb) == f.add(eb, ea));
                CHECK(f.mul(ea, eb) == f.mul(eb, ea));
                for (long c = 0; c < n; c += (n > 32 ? 7 : 1)) {
                    auto ec = Field::Elem(c);
                    CHECK(f.add(f.add(ea, eb), ec) == f.add(ea, f.add(eb, ec)));
                    CHECK(f.mul(f.mul(ea, eb), ec) == f.mul(ea, f.mul(eb, ec)));
                    CHECK(f.mul(ea, f.add(eb, ec)) ==
                          f.add(f.mul(ea, eb), f.mul(ea, ec)));
                }
            }
    }
}

TEST_CASE("conj is an involutory automorphism fixing exactly GF(q)") {
    for (auto [p, k] : {std::pair{2, 2}, {3, 2}, {2, 4}, {5, 2}, {3, 4}}) {
        Field f(p, k);
        const long q = f.conj_subfield_order();
        long fixed = 0;
        for (long a = 0; a < f.order(); ++a) {
            auto ea = Field::Elem(a);
            CHECK(f.conj(f.conj(ea)) == ea);
            if (f.conj(ea) == ea) ++fixed;
            // automorphism property, sampled second argument
            for (long b = 0; b < f.order(); b += 3) {
                auto eb = Field::Elem(b);
                CHECK(f.conj(f.mul(ea, eb)) == f.mul(f.conj(ea), f.conj(eb)));
                CHECK(f.conj(f.add(ea, eb)) == f.add(f.conj(ea), f.conj(eb)));
            }
        }
        CHECK(fixed == q);
    }
    // GF(9), q=3: three fixed points (spec example)
    Field f9(3, 2);
    long fixed = 0;
    for (long a = 0; a < 9; ++a)
        if (f9.conj(Field::Elem(a)) == Field::Elem(a)) ++fixed;
    CHECK(fixed == 3);
    // odd-degree fields have no conjugation
    Field f8(2, 3);
    CHECK_THROWS_AS(f8.conj(1), std::domain_error);
}

TEST_CASE("norms land in the subfield, exhaustively for q <= 16") {
    for (auto [p, k] : {std::pair{2, 2}, {3, 2}, {2, 4}, {5, 2}, {7, 2},
                        {2, 6}, {3, 4}, {2, 8}}) {
        Field f(p, k);
        for (long a = 0; a < f.order(); ++a) {
            auto n = f.norm(Field::Elem(a));
            CHECK(f.conj(n) == n);  // fixed by conj <=> in GF(q)
        }
    }
}

TEST_CASE("mixed-field element operations throw") {
    Field f4(2, 2), f9(3, 2), f4b(2, 2);
    FieldElement a(f4, 2), b(f9, 2), c(f4b, 3);
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK_THROWS_AS(a * b, std::invalid_argument);
    CHECK((a + c).v == 1);  // same spec, distinct instances: fine
    CHECK((a * a).v == 3);
}

TEST_CASE("coefficient round-trip and canonicity") {
    Field f(3, 4);
    for (long a = 0; a < f.order(); a += 5) {
        auto c = f.coeffs(Field::Elem(a));
        CHECK(f.from_coeffs(c) == Field::Elem(a));
    }
    CHECK_THROWS_AS(f.from_coeffs({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(f.from_coeffs({3, 0, 0, 0}), std::invalid_argument);
}
