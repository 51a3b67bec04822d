#include <doctest.h>

#include <vector>

#include "agqss/gf.hpp"

using agqss::gf::FieldElement;
using agqss::gf::FieldSpec;

namespace {

// Independent reference arithmetic: residue polynomials as coefficient
// vectors, reduced by repeated subtraction of shifted multiples of the
// modulus. Deliberately shares no code with the library table builder.
struct RefField {
    int p;
    int m;
    std::vector<int> mod;  // ascending, size m+1

    std::vector<int> decode(int repr) const {
        std::vector<int> c(m, 0);
        for (int i = 0; i < m; ++i) {
            c[i] = repr % p;
            repr /= p;
        }
        return c;
    }

    int encode(const std::vector<int>& c) const {
        int r = 0;
        for (int i = m - 1; i >= 0; --i) r = r * p + c[i];
        return r;
    }

    int add(int a, int b) const {
        auto ca = decode(a), cb = decode(b);
        std::vector<int> s(m);
        for (int i = 0; i < m; ++i) s[i] = (ca[i] + cb[i]) % p;
        return encode(s);
    }

    int mul(int a, int b) const {
        auto ca = decode(a), cb = decode(b);
        std::vector<int> prod(2 * m - 1, 0);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
        for (int d = 2 * m - 2; d >= m; --d) {
            const int f = prod[d];
            if (f == 0) continue;
            for (int i = 0; i <= m; ++i) {
                const int idx = d - m + i;
                prod[idx] = ((prod[idx] - f * mod[i]) % p + p) % p;
            }
        }
        prod.resize(m);
        return encode(prod);
    }
};

}  // namespace

TEST_SUITE("gf") {

TEST_CASE("GF(4) tables match the hand-known field") {
    auto f4 = FieldSpec::make(2, 2);
    // repr 2 = x (call it w), repr 3 = x + 1 = w^2 under x^2 + x + 1.
    const int add_expect[4][4] = {
        {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    const int mul_expect[4][4] = {
        {0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            CHECK((f4->element(a) + f4->element(b)).repr() == add_expect[a][b]);
            CHECK((f4->element(a) * f4->element(b)).repr() == mul_expect[a][b]);
        }
    }
    CHECK(f4->inv_repr(2) == 3);
    CHECK(f4->inv_repr(3) == 2);
}

TEST_CASE("arithmetic agrees with independent polynomial reference") {
    struct Probe { int p, m; };
    for (Probe pr : {Probe{2, 2}, Probe{2, 3}, Probe{3, 2}, Probe{2, 4}, Probe{5, 2}, Probe{7, 1}}) {
        auto spec = FieldSpec::make(pr.p, pr.m);
        RefField ref{pr.p, pr.m, spec->modulus()};
        const int q = spec->order();
        for (int a = 0; a < q; ++a) {
            for (int b = 0; b < q; ++b) {
                CHECK(spec->add_repr(a, b) == ref.add(a, b));
                CHECK(spec->mul_repr(a, b) == ref.mul(a, b));
            }
        }
    }
}

TEST_CASE("field axioms hold exhaustively on small fields") {
    for (auto [p, m] : {std::pair{2, 2}, {2, 3}, {3, 2}, {2, 4}, {13, 1}}) {
        auto spec = FieldSpec::make(p, m);
        auto elems = spec->elements();
        const auto zero = spec->zero();
        const auto one = spec->one();
        for (auto a : elems) {
            CHECK(a + zero == a);
            CHECK(a * one == a);
            CHECK(a + (-a) == zero);
            CHECK(a - a == zero);
            if (!a.is_zero()) {
                CHECK(a * spec->element(spec->inv_repr(a.repr())) == one);
                CHECK(a / a == one);
            }
            for (auto b : elems) {
                CHECK(a + b == b + a);
                CHECK(a * b == b * a);
                for (auto c : elems) {
                    CHECK((a + b) + c == a + (b + c));
                    CHECK((a * b) * c == a * (b * c));
                    CHECK(a * (b + c) == a * b + a * c);
                }
            }
        }
    }
}

TEST_CASE("Frobenius map is additive in characteristic p") {
    for (auto [p, m] : {std::pair{3, 2}, {2, 4}}) {
        auto spec = FieldSpec::make(p, m);
        for (auto a : spec->elements())
            for (auto b : spec->elements())
                CHECK(pow(a + b, p) == pow(a, p) + pow(b, p));
    }
}

TEST_CASE("pow follows the multiplicative group order") {
    auto f9 = FieldSpec::make(3, 2);
    CHECK(pow(f9->zero(), 0).repr() == 1);  // 0^0 == 1 by convention
    CHECK(pow(f9->zero(), 5).repr() == 0);
    for (auto a : f9->elements()) {
        if (a.is_zero()) continue;
        CHECK(pow(a, 8) == f9->one());
        CHECK(pow(a, 9) == a);
        FieldElement acc = f9->one();
        for (int e = 0; e <= 12; ++e) {
            CHECK(pow(a, e) == acc);
            acc = acc * a;
        }
    }
}

TEST_CASE("default moduli are the documented ones") {
    CHECK(FieldSpec::default_modulus(2, 2) == std::vector<int>{1, 1, 1});
    CHECK(FieldSpec::default_modulus(2, 3) == std::vector<int>{1, 1, 0, 1});
    CHECK(FieldSpec::default_modulus(3, 2) == std::vector<int>{1, 0, 1});
    CHECK(FieldSpec::default_modulus(2, 4) == std::vector<int>{1, 1, 0, 0, 1});
    CHECK(FieldSpec::default_modulus(7, 1) == std::vector<int>{0, 1});
    // First irreducible in ascending coefficient order: x^2 + 2 over GF(5).
    CHECK(FieldSpec::default_modulus(5, 2) == std::vector<int>{2, 0, 1});
}

TEST_CASE("construction rejects invalid parameters") {
    CHECK_THROWS_AS(FieldSpec::make(4, 1), agqss::DomainError);   // p not prime
    CHECK_THROWS_AS(FieldSpec::make(2, 9), agqss::DomainError);   // q > 256
    CHECK_THROWS_AS(FieldSpec::make(3, 6), agqss::DomainError);   // q > 256
    CHECK_THROWS_AS(FieldSpec::make(2, 0), agqss::DomainError);
    // x^2 + 1 is reducible over GF(2): (x+1)^2.
    CHECK_THROWS_AS(FieldSpec::make(2, 2, {1, 0, 1}), agqss::DomainError);
    // x^2 + x is reducible over GF(3).
    CHECK_THROWS_AS(FieldSpec::make(3, 2, {0, 1, 1}), agqss::DomainError);
    CHECK_THROWS_AS(FieldSpec::make(2, 2, {1, 1, 0}), agqss::DomainError);  // not monic
    CHECK_THROWS_AS(FieldSpec::make(2, 2, {1, 1}), agqss::DomainError);     // wrong degree
    CHECK_THROWS_AS(FieldSpec::make(2, 2, {1, 2, 1}), agqss::DomainError);  // coeff out of range
    CHECK_NOTHROW(FieldSpec::make(2, 8));  // GF(256) is the supported maximum
}

TEST_CASE("element operations validate their operands") {
    auto f4 = FieldSpec::make(2, 2);
    auto f8 = FieldSpec::make(2, 3);
    CHECK_THROWS_AS(f4->element(4), agqss::DomainError);
    CHECK_THROWS_AS(f4->element(-1), agqss::DomainError);
    CHECK_THROWS_AS(f4->one() + f8->one(), agqss::DomainError);
    CHECK_THROWS_AS((void)(f4->one() == f8->one()), agqss::DomainError);
    CHECK_THROWS_AS(f4->one() / f4->zero(), agqss::DomainError);
    CHECK_THROWS_AS(f4->inv_repr(0), agqss::DomainError);

    // Same (p, m, modulus) built twice counts as the same field.
    auto f4b = FieldSpec::make(2, 2, {1, 1, 1});
    CHECK(f4->one() + f4b->element(2) == f4->element(3));

    auto elems = f4->elements();
    REQUIRE(elems.size() == 4);
    for (int r = 0; r < 4; ++r) CHECK(elems[r].repr() == r);
}

}  // TEST_SUITE
