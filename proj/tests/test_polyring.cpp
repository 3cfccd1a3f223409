#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "toricdd/format.hpp"
#include "toricdd/polynomial.hpp"
#include "toricdd/rng.hpp"

using namespace toricdd;

namespace {

RingPtr small_ring() { return RingSpec::dd_ring(1, 3, 1); }  // x[1,1,1..3], grevlex

Polynomial var(const RingPtr& ring, int j, int exp = 1) {
    return Polynomial::variable(ring, VarId::x(1, 1, j), exp);
}

Monomial mono(const RingPtr& ring, std::vector<std::int32_t> exps) {
    (void)ring;
    return Monomial(std::move(exps));
}

Polynomial random_poly(const RingPtr& ring, SplitMix64& rng, int max_terms = 5,
                       int max_exp = 3) {
    std::vector<Term> terms;
    int count = 1 + static_cast<int>(rng.below(max_terms));
    for (int t = 0; t < count; ++t) {
        std::vector<std::int32_t> exps(ring->nvars());
        for (auto& e : exps) e = static_cast<std::int32_t>(rng.below(max_exp + 1));
        long num = rng.nonzero_in(9);
        long den = 1 + static_cast<long>(rng.below(4));
        terms.push_back({Monomial(std::move(exps)), make_rational(num, den)});
    }
    return Polynomial::from_terms(ring, std::move(terms));
}

}  // namespace

TEST_CASE("addition identities") {
    auto ring = small_ring();
    auto x = var(ring, 1), y = var(ring, 2);

    CHECK(x + Polynomial::zero(ring) == x);
    CHECK((x + y) + (-x) == y);

    Polynomial half_x = x.scaled(make_rational(1, 2));
    Polynomial third_x = x.scaled(make_rational(1, 3));
    CHECK(half_x + third_x == x.scaled(make_rational(5, 6)));
}

TEST_CASE("multiplication identities") {
    auto ring = small_ring();
    auto x = var(ring, 1), y = var(ring, 2);

    Polynomial f = x + y.scaled(make_rational(2));
    CHECK(f * Polynomial::constant(ring, 1) == f);
    CHECK((x - y) * (x + y) == var(ring, 1, 2) - var(ring, 2, 2));
}

TEST_CASE("ring axioms on random triples") {
    auto ring = small_ring();
    SplitMix64 rng(12345);
    for (int round = 0; round < 100; ++round) {
        Polynomial f = random_poly(ring, rng);
        Polynomial g = random_poly(ring, rng);
        Polynomial h = random_poly(ring, rng);
        CHECK(f + g == g + f);
        CHECK(f * g == g * f);
        CHECK((f + g) + h == f + (g + h));
        CHECK(f * (g + h) == f * g + f * h);
        CHECK((f * g) * h == f * (g * h));
    }
}

TEST_CASE("ring mismatch is rejected") {
    auto r1 = small_ring();
    auto r2 = RingSpec::dd_ring(2, 2, 1);
    CHECK_THROWS_AS(var(r1, 1) + Polynomial::variable(r2, VarId::x(1, 2, 2)),
                    std::invalid_argument);
}

TEST_CASE("grevlex matches the hand-built reference table on three variables") {
    auto ring = small_ring();
    auto ord = MonomialOrder::grevlex();
    // degree-2 monomials in x1 > x2 > x3, grevlex descending:
    // x1^2 > x1x2 > x2^2 > x1x3 > x2x3 > x3^2
    std::vector<Monomial> expected = {
        mono(ring, {2, 0, 0}), mono(ring, {1, 1, 0}), mono(ring, {0, 2, 0}),
        mono(ring, {1, 0, 1}), mono(ring, {0, 1, 1}), mono(ring, {0, 0, 2}),
    };
    for (std::size_t a = 0; a < expected.size(); ++a)
        for (std::size_t b = 0; b < expected.size(); ++b) {
            int c = compare(expected[a], expected[b], ord);
            if (a < b) CHECK(c > 0);
            if (a == b) CHECK(c == 0);
            if (a > b) CHECK(c < 0);
        }
    // ties in degree are broken by the smaller exponent on the last variable
    CHECK(less_than(mono(ring, {1, 0, 1}), mono(ring, {0, 2, 0}), ord));
}

TEST_CASE("lex compares exponent vectors left to right") {
    auto ring = small_ring();
    auto ord = MonomialOrder::lex();
    CHECK(greater_than(mono(ring, {1, 0, 0}), mono(ring, {0, 5, 5}), ord));
    CHECK(greater_than(mono(ring, {2, 1, 0}), mono(ring, {2, 0, 9}), ord));
    CHECK(compare(mono(ring, {1, 2, 3}), mono(ring, {1, 2, 3}), ord) == 0);
}

TEST_CASE("elimination order puts the eliminated block first") {
    // roster: x[1,1,1], x[1,1,2], s[1]; eliminate s
    std::vector<VarId> roster = {VarId::x(1, 1, 1), VarId::x(1, 1, 2), VarId::s(1)};
    auto ring = RingSpec::make(1, 2, 1, roster, MonomialOrder::grevlex());
    auto ord = MonomialOrder::elimination({0, 0, 1});
    // s * x^5 > x^6: any monomial containing s beats any monomial free of it
    CHECK(greater_than(mono(ring, {5, 0, 1}), mono(ring, {6, 0, 0}), ord));
    CHECK(greater_than(mono(ring, {0, 0, 1}), mono(ring, {3, 3, 0}), ord));
}

TEST_CASE("order axioms on random monomials") {
    auto ring = small_ring();
    SplitMix64 rng(777);
    std::vector<MonomialOrder> orders = {MonomialOrder::grevlex(), MonomialOrder::lex(),
                                         MonomialOrder::elimination({1, 0, 0})};
    auto random_mono = [&]() {
        std::vector<std::int32_t> exps(3);
        for (auto& e : exps) e = static_cast<std::int32_t>(rng.below(4));
        return Monomial(std::move(exps));
    };
    for (const auto& ord : orders) {
        Monomial unit = Monomial::one(3);
        for (int round = 0; round < 200; ++round) {
            Monomial a = random_mono(), b = random_mono(), c = random_mono();
            // antisymmetry and totality
            CHECK(compare(a, b, ord) == -compare(b, a, ord));
            CHECK((compare(a, b, ord) == 0) == (a == b));
            // transitivity (on sorted triple)
            if (compare(a, b, ord) <= 0 && compare(b, c, ord) <= 0)
                CHECK(compare(a, c, ord) <= 0);
            // multiplicative and 1 is minimal
            if (compare(a, b, ord) < 0) CHECK(compare(a * c, b * c, ord) < 0);
            if (!a.is_one()) CHECK(greater_than(a, unit, ord));
        }
    }
}

TEST_CASE("apply_map substitutes and respects products") {
    auto xring = RingSpec::dd_ring(2, 2, 2);
    std::vector<VarId> st = {VarId::s(1), VarId::s(2), VarId::t(1), VarId::t(2),
                             VarId::t(3), VarId::t(4)};
    auto st_ring = RingSpec::make(2, 2, 2, st, MonomialOrder::grevlex());

    std::map<VarId, Polynomial> images;
    for (int l = 1; l <= 2; ++l)
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 2; ++j)
                images.emplace(VarId::x(l, i, j),
                               Polynomial::variable(st_ring, VarId::s(i)) *
                                   Polynomial::variable(st_ring, VarId::t((l - 1) * 2 + j)));

    Polynomial x11 = Polynomial::variable(xring, VarId::x(1, 1, 1));
    Polynomial sq = x11 * x11;
    Polynomial image = sq.apply_map(images, st_ring);
    Polynomial expected = Polynomial::variable(st_ring, VarId::s(1), 2) *
                          Polynomial::variable(st_ring, VarId::t(1), 2);
    CHECK(image == expected);

    SUBCASE("identity map returns the argument") {
        std::map<VarId, Polynomial> id;
        for (const auto& v : xring->roster) id.emplace(v, Polynomial::variable(xring, v));
        SplitMix64 rng(99);
        for (int round = 0; round < 20; ++round) {
            Polynomial f = random_poly(xring, rng);
            CHECK(f.apply_map(id, xring) == f);
        }
    }

    SUBCASE("homomorphism property on random pairs") {
        SplitMix64 rng(2024);
        for (int round = 0; round < 100; ++round) {
            Polynomial f = random_poly(xring, rng, 4, 2);
            Polynomial g = random_poly(xring, rng, 4, 2);
            CHECK((f * g).apply_map(images, st_ring) ==
                  f.apply_map(images, st_ring) * g.apply_map(images, st_ring));
            CHECK((f + g).apply_map(images, st_ring) ==
                  f.apply_map(images, st_ring) + g.apply_map(images, st_ring));
        }
    }

    SUBCASE("missing image is an error") {
        std::map<VarId, Polynomial> partial;
        partial.emplace(VarId::x(1, 1, 1), Polynomial::variable(st_ring, VarId::s(1)));
        Polynomial f = Polynomial::variable(xring, VarId::x(2, 2, 2));
        CHECK_THROWS_AS(f.apply_map(partial, st_ring), std::invalid_argument);
    }
}

TEST_CASE("text format round trip") {
    auto ring = RingSpec::dd_ring(2, 2, 2);
    SplitMix64 rng(31337);
    for (int round = 0; round < 100; ++round) {
        std::vector<Term> terms;
        int count = 1 + static_cast<int>(rng.below(6));
        for (int t = 0; t < count; ++t) {
            std::vector<std::int32_t> exps(ring->nvars());
            for (auto& e : exps) e = static_cast<std::int32_t>(rng.below(3));
            terms.push_back({Monomial(std::move(exps)),
                             make_rational(rng.nonzero_in(20), 1 + rng.below(7))});
        }
        Polynomial f = Polynomial::from_terms(ring, std::move(terms));
        CHECK(parse_polynomial(to_string(f), ring) == f);
    }
    CHECK(to_string(Polynomial::zero(ring)) == "0");
    CHECK(parse_polynomial("0", ring).is_zero());
}

TEST_CASE("printing style") {
    auto ring = small_ring();
    auto x = var(ring, 1), y = var(ring, 2);
    CHECK(to_string(x - y) == "x[1,1,1] - x[1,1,2]");
    CHECK(to_string(x.scaled(make_rational(1, 2)) + Polynomial::constant(ring, 3)) ==
          "1/2*x[1,1,1] + 3");
    CHECK(to_string(var(ring, 1, 2) * var(ring, 2)) == "x[1,1,1]^2*x[1,1,2]");
    Polynomial parsed = parse_polynomial("2*x[1,1,1]^2*x[1,1,2] - 1/3", ring);
    CHECK(parsed.term_count() == 2);
    CHECK(to_string(parsed) == "2*x[1,1,1]^2*x[1,1,2] - 1/3");
}
