#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>

#include "toricdd/ddideal.hpp"
#include "toricdd/format.hpp"
#include "toricdd/groebner.hpp"
#include "toricdd/rng.hpp"

using namespace toricdd;

namespace {

Polynomial var(const RingPtr& ring, const VarId& v, int exp = 1) {
    return Polynomial::variable(ring, v, exp);
}

bool is_reduced_basis(const GroebnerBasis& gb) {
    for (const auto& p : gb.basis) {
        if (p.is_zero() || p.leading_coeff() != 1) return false;
        for (const auto& q : gb.basis) {
            if (&p == &q) continue;
            for (const auto& t : p.terms())
                if (q.leading_monomial().divides(t.mono)) return false;
        }
    }
    return true;
}

bool all_s_pairs_vanish(const GroebnerBasis& gb) {
    for (std::size_t a = 0; a < gb.basis.size(); ++a)
        for (std::size_t b = a + 1; b < gb.basis.size(); ++b) {
            Polynomial s = s_polynomial(gb.basis[a], gb.basis[b], gb.order);
            if (!reduce(s, gb).is_zero()) return false;
        }
    return true;
}

// -- independent membership oracle -------------------------------------------
//
// For an ideal with weighted-homogeneous generators (positive weights), a
// weighted-homogeneous f of weighted degree D lies in the ideal iff it lies in
// the Q-span of { m * g : wdeg(m * g) = D }. Exact Gaussian elimination over
// the monomial basis; no Groebner machinery involved.

void monomials_of_wdegree(const std::vector<int>& weights, int target, int from,
                          std::vector<std::int32_t>& cur, std::vector<Monomial>& out) {
    if (from == static_cast<int>(weights.size())) {
        if (target == 0) out.push_back(Monomial(cur));
        return;
    }
    for (int e = 0; e * weights[from] <= target; ++e) {
        cur[from] = e;
        monomials_of_wdegree(weights, target - e * weights[from], from + 1, cur, out);
    }
    cur[from] = 0;
}

int wdeg(const Monomial& m, const std::vector<int>& weights) {
    int d = 0;
    for (int k = 0; k < m.nvars(); ++k) d += m.exp(k) * weights[k];
    return d;
}

bool member_bruteforce(const Polynomial& f, const std::vector<Polynomial>& gens,
                       const std::vector<int>& weights) {
    if (f.is_zero()) return true;
    int target = wdeg(f.leading_monomial(), weights);
    for (const auto& t : f.terms()) REQUIRE(wdeg(t.mono, weights) == target);

    std::vector<Monomial> basis_monos;
    std::vector<std::int32_t> scratch(weights.size(), 0);
    monomials_of_wdegree(weights, target, 0, scratch, basis_monos);
    std::map<std::vector<std::int32_t>, int> index;
    for (std::size_t k = 0; k < basis_monos.size(); ++k)
        index[basis_monos[k].exps()] = static_cast<int>(k);

    std::vector<std::vector<mpq_class>> rows;
    for (const auto& g : gens) {
        int dg = wdeg(g.leading_monomial(), weights);
        for (const auto& t : g.terms()) REQUIRE(wdeg(t.mono, weights) == dg);
        if (dg > target) continue;
        std::vector<Monomial> mults;
        monomials_of_wdegree(weights, target - dg, 0, scratch, mults);
        for (const auto& m : mults) {
            std::vector<mpq_class> row(basis_monos.size(), 0);
            for (const auto& t : g.terms()) row[index.at((t.mono * m).exps())] = t.coeff;
            rows.push_back(std::move(row));
        }
    }
    std::vector<mpq_class> rhs(basis_monos.size(), 0);
    for (const auto& t : f.terms()) rhs[index.at(t.mono.exps())] = t.coeff;

    std::vector<std::vector<mpq_class>> echelon;
    std::vector<int> pivots;
    auto insert_row = [&](std::vector<mpq_class> row) {
        for (std::size_t r = 0; r < echelon.size(); ++r) {
            if (row[pivots[r]] != 0) {
                mpq_class c = row[pivots[r]];
                for (std::size_t k = 0; k < row.size(); ++k) row[k] -= c * echelon[r][k];
            }
        }
        int pivot = -1;
        for (std::size_t k = 0; k < row.size(); ++k)
            if (row[k] != 0) {
                pivot = static_cast<int>(k);
                break;
            }
        if (pivot < 0) return false;  // dependent on the rows so far
        mpq_class inv = 1 / row[pivot];
        for (auto& c : row) c *= inv;
        echelon.push_back(std::move(row));
        pivots.push_back(pivot);
        return true;
    };
    for (auto& row : rows) insert_row(std::move(row));
    return !insert_row(std::move(rhs));
}

}  // namespace

TEST_CASE("normal form basics") {
    auto ring = RingSpec::dd_ring(1, 2, 1);  // x[1,1,1] > x[1,1,2]
    auto x = var(ring, VarId::x(1, 1, 1)), y = var(ring, VarId::x(1, 1, 2));
    auto ord = ring->order;

    Polynomial g = x * x - y;
    CHECK(reduce(g, {g}, ord).is_zero());
    CHECK(reduce(x * x, {g}, ord) == y);
    CHECK(reduce(x, {}, ord) == x);

    Polynomial f = x * x * y + y;
    CHECK(reduce(f, {g}, ord) == y * y + y);
}

TEST_CASE("buchberger on simple inputs") {
    auto ring = RingSpec::dd_ring(1, 2, 1);
    auto x = var(ring, VarId::x(1, 1, 1)), y = var(ring, VarId::x(1, 1, 2));

    SUBCASE("single generator") {
        Polynomial f = x - Polynomial::constant(ring, 1);
        GroebnerBasis gb = buchberger({f});
        REQUIRE(gb.basis.size() == 1);
        CHECK(gb.basis[0] == f);
    }
    SUBCASE("zero ideal") {
        GroebnerBasis gb = buchberger({Polynomial::zero(ring)});
        CHECK(gb.basis.empty());
    }
    SUBCASE("scaling does not matter") {
        CHECK(ideal_equal({x}, {x.scaled(2)}, ring->order));
        CHECK(ideal_equal({x * x - y}, {(x * x - y).scaled(make_rational(-3, 7))}, ring->order));
    }
    SUBCASE("classic pair") {
        // I = (x^2 - y, x^3 - x): reduced grevlex basis {x^2 - y, xy - x, y^2 - y}
        GroebnerBasis gb = buchberger({x * x - y, x * x * x - x});
        CHECK(gb.basis.size() == 3);
        CHECK(is_reduced_basis(gb));
        CHECK(all_s_pairs_vanish(gb));
        CHECK(ideal_member(x * y - x, gb));
        CHECK(ideal_member(y * y - y, gb));
        CHECK_FALSE(ideal_member(x, gb));
    }
}

TEST_CASE("two-by-three generic minors are already a basis") {
    auto ring = RingSpec::dd_ring(2, 3, 1);
    DDParams p{2, 3, 1, 2, 2};
    std::vector<Polynomial> mins = minors(horizontal_matrix(p, ring), 2);
    REQUIRE(mins.size() == 3);

    GroebnerBasis gb = buchberger(mins);
    CHECK(gb.basis.size() == 3);
    CHECK(is_reduced_basis(gb));
    CHECK(all_s_pairs_vanish(gb));
    for (const auto& f : mins) {
        bool found = false;
        for (const auto& g : gb.basis)
            if (g == f.monic() || g == (-f).monic()) found = true;
        CHECK(found);
    }
}

TEST_CASE("dd ideal self-consistency and membership") {
    DDParams p{2, 2, 2, 2, 2};
    auto ring = RingSpec::dd_ring(2, 2, 2);
    std::vector<Polynomial> gens = dd_ideal(p, ring);
    REQUIRE(gens.size() == 10);
    GroebnerBasis gb = buchberger(gens);
    CHECK(is_reduced_basis(gb));
    for (const auto& g : gens) CHECK(ideal_member(g, gb));
    CHECK(ideal_member(Polynomial::zero(ring), gb));

    // a same-row 2-minor of H mixing the two blocks is a generator
    Polynomial minor = var(ring, VarId::x(1, 1, 1)) * var(ring, VarId::x(2, 2, 2)) -
                       var(ring, VarId::x(2, 1, 2)) * var(ring, VarId::x(1, 2, 1));
    CHECK(ideal_member(minor, gb));

    // the ideal is prime and contains no variable
    CHECK_FALSE(ideal_member(var(ring, VarId::x(1, 1, 1)), gb));
}

TEST_CASE("reduced basis is unique under generator shuffling") {
    DDParams p{2, 2, 2, 2, 2};
    auto ring = RingSpec::dd_ring(2, 2, 2);
    std::vector<Polynomial> gens = dd_ideal(p, ring);
    GroebnerBasis reference = buchberger(gens);

    SplitMix64 rng(4242);
    for (int round = 0; round < 10; ++round) {
        std::vector<Polynomial> shuffled = gens;
        for (std::size_t k = shuffled.size(); k > 1; --k)
            std::swap(shuffled[k - 1], shuffled[rng.below(k)]);
        GroebnerBasis gb = buchberger(shuffled);
        REQUIRE(gb.basis.size() == reference.basis.size());
        for (std::size_t k = 0; k < gb.basis.size(); ++k)
            CHECK(gb.basis[k] == reference.basis[k]);
    }
}

TEST_CASE("normal form is linear modulo a basis") {
    DDParams p{2, 2, 2, 2, 2};
    auto ring = RingSpec::dd_ring(2, 2, 2);
    GroebnerBasis gb = buchberger(dd_ideal(p, ring));

    SplitMix64 rng(90210);
    auto random_poly = [&]() {
        std::vector<Term> terms;
        int count = 1 + static_cast<int>(rng.below(5));
        for (int t = 0; t < count; ++t) {
            std::vector<std::int32_t> exps(ring->nvars());
            for (auto& e : exps) e = static_cast<std::int32_t>(rng.below(3));
            terms.push_back({Monomial(std::move(exps)),
                             make_rational(rng.nonzero_in(10), 1 + rng.below(5))});
        }
        return Polynomial::from_terms(ring, std::move(terms));
    };
    for (int round = 0; round < 50; ++round) {
        Polynomial f = random_poly(), g = random_poly();
        CHECK(reduce(f, gb) - reduce(g, gb) == reduce(f - g, gb));
    }
}

TEST_CASE("elimination basics") {
    std::vector<VarId> roster = {VarId::x(1, 1, 1), VarId::s(1)};
    auto ring = RingSpec::make(1, 1, 1, roster, MonomialOrder::grevlex());
    auto x = var(ring, VarId::x(1, 1, 1)), s = var(ring, VarId::s(1));

    SUBCASE("graph of a variable has zero elimination ideal") {
        CHECK(eliminate({x - s}, {VarId::s(1)}).empty());
    }
    SUBCASE("eliminating nothing preserves the ideal") {
        std::vector<Polynomial> gens = {x * x - s, s * s - x};
        std::vector<Polynomial> out = eliminate(gens, {});
        CHECK(ideal_equal(gens, out, ring->order));
    }
}

TEST_CASE("classical Segre kernel via elimination") {
    std::vector<VarId> roster;
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) roster.push_back(VarId::x(1, i, j));
    roster.push_back(VarId::s(1));
    roster.push_back(VarId::s(2));
    roster.push_back(VarId::t(1));
    roster.push_back(VarId::t(2));
    auto ring = RingSpec::make(2, 2, 1, roster, MonomialOrder::grevlex());

    std::vector<Polynomial> gens;
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            gens.push_back(var(ring, VarId::x(1, i, j)) -
                           var(ring, VarId::s(i)) * var(ring, VarId::t(j)));
    std::vector<VarId> elim = {VarId::s(1), VarId::s(2), VarId::t(1), VarId::t(2)};
    std::vector<Polynomial> kernel = eliminate(gens, elim);
    REQUIRE(!kernel.empty());

    Polynomial det = var(ring, VarId::x(1, 1, 1)) * var(ring, VarId::x(1, 2, 2)) -
                     var(ring, VarId::x(1, 1, 2)) * var(ring, VarId::x(1, 2, 1));
    CHECK(ideal_equal(kernel, {det}, ring->order));
}

TEST_CASE("elimination agrees with brute-force membership") {
    SUBCASE("twisted cubic, six variables, weighted grading") {
        // x_k - s^(3-k) t^k for k = 0..3; weights: x = 3, s = t = 1
        std::vector<VarId> roster = {VarId::x(1, 1, 1), VarId::x(1, 1, 2), VarId::x(1, 1, 3),
                                     VarId::x(1, 1, 4), VarId::s(1), VarId::t(1)};
        auto ring = RingSpec::make(1, 4, 1, roster, MonomialOrder::grevlex());
        std::vector<int> weights = {3, 3, 3, 3, 1, 1};
        auto s = var(ring, VarId::s(1)), t = var(ring, VarId::t(1));
        std::vector<Polynomial> gens;
        std::vector<Polynomial> xs;
        for (int k = 0; k < 4; ++k) {
            xs.push_back(var(ring, VarId::x(1, 1, k + 1)));
            Polynomial mono = Polynomial::constant(ring, 1);
            for (int c = 0; c < 3 - k; ++c) mono = mono * s;
            for (int c = 0; c < k; ++c) mono = mono * t;
            gens.push_back(xs[k] - mono);
        }
        std::vector<Polynomial> kernel = eliminate(gens, {VarId::s(1), VarId::t(1)});
        REQUIRE(!kernel.empty());
        GroebnerBasis kernel_gb = buchberger(kernel);

        std::vector<Polynomial> probes;
        for (int a = 0; a < 4; ++a)
            for (int b = a; b < 4; ++b) probes.push_back(xs[a] * xs[b]);
        probes.push_back(xs[0] * xs[2] - xs[1] * xs[1]);  // member
        probes.push_back(xs[1] * xs[3] - xs[2] * xs[2]);  // member
        probes.push_back(xs[0] * xs[3] - xs[1] * xs[2]);  // member
        probes.push_back(xs[0] * xs[3] + xs[1] * xs[2]);  // not a member
        for (const auto& q : probes)
            CHECK(ideal_member(q, kernel_gb) == member_bruteforce(q, gens, weights));
    }

    SUBCASE("homogeneous three-variable instance, all monomials up to degree 6") {
        std::vector<VarId> roster = {VarId::x(1, 1, 1), VarId::x(1, 1, 2), VarId::x(1, 1, 3)};
        auto ring = RingSpec::make(1, 3, 1, roster, MonomialOrder::grevlex());
        auto x = var(ring, VarId::x(1, 1, 1)), y = var(ring, VarId::x(1, 1, 2)),
             z = var(ring, VarId::x(1, 1, 3));
        std::vector<Polynomial> gens = {x * x - y * z, y * y - x * z};
        std::vector<int> weights = {1, 1, 1};

        std::vector<Polynomial> elim_out = eliminate(gens, {VarId::x(1, 1, 3)});
        REQUIRE(!elim_out.empty());
        GroebnerBasis elim_gb = buchberger(elim_out);

        int checked = 0;
        for (int d = 1; d <= 6; ++d)
            for (int a = 0; a <= d; ++a) {
                Polynomial q = Polynomial::constant(ring, 1);
                for (int c = 0; c < a; ++c) q = q * x;
                for (int c = 0; c < d - a; ++c) q = q * y;
                CHECK(ideal_member(q, elim_gb) == member_bruteforce(q, gens, weights));
                ++checked;
            }
        CHECK(checked == 27);
    }
}
