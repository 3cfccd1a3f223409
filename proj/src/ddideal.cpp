#include "toricdd/ddideal.hpp"

#include <algorithm>
#include <stdexcept>

#include "toricdd/format.hpp"

namespace toricdd {

void DDParams::validate() const {
    if (m < 1 || n < 1 || r < 1) throw std::invalid_argument("m, n, r must be positive");
    if (a < 2 || b < 2) throw std::invalid_argument("minor sizes a, b must be at least 2");
}

namespace {

// Laplace expansion along the first row of the selected submatrix.
Polynomial submatrix_det(const std::vector<std::vector<Polynomial>>& grid,
                         const std::vector<int>& rows, std::vector<int>& cols) {
    const RingPtr& ring = grid[rows[0]][cols[0]].ring();
    if (rows.size() == 1) return grid[rows[0]][cols[0]];
    Polynomial det = Polynomial::zero(ring);
    std::vector<int> subrows(rows.begin() + 1, rows.end());
    for (std::size_t k = 0; k < cols.size(); ++k) {
        int col = cols[k];
        std::vector<int> subcols;
        subcols.reserve(cols.size() - 1);
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (j != k) subcols.push_back(cols[j]);
        Polynomial cof = grid[rows[0]][col] * submatrix_det(grid, subrows, subcols);
        det = (k % 2 == 0) ? det + cof : det - cof;
    }
    return det;
}

void subsets_rec(int from, int upto, int want, std::vector<int>& cur,
                 std::vector<std::vector<int>>& out) {
    if (want == 0) {
        out.push_back(cur);
        return;
    }
    for (int v = from; v <= upto - want + 1; ++v) {
        cur.push_back(v);
        subsets_rec(v + 1, upto, want - 1, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> subsets(int total, int want) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    subsets_rec(0, total - 1, want, cur, out);
    return out;
}

}  // namespace

std::vector<Polynomial> minors(const std::vector<std::vector<Polynomial>>& grid, int size) {
    if (size < 1) throw std::invalid_argument("minor size must be positive");
    const int nrows = static_cast<int>(grid.size());
    const int ncols = nrows == 0 ? 0 : static_cast<int>(grid[0].size());
    std::vector<Polynomial> out;
    if (size > nrows || size > ncols) return out;
    for (const auto& rows : subsets(nrows, size))
        for (auto& cols : subsets(ncols, size)) {
            std::vector<int> c = cols;
            out.push_back(submatrix_det(grid, rows, c));
        }
    return out;
}

std::vector<std::vector<Polynomial>> horizontal_matrix(const DDParams& p, const RingPtr& ring) {
    std::vector<std::vector<Polynomial>> grid(p.m);
    for (int i = 1; i <= p.m; ++i)
        for (int l = 1; l <= p.r; ++l)
            for (int j = 1; j <= p.n; ++j)
                grid[i - 1].push_back(Polynomial::variable(ring, VarId::x(l, i, j)));
    return grid;
}

std::vector<std::vector<Polynomial>> vertical_matrix(const DDParams& p, const RingPtr& ring) {
    std::vector<std::vector<Polynomial>> grid(p.r * p.m);
    for (int l = 1; l <= p.r; ++l)
        for (int i = 1; i <= p.m; ++i)
            for (int j = 1; j <= p.n; ++j)
                grid[(l - 1) * p.m + (i - 1)].push_back(
                    Polynomial::variable(ring, VarId::x(l, i, j)));
    return grid;
}

std::vector<Polynomial> dd_ideal(const DDParams& p, const RingPtr& ring) {
    p.validate();
    std::vector<Polynomial> gens;
    auto push_unique = [&](Polynomial f) {
        if (f.is_zero()) return;
        if (f.leading_coeff() < 0) f = -f;
        for (const auto& g : gens)
            if (g == f) return;
        gens.push_back(std::move(f));
    };
    for (auto& f : minors(horizontal_matrix(p, ring), p.a)) push_unique(std::move(f));
    for (auto& f : minors(vertical_matrix(p, ring), p.b)) push_unique(std::move(f));
    return gens;
}

std::vector<Polynomial> dd_ideal(const DDParams& p) {
    return dd_ideal(p, RingSpec::dd_ring(p.m, p.n, p.r));
}

namespace {

int match_count(const VarId& pivot, const VarId& v) {
    return (v.i == pivot.i) + (v.j == pivot.j) + (v.l == pivot.l);
}

void check_pivot(const DDParams& p, const VarId& pivot) {
    if (pivot.kind != VarKind::X || pivot.l < 1 || pivot.l > p.r || pivot.i < 1 ||
        pivot.i > p.m || pivot.j < 1 || pivot.j > p.n)
        throw std::invalid_argument("pivot out of range: " + pivot.name());
}

}  // namespace

ChartPartition chart_partition(const DDParams& p, const VarId& pivot) {
    p.validate();
    if (!p.toric()) throw std::invalid_argument("chart partition requires a = b = 2");
    check_pivot(p, pivot);
    ChartPartition part{pivot, {}, {}, {}};
    for (int l = 1; l <= p.r; ++l)
        for (int i = 1; i <= p.m; ++i)
            for (int j = 1; j <= p.n; ++j) {
                VarId v = VarId::x(l, i, j);
                switch (match_count(pivot, v)) {
                    case 3:
                    case 2:
                        part.y1.push_back(v);
                        break;
                    case 1:
                        part.y2.push_back(v);
                        break;
                    default:
                        part.y3.push_back(v);
                }
            }
    return part;
}

ChartFraction chart_phi(const DDParams& p, const VarId& pivot, const VarId& v,
                        const RingPtr& chart_ring) {
    check_pivot(p, pivot);
    check_pivot(p, v);
    auto zslot = [&](int l, int i, int j) { return chart_ring->index_of_checked(VarId::z(l, i, j)); };
    const int N = chart_ring->nvars();
    std::vector<std::int32_t> e(N, 0);
    const int lp = pivot.l, ip = pivot.i, jp = pivot.j;
    switch (match_count(pivot, v)) {
        case 3:
        case 2:
            e[zslot(v.l, v.i, v.j)] += 1;
            return {Monomial(std::move(e)), 0};
        case 1:
            if (v.l == lp) {
                e[zslot(lp, v.i, jp)] += 1;
                e[zslot(lp, ip, v.j)] += 1;
            } else if (v.i == ip) {
                e[zslot(lp, ip, v.j)] += 1;
                e[zslot(v.l, ip, jp)] += 1;
            } else {  // v.j == jp
                e[zslot(lp, v.i, jp)] += 1;
                e[zslot(v.l, ip, jp)] += 1;
            }
            return {Monomial(std::move(e)), 1};
        default:
            e[zslot(lp, ip, v.j)] += 1;
            e[zslot(lp, v.i, jp)] += 1;
            e[zslot(v.l, ip, jp)] += 1;
            return {Monomial(std::move(e)), 2};
    }
}

ChartReport verify_chart(const DDParams& p, const VarId& pivot, const GroebnerBasis& gb) {
    p.validate();
    if (!p.toric()) throw std::invalid_argument("chart verification requires a = b = 2");
    ChartReport rep{pivot, false, 0, true, {}};

    ChartPartition part = chart_partition(p, pivot);
    rep.y1_size = static_cast<int>(part.y1.size());
    rep.y1_size_ok = rep.y1_size == p.m + p.n + p.r - 2;
    if (!rep.y1_size_ok) {
        rep.ok = false;
        rep.failures.push_back("|Y1| = " + std::to_string(rep.y1_size) + ", expected " +
                               std::to_string(p.m + p.n + p.r - 2));
    }

    RingPtr xring = RingSpec::dd_ring(p.m, p.n, p.r);
    RingPtr zring = RingSpec::chart_ring(p.m, p.n, p.r);
    const int zpivot = zring->index_of_checked(VarId::z(pivot.l, pivot.i, pivot.j));

    // (1) the chart map annihilates every generator after clearing denominators
    for (const auto& delta : dd_ideal(p, xring)) {
        struct Mapped {
            Monomial num;
            int denom;
            mpq_class coeff;
        };
        std::vector<Mapped> images;
        int denom_max = 0;
        for (const auto& term : delta.terms()) {
            Monomial num = Monomial::one(zring->nvars());
            int denom = 0;
            for (int k = 0; k < term.mono.nvars(); ++k) {
                std::int32_t ex = term.mono.exp(k);
                if (ex == 0) continue;
                ChartFraction fr = chart_phi(p, pivot, xring->roster[k], zring);
                for (std::int32_t c = 0; c < ex; ++c) num = num * fr.numerator;
                denom += fr.denom_exp * ex;
            }
            denom_max = std::max(denom_max, denom);
            images.push_back({std::move(num), denom, term.coeff});
        }
        std::vector<Term> cleared;
        for (auto& im : images) {
            Monomial scale = Monomial::var(zring->nvars(), zpivot, denom_max - im.denom);
            cleared.push_back({im.num * scale, im.coeff});
        }
        Polynomial total = Polynomial::from_terms(zring, std::move(cleared));
        if (!total.is_zero()) {
            rep.ok = false;
            rep.failures.push_back("chart map does not annihilate generator " + to_string(delta));
        }
    }

    // (2) pivot^e * v - pullback of the image numerator lies in the ideal
    Polynomial pivot_poly = Polynomial::variable(xring, pivot);
    for (int l = 1; l <= p.r; ++l)
        for (int i = 1; i <= p.m; ++i)
            for (int j = 1; j <= p.n; ++j) {
                VarId v = VarId::x(l, i, j);
                ChartFraction fr = chart_phi(p, pivot, v, zring);
                // pull the z-monomial back to x-variables
                std::vector<std::int32_t> e(xring->nvars(), 0);
                for (int k = 0; k < fr.numerator.nvars(); ++k) {
                    if (fr.numerator.exp(k) == 0) continue;
                    VarId zv = zring->roster[k];
                    e[xring->index_of_checked(VarId::x(zv.l, zv.i, zv.j))] +=
                        fr.numerator.exp(k);
                }
                Polynomial lhs = Polynomial::variable(xring, v);
                for (int c = 0; c < fr.denom_exp; ++c) lhs = lhs * pivot_poly;
                Polynomial obligation = lhs - Polynomial::monomial(xring, Monomial(std::move(e)));
                if (!reduce(obligation, gb).is_zero()) {
                    rep.ok = false;
                    rep.failures.push_back("round trip fails for variable " + v.name());
                }
            }

    return rep;
}

ChartReport verify_chart(const DDParams& p, const VarId& pivot) {
    RingPtr xring = RingSpec::dd_ring(p.m, p.n, p.r);
    GroebnerBasis gb = buchberger(dd_ideal(p, xring));
    return verify_chart(p, pivot, gb);
}

ContainmentResult containment_check(const DDParams& p) {
    p.validate();
    if (p.r != 2) throw std::invalid_argument("containment check requires r = 2");
    bool big_on_v = (p.a == 2 && p.b > 2);
    bool big_on_h = (p.b == 2 && p.a > 2);
    if (!big_on_v && !big_on_h)
        throw std::invalid_argument("containment check requires exactly one minor size equal to 2");

    RingPtr ring = RingSpec::dd_ring(p.m, p.n, p.r);
    DDParams toric_p = p;
    toric_p.a = toric_p.b = 2;

    std::vector<Polynomial> big = big_on_v ? minors(vertical_matrix(p, ring), p.b)
                                           : minors(horizontal_matrix(p, ring), p.a);
    ContainmentResult res;
    res.checked = static_cast<int>(big.size());
    if (big.empty()) {
        res.ok = true;
        res.vacuous = true;
        return res;
    }
    std::vector<Polynomial> small = big_on_v ? minors(horizontal_matrix(p, ring), 2)
                                             : minors(vertical_matrix(p, ring), 2);
    GroebnerBasis gb = buchberger(small);
    res.ok = true;
    for (const auto& f : big)
        if (!ideal_member(f, gb)) res.ok = false;
    return res;
}

}  // namespace toricdd
