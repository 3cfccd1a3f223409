#pragma once

#include <string>
#include <vector>

#include "toricdd/groebner.hpp"
#include "toricdd/polynomial.hpp"

namespace toricdd {

/// Parameters of a double determinantal ideal: r generic m x n matrices,
/// a-minors of the horizontal concatenation H (m x rn) plus b-minors of the
/// vertical concatenation V (rm x n). The toric case is a = b = 2.
struct DDParams {
    int m = 2, n = 2, r = 2;
    int a = 2, b = 2;

    void validate() const;
    bool toric() const { return a == 2 && b == 2; }
};

/// All size x size minors of a grid of polynomials, by Laplace expansion,
/// ordered by row set then column set (lexicographic). Empty when size
/// exceeds a grid dimension.
std::vector<Polynomial> minors(const std::vector<std::vector<Polynomial>>& grid, int size);

/// The m x rn horizontal concatenation of the generic blocks, as variables
/// of the given ring (which must contain every x[l,i,j]).
std::vector<std::vector<Polynomial>> horizontal_matrix(const DDParams& p, const RingPtr& ring);
/// The rm x n vertical concatenation.
std::vector<std::vector<Polynomial>> vertical_matrix(const DDParams& p, const RingPtr& ring);

/// Generators of I_a(H) + I_b(V), deduplicated (minors of an individual
/// block appear once) with signs normalized to leading coefficient +1.
std::vector<Polynomial> dd_ideal(const DDParams& p, const RingPtr& ring);
std::vector<Polynomial> dd_ideal(const DDParams& p);

/// Classification of the X-variables against a pivot by how many of
/// {same row, same column, same block} hold: Y1 at least two, Y2 exactly
/// one, Y3 none.
struct ChartPartition {
    VarId pivot;
    std::vector<VarId> y1, y2, y3;
};

ChartPartition chart_partition(const DDParams& p, const VarId& pivot);

/// Image of one X-variable under the chart map: a monomial in the z-ring
/// over a power of the pivot's z-variable. Denominator exponent is 0 for
/// Y1, 1 for Y2 and 2 for Y3.
struct ChartFraction {
    Monomial numerator;  // in the chart (z) ring
    int denom_exp = 0;
};

ChartFraction chart_phi(const DDParams& p, const VarId& pivot, const VarId& v,
                        const RingPtr& chart_ring);

/// Result of the smoothness-chart verification for one pivot.
struct ChartReport {
    VarId pivot;
    bool y1_size_ok = false;
    int y1_size = 0;
    bool ok = false;
    std::vector<std::string> failures;
};

/// Checks, for the toric ideal at the given pivot: (1) the chart map kills
/// every generator after clearing denominators, (2) pivot^e * v minus the
/// pullback of the image numerator lies in the ideal for every X-variable v,
/// (3) |Y1| = m + n + r - 2.
ChartReport verify_chart(const DDParams& p, const VarId& pivot);

/// Same, reusing a precomputed Groebner basis of dd_ideal(p).
ChartReport verify_chart(const DDParams& p, const VarId& pivot, const GroebnerBasis& gb);

/// Degenerate-case containment (r = 2): with a = 2 < b, checks that every
/// b-minor of V reduces to zero modulo GB(I_2(H)); with b = 2 < a, checks
/// the a-minors of H against GB(I_2(V)).
struct ContainmentResult {
    bool ok = false;
    bool vacuous = false;  // no minors of the larger size exist
    int checked = 0;
};

ContainmentResult containment_check(const DDParams& p);

}  // namespace toricdd
