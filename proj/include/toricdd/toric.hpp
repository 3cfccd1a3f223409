#pragma once

#include <map>

#include "toricdd/ddideal.hpp"

namespace toricdd {

/// The parametrization x[l,i,j] -> s[i] * t[(l-1)n + j] into the ring on
/// {s[1..m], t[1..rn]}. Image monomials are squarefree of degree 2 and every
/// (i, t-index) pair occurs exactly once.
std::map<VarId, Polynomial> segre_map(const DDParams& p, const RingPtr& st_ring);

/// Ring on {s[1..m], t[1..rn]} (grevlex).
RingPtr st_ring(const DDParams& p);

/// The r x n matrix with entry (l, j) = t[(l-1)n + j]; its 2-minors encode
/// the rank-1 constraint the parametrization factors through.
std::vector<std::vector<Polynomial>> t_matrix(const DDParams& p, const RingPtr& ring);

struct ToricCheckOptions {
    int var_cap = 20;  // refuse eliminations with a larger combined roster
};

/// Generators of the kernel of the parametrization (the contraction of the
/// rank-1 t-constraint through the graph relations), computed by eliminating
/// all s- and t-variables and returned in the x-variable ring.
std::vector<Polynomial> kernel_ideal(const DDParams& p, const ToricCheckOptions& opts = {});

struct ToricEqualityResult {
    bool contained = false;   // every dd generator maps into the t-minor ideal
    bool equal = false;       // kernel ideal equals the double determinantal ideal
    int kernel_size = 0;      // generators returned by the elimination
};

/// Full kernel-equality check: containment of the generators first (cheap),
/// then elimination and mutual reduction.
ToricEqualityResult toric_equality(const DDParams& p, const ToricCheckOptions& opts = {});

}  // namespace toricdd
