#pragma once

#include <vector>

#include "toricdd/polynomial.hpp"

namespace toricdd {

/// A reduced Groebner basis: every element monic, no term of any element
/// divisible by the leading monomial of another, elements sorted ascending
/// by leading monomial. Unique for a given ideal and order.
struct GroebnerBasis {
    RingPtr ring;
    MonomialOrder order;
    std::vector<Polynomial> basis;
};

/// Normal form of f with respect to G under the given order (full tail
/// reduction). No term of the result is divisible by any leading monomial of
/// G, and f - result lies in the ideal generated by G. Empty G returns f.
Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& G,
                  const MonomialOrder& order);

/// Reduce against a basis that is already sorted under its own order.
Polynomial reduce(const Polynomial& f, const GroebnerBasis& gb);

/// S-polynomial of two nonzero polynomials (same ring and order).
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order);

/// Buchberger's algorithm with the Gebauer-Moeller pair criteria, normal
/// selection (minimal lcm degree, sugar tie-break) and final inter-reduction.
/// Deterministic: fixed input and order give the identical reduced basis.
/// All-zero input yields the empty basis of the zero ideal.
GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order);

/// Convenience: buchberger under the generators' own ring order.
GroebnerBasis buchberger(const std::vector<Polynomial>& gens);

/// True iff reduce(f, gb) vanishes.
bool ideal_member(const Polynomial& f, const GroebnerBasis& gb);

/// Generators of (ideal of gens) intersected with the subring on the roster
/// variables outside elim_vars, via a block elimination order. Results are
/// returned in the generators' original ring (they are free of elim_vars).
std::vector<Polynomial> eliminate(const std::vector<Polynomial>& gens,
                                  const std::vector<VarId>& elim_vars);

/// True iff the two generator lists span the same ideal (mutual reduction).
bool ideal_equal(const std::vector<Polynomial>& A, const std::vector<Polynomial>& B,
                 const MonomialOrder& order);

}  // namespace toricdd
