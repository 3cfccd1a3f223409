#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "toricdd/groebner.hpp"
#include "toricdd/rng.hpp"

namespace toricdd {

/// A monomial ideal held by its minimal generators (no generator divides
/// another).
struct MonomialIdeal {
    int nvars = 0;
    std::vector<Monomial> gens;

    bool contains_one() const {
        for (const auto& g : gens)
            if (g.is_one()) return true;
        return false;
    }
};

/// Drops duplicates and non-minimal generators.
MonomialIdeal minimalize(std::vector<Monomial> gens, int nvars);

/// Leading monomials of a reduced Groebner basis.
MonomialIdeal initial_ideal(const GroebnerBasis& gb);

/// Numerator of the Hilbert series HS(R/M; t) = Num(t) / (1-t)^N, exact
/// integer coefficients.
struct HilbertSeriesNumerator {
    int nvars = 0;
    std::vector<mpz_class> coeffs;  // coeffs[k] multiplies t^k

    bool is_zero() const;
};

/// Standard pivot recursion: split on a variable occurring in a generator,
/// Num(M) = Num(M + (x)) + t * Num(M : x); base cases are the empty ideal,
/// the unit ideal and pure-power ideals.
HilbertSeriesNumerator hilbert_numerator(const MonomialIdeal& M, int nvars);

/// Affine Krull dimension: N minus the multiplicity of the root t = 1.
/// Throws std::domain_error for the zero ring (Num identically 0).
int krull_dim(const HilbertSeriesNumerator& num);

/// Degree (Hilbert-Samuel multiplicity of the irrelevant ideal): the value
/// at t = 1 after dividing out every (1-t) factor.
std::uint64_t ring_degree(const HilbertSeriesNumerator& num);

/// Hilbert function value dim_k (R/M)_d from the numerator.
std::uint64_t hilbert_function(const HilbertSeriesNumerator& num, int d);

/// Number of standard monomials of the ideal generated by gens (via GB and
/// initial ideal). Throws std::domain_error naming a variable with no pure
/// power when the quotient is not Artinian.
std::uint64_t colength(const std::vector<Polynomial>& gens);

/// Count of monomials outside a monomial ideal whose quotient is Artinian.
std::uint64_t count_standard_monomials(const MonomialIdeal& M);

struct LocalColengthOptions {
    int power_cap = 120;    // largest pure-power exponent tried
    int power_start = 4;    // first exponent; doubled until agreement
};

struct LocalColengthResult {
    std::uint64_t value = 0;
    int stabilized_at = 0;  // pure-power exponent at which two values agreed
};

/// Length of the localization at the irrelevant maximal ideal: adjoins pure
/// powers of every variable with increasing exponent until two consecutive
/// counts agree (they increase monotonically, so agreement is stability).
/// Throws std::runtime_error when the cap is hit without stabilizing, which
/// signals a draw that is not a system of parameters.
LocalColengthResult local_colength(const std::vector<Polynomial>& gens,
                                   const LocalColengthOptions& opts = {});

enum class MultiplicityMethod { GenericReduction, HsFit };

struct MultiplicityOptions {
    int retry_cap = 6;        // maximum generic draws before giving up
    long coeff_bound = 100;   // combination coefficients from [-bound, bound] \ {0}
    int fit_cap = 16;         // maximum power for the Hilbert-Samuel fit
    LocalColengthOptions local;
};

struct MultiplicityResult {
    std::uint64_t value = 0;
    MultiplicityMethod method = MultiplicityMethod::GenericReduction;
    int draws_used = 0;         // generic-reduction draws consumed
    int stabilization_exp = 0;  // pure-power exponent (reduction) or power (fit)
};

/// Hilbert-Samuel multiplicity of the ideal generated by j_gens over the
/// quotient by ambient (which may be empty for the free ring).
///
/// GenericReduction draws dim-many random integer combinations of j_gens and
/// returns the local colength of ambient + combinations; two independent
/// draws must agree. Valid because the ambient quotients used here are
/// Cohen-Macaulay, where parameter reductions have length equal to
/// multiplicity. HsFit computes colength(ambient + J^n) until the dim-th
/// finite difference is constant over two steps; it is the slow
/// cross-validation oracle and requires monomial j_gens.
MultiplicityResult hs_multiplicity(const std::vector<Polynomial>& j_gens,
                                   const std::vector<Polynomial>& ambient,
                                   MultiplicityMethod method, std::uint64_t seed,
                                   const MultiplicityOptions& opts = {});

/// Affine Krull dimension of the quotient by ambient (free ring when empty).
int quotient_dimension(const std::vector<Polynomial>& ambient, const RingPtr& ring);

}  // namespace toricdd
