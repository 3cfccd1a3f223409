#pragma once

#include <gmpxx.h>

#include <map>
#include <vector>

#include "toricdd/monomial.hpp"
#include "toricdd/varid.hpp"

namespace toricdd {

/// Canonical rational from a p/q pair (lowest terms, positive denominator).
inline mpq_class make_rational(long p, long q = 1) {
    mpq_class v(p, q);
    v.canonicalize();
    return v;
}

struct Term {
    Monomial mono;
    mpq_class coeff;
};

/// Exact multivariate polynomial over the rationals. Terms are kept strictly
/// descending in the owning ring's order, with no zero coefficients and no
/// duplicate monomials; the zero polynomial has an empty term list. Values
/// are immutable after construction.
class Polynomial {
public:
    Polynomial() = default;

    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring), {}); }
    static Polynomial constant(RingPtr ring, const mpq_class& c);
    static Polynomial variable(RingPtr ring, const VarId& v, std::int32_t exp = 1);
    static Polynomial monomial(RingPtr ring, Monomial m, const mpq_class& c = 1);
    /// Normalizes an arbitrary term list (sorts, merges, drops zeros).
    static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    const Term& leading_term() const;
    const Monomial& leading_monomial() const { return leading_term().mono; }
    const mpq_class& leading_coeff() const { return leading_term().coeff; }

    std::int32_t total_degree() const;  // max term degree; -1 for zero
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_binomial_pm1() const;  // difference of two monomials, coefficients +-1
    bool is_homogeneous() const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial scaled(const mpq_class& c) const;
    /// this - c * m * g, the division-step workhorse.
    Polynomial sub_mul(const mpq_class& c, const Monomial& m, const Polynomial& g) const;
    Polynomial monic() const;
    /// Integer-primitive scaling: clears denominators, divides by the content
    /// and makes the leading coefficient positive.
    Polynomial primitive() const;
    /// Polynomial without its leading term.
    Polynomial tail() const;

    bool operator==(const Polynomial& o) const;

    /// Total deterministic order on normalized polynomials (term-list
    /// lexicographic under the ring order); used for canonical sorting.
    static int compare(const Polynomial& a, const Polynomial& b);

    /// Substitution homomorphism: every variable occurring in the polynomial
    /// must have an image in the target ring.
    Polynomial apply_map(const std::map<VarId, Polynomial>& images, const RingPtr& target) const;

    /// Re-interpret in another ring containing all variables this polynomial
    /// uses (e.g. dropping eliminated variables, or changing the order).
    Polynomial transport(const RingPtr& target) const;

private:
    Polynomial(RingPtr ring, std::vector<Term> terms)
        : ring_(std::move(ring)), terms_(std::move(terms)) {}

    RingPtr ring_;
    std::vector<Term> terms_;
};

}  // namespace toricdd
