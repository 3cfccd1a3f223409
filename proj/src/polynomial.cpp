#include "toricdd/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace toricdd {

Polynomial Polynomial::constant(RingPtr ring, const mpq_class& c) {
    if (c == 0) return zero(std::move(ring));
    Monomial one = Monomial::one(ring->nvars());
    std::vector<Term> t;
    t.push_back({std::move(one), c});
    return Polynomial(std::move(ring), std::move(t));
}

Polynomial Polynomial::variable(RingPtr ring, const VarId& v, std::int32_t exp) {
    int slot = ring->index_of_checked(v);
    Monomial m = Monomial::var(ring->nvars(), slot, exp);
    std::vector<Term> t;
    t.push_back({std::move(m), mpq_class(1)});
    return Polynomial(std::move(ring), std::move(t));
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, const mpq_class& c) {
    if (c == 0) return zero(std::move(ring));
    if (m.nvars() != ring->nvars()) throw std::invalid_argument("monomial length mismatch");
    std::vector<Term> t;
    t.push_back({std::move(m), c});
    return Polynomial(std::move(ring), std::move(t));
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
    const MonomialOrder& ord = ring->order;
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
        return greater_than(a.mono, b.mono, ord);
    });
    std::vector<Term> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
        if (!out.empty() && out.back().mono == t.mono) {
            out.back().coeff += t.coeff;
            if (out.back().coeff == 0) out.pop_back();
        } else if (t.coeff != 0) {
            out.push_back(std::move(t));
        }
    }
    return Polynomial(std::move(ring), std::move(out));
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
    return terms_.front();
}

std::int32_t Polynomial::total_degree() const {
    std::int32_t d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
}

bool Polynomial::is_binomial_pm1() const {
    if (terms_.size() != 2) return false;
    const mpq_class& a = terms_[0].coeff;
    const mpq_class& b = terms_[1].coeff;
    return ((a == 1 && b == -1) || (a == -1 && b == 1));
}

bool Polynomial::is_homogeneous() const {
    if (terms_.size() <= 1) return true;
    std::int32_t d = terms_[0].mono.degree();
    for (const auto& t : terms_)
        if (t.mono.degree() != d) return false;
    return true;
}

// Merge two term lists sorted descending; fb scales the g-side contribution.
static std::vector<Term> merge_linear(const std::vector<Term>& f, const std::vector<Term>& g,
                                      const mpq_class& gscale, const MonomialOrder& ord) {
    std::vector<Term> out;
    out.reserve(f.size() + g.size());
    std::size_t a = 0, b = 0;
    while (a < f.size() && b < g.size()) {
        int c = compare(f[a].mono, g[b].mono, ord);
        if (c > 0) {
            out.push_back(f[a++]);
        } else if (c < 0) {
            out.push_back({g[b].mono, g[b].coeff * gscale});
            ++b;
        } else {
            mpq_class s = f[a].coeff + g[b].coeff * gscale;
            if (s != 0) out.push_back({f[a].mono, std::move(s)});
            ++a;
            ++b;
        }
    }
    for (; a < f.size(); ++a) out.push_back(f[a]);
    for (; b < g.size(); ++b) out.push_back({g[b].mono, g[b].coeff * gscale});
    return out;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    require_same_ring(ring_, o.ring_);
    return Polynomial(ring_, merge_linear(terms_, o.terms_, 1, ring_->order));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    require_same_ring(ring_, o.ring_);
    return Polynomial(ring_, merge_linear(terms_, o.terms_, -1, ring_->order));
}

Polynomial Polynomial::operator-() const { return scaled(-1); }

Polynomial Polynomial::scaled(const mpq_class& c) const {
    if (c == 0) return zero(ring_);
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back({t.mono, t.coeff * c});
    return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    require_same_ring(ring_, o.ring_);
    if (is_zero() || o.is_zero()) return zero(ring_);
    // accumulate into a map keyed descending by the ring order
    const MonomialOrder& ord = ring_->order;
    auto cmp = [&](const Monomial& a, const Monomial& b) { return greater_than(a, b, ord); };
    std::map<Monomial, mpq_class, decltype(cmp)> acc(cmp);
    for (const auto& ta : terms_)
        for (const auto& tb : o.terms_) {
            Monomial m = ta.mono * tb.mono;
            auto [it, inserted] = acc.try_emplace(std::move(m), 0);
            it->second += ta.coeff * tb.coeff;
        }
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0) out.push_back({m, std::move(c)});
    return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::sub_mul(const mpq_class& c, const Monomial& m, const Polynomial& g) const {
    require_same_ring(ring_, g.ring_);
    std::vector<Term> shifted;
    shifted.reserve(g.terms_.size());
    for (const auto& t : g.terms_) shifted.push_back({t.mono * m, t.coeff});
    return Polynomial(ring_, merge_linear(terms_, shifted, -c, ring_->order));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    mpq_class inv = 1 / terms_.front().coeff;
    return scaled(inv);
}

Polynomial Polynomial::primitive() const {
    if (is_zero()) return *this;
    mpz_class denom_lcm = 1;
    for (const auto& t : terms_) mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(),
                                         t.coeff.get_den().get_mpz_t());
    mpz_class content = 0;
    for (const auto& t : terms_) {
        mpz_class num = t.coeff.get_num() * (denom_lcm / t.coeff.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), num.get_mpz_t());
    }
    mpq_class scale(denom_lcm, content);
    scale.canonicalize();
    if (terms_.front().coeff < 0) scale = -scale;
    return scaled(scale);
}

Polynomial Polynomial::tail() const {
    if (is_zero()) return *this;
    return Polynomial(ring_, std::vector<Term>(terms_.begin() + 1, terms_.end()));
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t k = 0; k < terms_.size(); ++k)
        if (!(terms_[k].mono == o.terms_[k].mono) || terms_[k].coeff != o.terms_[k].coeff)
            return false;
    return true;
}

int Polynomial::compare(const Polynomial& a, const Polynomial& b) {
    const MonomialOrder& ord = a.ring_->order;
    std::size_t k = 0;
    for (; k < a.terms_.size() && k < b.terms_.size(); ++k) {
        int c = toricdd::compare(a.terms_[k].mono, b.terms_[k].mono, ord);
        if (c != 0) return c;
        int s = cmp(a.terms_[k].coeff, b.terms_[k].coeff);
        if (s != 0) return s;
    }
    if (a.terms_.size() != b.terms_.size()) return a.terms_.size() < b.terms_.size() ? -1 : 1;
    return 0;
}

Polynomial Polynomial::apply_map(const std::map<VarId, Polynomial>& images,
                                 const RingPtr& target) const {
    Polynomial acc = zero(target);
    for (const auto& t : terms_) {
        Polynomial prod = constant(target, t.coeff);
        for (int k = 0; k < t.mono.nvars(); ++k) {
            std::int32_t e = t.mono.exp(k);
            if (e == 0) continue;
            auto it = images.find(ring_->roster[k]);
            if (it == images.end())
                throw std::invalid_argument("missing image for " + ring_->roster[k].name());
            for (std::int32_t p = 0; p < e; ++p) prod = prod * it->second;
        }
        acc = acc + prod;
    }
    return acc;
}

Polynomial Polynomial::transport(const RingPtr& target) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        std::vector<std::int32_t> e(target->nvars(), 0);
        for (int k = 0; k < t.mono.nvars(); ++k) {
            if (t.mono.exp(k) == 0) continue;
            e[target->index_of_checked(ring_->roster[k])] = t.mono.exp(k);
        }
        out.push_back({Monomial(std::move(e)), t.coeff});
    }
    return from_terms(target, std::move(out));
}

}  // namespace toricdd
