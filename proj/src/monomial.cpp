#include "toricdd/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace toricdd {

Monomial::Monomial(std::vector<std::int32_t> exps) : exps_(std::move(exps)), deg_(0) {
    for (auto e : exps_) {
        if (e < 0) throw std::invalid_argument("negative exponent");
        deg_ += e;
    }
}

Monomial Monomial::var(int nvars, int slot, std::int32_t exp) {
    Monomial m(nvars);
    m.exps_[slot] = exp;
    m.deg_ = exp;
    return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial out(*this);
    for (int k = 0; k < nvars(); ++k) out.exps_[k] += o.exps_[k];
    out.deg_ += o.deg_;
    return out;
}

bool Monomial::divides(const Monomial& o) const {
    if (deg_ > o.deg_) return false;
    for (int k = 0; k < nvars(); ++k)
        if (exps_[k] > o.exps_[k]) return false;
    return true;
}

Monomial Monomial::quotient(const Monomial& o) const {
    Monomial out(*this);
    for (int k = 0; k < nvars(); ++k) out.exps_[k] -= o.exps_[k];
    out.deg_ -= o.deg_;
    return out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial out(a);
    out.deg_ = 0;
    for (int k = 0; k < a.nvars(); ++k) {
        out.exps_[k] = std::max(a.exps_[k], b.exps_[k]);
        out.deg_ += out.exps_[k];
    }
    return out;
}

bool coprime(const Monomial& a, const Monomial& b) {
    for (int k = 0; k < a.nvars(); ++k)
        if (a.exps_[k] > 0 && b.exps_[k] > 0) return false;
    return true;
}

namespace {

// deg first, then reverse scan: smaller exponent at the last difference wins.
int cmp_grevlex(const std::vector<std::int32_t>& a, std::int32_t dega,
                const std::vector<std::int32_t>& b, std::int32_t degb) {
    if (dega != degb) return dega < degb ? -1 : 1;
    for (int k = static_cast<int>(a.size()) - 1; k >= 0; --k) {
        if (a[k] != b[k]) return a[k] > b[k] ? -1 : 1;
    }
    return 0;
}

int cmp_lex(const std::vector<std::int32_t>& a, const std::vector<std::int32_t>& b) {
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k] != b[k]) return a[k] < b[k] ? -1 : 1;
    }
    return 0;
}

// grevlex restricted to the slots selected by mask (keep == mask value).
int cmp_grevlex_masked(const std::vector<std::int32_t>& a, const std::vector<std::int32_t>& b,
                       const std::vector<char>& mask, char keep) {
    std::int32_t dega = 0, degb = 0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (mask[k] == keep) {
            dega += a[k];
            degb += b[k];
        }
    }
    if (dega != degb) return dega < degb ? -1 : 1;
    for (int k = static_cast<int>(a.size()) - 1; k >= 0; --k) {
        if (mask[k] == keep && a[k] != b[k]) return a[k] > b[k] ? -1 : 1;
    }
    return 0;
}

}  // namespace

int compare(const Monomial& a, const Monomial& b, const MonomialOrder& order) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("monomial length mismatch");
    switch (order.kind) {
        case MonomialOrder::Kind::Grevlex:
            return cmp_grevlex(a.exps(), a.degree(), b.exps(), b.degree());
        case MonomialOrder::Kind::Lex:
            return cmp_lex(a.exps(), b.exps());
        case MonomialOrder::Kind::Elimination: {
            if (order.elim_mask.size() != a.exps().size())
                throw std::invalid_argument("elimination mask length mismatch");
            if (int c = cmp_grevlex_masked(a.exps(), b.exps(), order.elim_mask, 1)) return c;
            return cmp_grevlex_masked(a.exps(), b.exps(), order.elim_mask, 0);
        }
    }
    return 0;
}

}  // namespace toricdd
