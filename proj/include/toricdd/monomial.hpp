#pragma once

#include <cstdint>
#include <vector>

#include "toricdd/varid.hpp"

namespace toricdd {

/// A monomial as a dense exponent vector over a ring roster, total degree
/// cached. Value type; the owning ring is implicit (slot count must match).
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(int nvars) : exps_(nvars, 0), deg_(0) {}
    explicit Monomial(std::vector<std::int32_t> exps);

    static Monomial one(int nvars) { return Monomial(nvars); }
    static Monomial var(int nvars, int slot, std::int32_t exp = 1);

    int nvars() const { return static_cast<int>(exps_.size()); }
    std::int32_t degree() const { return deg_; }
    std::int32_t exp(int slot) const { return exps_[slot]; }
    const std::vector<std::int32_t>& exps() const { return exps_; }

    bool is_one() const { return deg_ == 0; }

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    /// this / o; requires o.divides(*this) == false handling: caller ensures divisibility.
    Monomial quotient(const Monomial& o) const;

    friend Monomial lcm(const Monomial& a, const Monomial& b);
    friend bool coprime(const Monomial& a, const Monomial& b);

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.deg_ == b.deg_ && a.exps_ == b.exps_;
    }

    std::size_t hash() const noexcept {
        std::size_t h = static_cast<std::size_t>(deg_);
        for (auto e : exps_) h = h * 1099511628211ull + static_cast<std::size_t>(e) + 1;
        return h;
    }

private:
    std::vector<std::int32_t> exps_;
    std::int32_t deg_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

/// Three-way comparison under the given order: negative if a < b, zero if
/// equal, positive if a > b. Grevlex and lex follow the usual conventions;
/// elimination compares the eliminated block (degree, then grevlex) first.
int compare(const Monomial& a, const Monomial& b, const MonomialOrder& order);

inline bool less_than(const Monomial& a, const Monomial& b, const MonomialOrder& order) {
    return compare(a, b, order) < 0;
}
inline bool greater_than(const Monomial& a, const Monomial& b, const MonomialOrder& order) {
    return compare(a, b, order) > 0;
}

}  // namespace toricdd
