#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace toricdd {

/// The four indexed variable families the library works with.
///
///   X(l,i,j)  entry (i,j) of the l-th generic matrix
///   S(i)      row parameter of the Segre-type map
///   T(j)      column parameter, 1 <= j <= r*n
///   Z(l,i,j)  chart coordinate paired with X(l,i,j)
enum class VarKind : std::uint8_t { X, S, T, Z };

struct VarId {
    VarKind kind = VarKind::X;
    int l = 0;  // block index (X/Z only)
    int i = 0;  // row index (X/Z/S)
    int j = 0;  // column index (X/Z/T)

    static VarId x(int l, int i, int j) { return {VarKind::X, l, i, j}; }
    static VarId s(int i) { return {VarKind::S, 0, i, 0}; }
    static VarId t(int j) { return {VarKind::T, 0, 0, j}; }
    static VarId z(int l, int i, int j) { return {VarKind::Z, l, i, j}; }

    friend auto operator<=>(const VarId&, const VarId&) = default;

    // x[l,i,j], s[i], t[j], z[l,i,j]
    std::string name() const;
};

struct VarIdHash {
    std::size_t operator()(const VarId& v) const noexcept {
        std::size_t h = static_cast<std::size_t>(v.kind);
        h = h * 1000003u + static_cast<std::size_t>(v.l);
        h = h * 1000003u + static_cast<std::size_t>(v.i);
        h = h * 1000003u + static_cast<std::size_t>(v.j);
        return h;
    }
};

/// Term orders on the monomials of a ring. Elimination is the block order:
/// any monomial involving an eliminated variable is larger than any monomial
/// free of them; ties are broken by grevlex within each block.
struct MonomialOrder {
    enum class Kind : std::uint8_t { Grevlex, Lex, Elimination };

    Kind kind = Kind::Grevlex;
    std::vector<char> elim_mask;  // one flag per roster slot (Elimination only)

    static MonomialOrder grevlex() { return {Kind::Grevlex, {}}; }
    static MonomialOrder lex() { return {Kind::Lex, {}}; }
    static MonomialOrder elimination(std::vector<char> mask) {
        return {Kind::Elimination, std::move(mask)};
    }

    friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

/// An ambient polynomial ring: the variable roster (order of the roster fixes
/// exponent-vector slots) plus the term order its polynomials are kept in.
/// Instances are immutable and shared by the polynomials living in them.
class RingSpec {
public:
    int m = 0, n = 0, r = 0;
    std::vector<VarId> roster;
    MonomialOrder order;

    static std::shared_ptr<const RingSpec> make(int m, int n, int r,
                                                std::vector<VarId> roster,
                                                MonomialOrder order);

    /// Ring on the X-variables x[l,i,j], l=1..r, i=1..m, j=1..n, in (l,i,j) order.
    static std::shared_ptr<const RingSpec> dd_ring(int m, int n, int r,
                                                   MonomialOrder order = MonomialOrder::grevlex());

    /// Ring on the Z-variables z[l,i,j] with the same index grid.
    static std::shared_ptr<const RingSpec> chart_ring(int m, int n, int r);

    /// Same roster, different order.
    std::shared_ptr<const RingSpec> with_order(MonomialOrder order) const;

    int nvars() const { return static_cast<int>(roster.size()); }

    /// Roster slot of v, or -1.
    int index_of(const VarId& v) const {
        auto it = index_.find(v);
        return it == index_.end() ? -1 : it->second;
    }

    int index_of_checked(const VarId& v) const {
        int k = index_of(v);
        if (k < 0) throw std::invalid_argument("variable " + v.name() + " not in ring roster");
        return k;
    }

private:
    std::unordered_map<VarId, int, VarIdHash> index_;
};

using RingPtr = std::shared_ptr<const RingSpec>;

/// Structural ring identity (pointer fast path, then roster + order).
bool same_ring(const RingSpec& a, const RingSpec& b);

inline void require_same_ring(const RingPtr& a, const RingPtr& b) {
    if (a.get() == b.get()) return;
    if (!a || !b || !same_ring(*a, *b)) throw std::invalid_argument("ring mismatch");
}

}  // namespace toricdd
