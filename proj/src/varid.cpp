#include "toricdd/varid.hpp"

namespace toricdd {

std::string VarId::name() const {
    switch (kind) {
        case VarKind::X:
            return "x[" + std::to_string(l) + "," + std::to_string(i) + "," + std::to_string(j) + "]";
        case VarKind::S:
            return "s[" + std::to_string(i) + "]";
        case VarKind::T:
            return "t[" + std::to_string(j) + "]";
        case VarKind::Z:
            return "z[" + std::to_string(l) + "," + std::to_string(i) + "," + std::to_string(j) + "]";
    }
    return "?";
}

std::shared_ptr<const RingSpec> RingSpec::make(int m, int n, int r,
                                               std::vector<VarId> roster,
                                               MonomialOrder order) {
    auto spec = std::make_shared<RingSpec>();
    spec->m = m;
    spec->n = n;
    spec->r = r;
    spec->roster = std::move(roster);
    if (order.kind == MonomialOrder::Kind::Elimination &&
        order.elim_mask.size() != spec->roster.size())
        throw std::invalid_argument("elimination mask size does not match roster");
    spec->order = std::move(order);
    for (int k = 0; k < spec->nvars(); ++k) {
        if (!spec->index_.emplace(spec->roster[k], k).second)
            throw std::invalid_argument("duplicate variable in roster: " + spec->roster[k].name());
    }
    return spec;
}

std::shared_ptr<const RingSpec> RingSpec::dd_ring(int m, int n, int r, MonomialOrder order) {
    if (m < 1 || n < 1 || r < 1) throw std::invalid_argument("ring dimensions must be positive");
    std::vector<VarId> roster;
    roster.reserve(static_cast<std::size_t>(m) * n * r);
    for (int l = 1; l <= r; ++l)
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= n; ++j) roster.push_back(VarId::x(l, i, j));
    return make(m, n, r, std::move(roster), std::move(order));
}

std::shared_ptr<const RingSpec> RingSpec::chart_ring(int m, int n, int r) {
    std::vector<VarId> roster;
    roster.reserve(static_cast<std::size_t>(m) * n * r);
    for (int l = 1; l <= r; ++l)
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= n; ++j) roster.push_back(VarId::z(l, i, j));
    return make(m, n, r, std::move(roster), MonomialOrder::grevlex());
}

std::shared_ptr<const RingSpec> RingSpec::with_order(MonomialOrder order) const {
    return make(m, n, r, roster, std::move(order));
}

bool same_ring(const RingSpec& a, const RingSpec& b) {
    if (&a == &b) return true;
    return a.roster == b.roster && a.order == b.order;
}

}  // namespace toricdd
