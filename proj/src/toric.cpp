#include "toricdd/toric.hpp"

#include <stdexcept>
#include <string>

namespace toricdd {

RingPtr st_ring(const DDParams& p) {
    std::vector<VarId> roster;
    for (int i = 1; i <= p.m; ++i) roster.push_back(VarId::s(i));
    for (int j = 1; j <= p.r * p.n; ++j) roster.push_back(VarId::t(j));
    return RingSpec::make(p.m, p.n, p.r, std::move(roster), MonomialOrder::grevlex());
}

std::map<VarId, Polynomial> segre_map(const DDParams& p, const RingPtr& ring) {
    p.validate();
    if (!p.toric()) throw std::invalid_argument("parametrization requires a = b = 2");
    std::map<VarId, Polynomial> images;
    for (int l = 1; l <= p.r; ++l)
        for (int i = 1; i <= p.m; ++i)
            for (int j = 1; j <= p.n; ++j) {
                Polynomial im = Polynomial::variable(ring, VarId::s(i)) *
                                Polynomial::variable(ring, VarId::t((l - 1) * p.n + j));
                images.emplace(VarId::x(l, i, j), std::move(im));
            }
    return images;
}

std::vector<std::vector<Polynomial>> t_matrix(const DDParams& p, const RingPtr& ring) {
    std::vector<std::vector<Polynomial>> grid(p.r);
    for (int l = 1; l <= p.r; ++l)
        for (int j = 1; j <= p.n; ++j)
            grid[l - 1].push_back(Polynomial::variable(ring, VarId::t((l - 1) * p.n + j)));
    return grid;
}

namespace {

RingPtr combined_ring(const DDParams& p, const ToricCheckOptions& opts) {
    int total = p.m * p.n * p.r + p.m + p.r * p.n;
    if (total > opts.var_cap)
        throw std::invalid_argument(
            "elimination roster has " + std::to_string(total) + " variables, above the cap of " +
            std::to_string(opts.var_cap) + " (raise --var-cap to force)");
    std::vector<VarId> roster;
    for (int l = 1; l <= p.r; ++l)
        for (int i = 1; i <= p.m; ++i)
            for (int j = 1; j <= p.n; ++j) roster.push_back(VarId::x(l, i, j));
    for (int i = 1; i <= p.m; ++i) roster.push_back(VarId::s(i));
    for (int j = 1; j <= p.r * p.n; ++j) roster.push_back(VarId::t(j));
    return RingSpec::make(p.m, p.n, p.r, std::move(roster), MonomialOrder::grevlex());
}

}  // namespace

std::vector<Polynomial> kernel_ideal(const DDParams& p, const ToricCheckOptions& opts) {
    p.validate();
    if (!p.toric()) throw std::invalid_argument("kernel computation requires a = b = 2");
    RingPtr big = combined_ring(p, opts);

    std::vector<Polynomial> gens;
    for (int l = 1; l <= p.r; ++l)
        for (int i = 1; i <= p.m; ++i)
            for (int j = 1; j <= p.n; ++j) {
                Polynomial graph =
                    Polynomial::variable(big, VarId::x(l, i, j)) -
                    Polynomial::variable(big, VarId::s(i)) *
                        Polynomial::variable(big, VarId::t((l - 1) * p.n + j));
                gens.push_back(std::move(graph));
            }
    // the parametrization factors through rank-1 t-matrices
    for (auto& f : minors(t_matrix(p, big), 2)) gens.push_back(std::move(f));

    std::vector<VarId> elim;
    for (int i = 1; i <= p.m; ++i) elim.push_back(VarId::s(i));
    for (int j = 1; j <= p.r * p.n; ++j) elim.push_back(VarId::t(j));

    std::vector<Polynomial> kernel = eliminate(gens, elim);

    RingPtr xring = RingSpec::dd_ring(p.m, p.n, p.r);
    std::vector<Polynomial> out;
    out.reserve(kernel.size());
    for (const auto& f : kernel) out.push_back(f.transport(xring));
    return out;
}

ToricEqualityResult toric_equality(const DDParams& p, const ToricCheckOptions& opts) {
    p.validate();
    ToricEqualityResult res;

    // cheap containment first: substitute and reduce modulo the t-minors
    RingPtr st = st_ring(p);
    auto images = segre_map(p, st);
    std::vector<Polynomial> tmin = minors(t_matrix(p, st), 2);
    GroebnerBasis tgb;
    if (!tmin.empty()) tgb = buchberger(tmin);

    RingPtr xring = RingSpec::dd_ring(p.m, p.n, p.r);
    std::vector<Polynomial> dd = dd_ideal(p, xring);
    res.contained = true;
    for (const auto& f : dd) {
        Polynomial image = f.apply_map(images, st);
        if (!tmin.empty()) image = reduce(image, tgb);
        if (!image.is_zero()) res.contained = false;
    }

    std::vector<Polynomial> kernel = kernel_ideal(p, opts);
    res.kernel_size = static_cast<int>(kernel.size());
    res.equal = !kernel.empty() && ideal_equal(dd, kernel, xring->order);
    return res;
}

}  // namespace toricdd
