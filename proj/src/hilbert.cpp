#include "toricdd/hilbert.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace toricdd {

MonomialIdeal minimalize(std::vector<Monomial> gens, int nvars) {
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.exps() < b.exps();
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    // bucket boundaries by degree: a divisor has strictly smaller degree
    std::vector<Monomial> kept;
    std::size_t same_degree_start = 0;
    for (std::size_t k = 0; k < gens.size(); ++k) {
        if (k > 0 && gens[k].degree() != gens[k - 1].degree()) same_degree_start = kept.size();
        bool redundant = false;
        for (std::size_t j = 0; j < same_degree_start && !redundant; ++j)
            if (kept[j].divides(gens[k])) redundant = true;
        if (!redundant) kept.push_back(std::move(gens[k]));
    }
    return {nvars, std::move(kept)};
}

MonomialIdeal initial_ideal(const GroebnerBasis& gb) {
    std::vector<Monomial> lms;
    lms.reserve(gb.basis.size());
    for (const auto& p : gb.basis) lms.push_back(p.leading_monomial());
    int nvars = gb.ring ? gb.ring->nvars() : 0;
    // a reduced basis already has minimal leading monomials
    return minimalize(std::move(lms), nvars);
}

bool HilbertSeriesNumerator::is_zero() const {
    for (const auto& c : coeffs)
        if (c != 0) return false;
    return true;
}

namespace {

using UniPoly = std::vector<mpz_class>;  // coeffs[k] * t^k

void trim(UniPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

UniPoly add(const UniPoly& a, const UniPoly& b) {
    UniPoly out(std::max(a.size(), b.size()), 0);
    for (std::size_t k = 0; k < a.size(); ++k) out[k] += a[k];
    for (std::size_t k = 0; k < b.size(); ++k) out[k] += b[k];
    trim(out);
    return out;
}

// a += t^shift * b
void add_shifted(UniPoly& a, const UniPoly& b, int shift) {
    if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
    for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] += b[k];
    trim(a);
}

// p *= (1 - t^d)
void mul_one_minus_power(UniPoly& p, int d) {
    UniPoly out(p.size() + d, 0);
    for (std::size_t k = 0; k < p.size(); ++k) {
        out[k] += p[k];
        out[k + d] -= p[k];
    }
    p = std::move(out);
    trim(p);
}

int pure_power_var(const Monomial& g) {
    int var = -1;
    for (int k = 0; k < g.nvars(); ++k)
        if (g.exp(k) > 0) {
            if (var >= 0) return -1;
            var = k;
        }
    return var;
}

UniPoly numerator_rec(std::vector<Monomial> gens, int nvars) {
    if (gens.empty()) return {mpz_class(1)};
    for (const auto& g : gens)
        if (g.is_one()) return {};

    std::vector<int> occurrences(nvars, 0);
    int mixed = 0;
    for (const auto& g : gens) {
        if (pure_power_var(g) >= 0) continue;
        ++mixed;
        for (int k = 0; k < nvars; ++k)
            if (g.exp(k) > 0) ++occurrences[k];
    }
    if (mixed == 0) {
        UniPoly out{mpz_class(1)};
        for (const auto& g : gens) mul_one_minus_power(out, g.degree());
        return out;
    }

    int pivot = 0;
    for (int k = 1; k < nvars; ++k)
        if (occurrences[k] > occurrences[pivot]) pivot = k;

    // sum branch: M + (x_pivot)
    std::vector<Monomial> sum_gens;
    sum_gens.push_back(Monomial::var(nvars, pivot));
    for (const auto& g : gens)
        if (g.exp(pivot) == 0) sum_gens.push_back(g);

    // colon branch: M : x_pivot
    std::vector<Monomial> colon_gens;
    colon_gens.reserve(gens.size());
    for (const auto& g : gens) {
        if (g.exp(pivot) == 0) {
            colon_gens.push_back(g);
        } else {
            std::vector<std::int32_t> e = g.exps();
            e[pivot] -= 1;
            colon_gens.push_back(Monomial(std::move(e)));
        }
    }

    UniPoly out = numerator_rec(std::move(sum_gens), nvars);
    UniPoly colon = numerator_rec(minimalize(std::move(colon_gens), nvars).gens, nvars);
    add_shifted(out, colon, 1);
    return out;
}

}  // namespace

HilbertSeriesNumerator hilbert_numerator(const MonomialIdeal& M, int nvars) {
    for (const auto& g : M.gens)
        if (g.nvars() != nvars) throw std::invalid_argument("generator uses a larger roster");
    UniPoly num = numerator_rec(M.gens, nvars);
    return {nvars, std::move(num)};
}

namespace {

// divides by (1 - t); valid only when num(1) == 0
UniPoly divide_one_minus_t(const UniPoly& p) {
    UniPoly q(p.size() ? p.size() - 1 : 0, 0);
    mpz_class acc = 0;
    for (std::size_t k = 0; k < q.size(); ++k) {
        acc += p[k];
        q[k] = acc;
    }
    trim(q);
    return q;
}

mpz_class value_at_one(const UniPoly& p) {
    mpz_class v = 0;
    for (const auto& c : p) v += c;
    return v;
}

// strips all (1-t) factors, returning their count
int strip_unit_root(UniPoly& p) {
    int count = 0;
    while (!p.empty() && value_at_one(p) == 0) {
        p = divide_one_minus_t(p);
        ++count;
    }
    return count;
}

}  // namespace

int krull_dim(const HilbertSeriesNumerator& num) {
    if (num.is_zero()) throw std::domain_error("zero ring: dimension undefined");
    UniPoly p = num.coeffs;
    trim(p);
    return num.nvars - strip_unit_root(p);
}

std::uint64_t ring_degree(const HilbertSeriesNumerator& num) {
    if (num.is_zero()) throw std::domain_error("zero ring: degree undefined");
    UniPoly p = num.coeffs;
    trim(p);
    strip_unit_root(p);
    mpz_class v = value_at_one(p);
    if (v <= 0 || !v.fits_ulong_p()) throw std::domain_error("degree out of range");
    return static_cast<std::uint64_t>(v.get_ui());
}

std::uint64_t hilbert_function(const HilbertSeriesNumerator& num, int d) {
    // coefficient of t^d in Num(t) * sum_j C(j+N-1, N-1) t^j
    mpz_class total = 0;
    for (int k = 0; k <= d && k < static_cast<int>(num.coeffs.size()); ++k) {
        if (num.coeffs[k] == 0) continue;
        mpz_class binom;
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(d - k + num.nvars - 1),
                     static_cast<unsigned long>(num.nvars - 1));
        total += num.coeffs[k] * binom;
    }
    if (total < 0 || !total.fits_ulong_p()) throw std::domain_error("Hilbert function out of range");
    return static_cast<std::uint64_t>(total.get_ui());
}

namespace {

struct StandardCounter {
    const MonomialIdeal* ideal;
    std::vector<int> bounds;        // pure-power exponents per variable
    std::vector<int> support_max;   // largest variable index in each generator

    std::uint64_t count(int depth, std::vector<std::int32_t>& partial,
                        const std::vector<int>& alive) const {
        if (depth == ideal->nvars) return 1;
        std::uint64_t total = 0;
        for (int e = 0; e < bounds[depth]; ++e) {
            partial[depth] = e;
            std::vector<int> next_alive;
            bool dead = false;
            for (int g : alive) {
                if (ideal->gens[g].exp(depth) > e) continue;
                if (support_max[g] <= depth) {
                    dead = true;  // generator fully divides the partial monomial
                    break;
                }
                next_alive.push_back(g);
            }
            if (dead) break;  // larger e keeps the divisor alive too
            total += count(depth + 1, partial, next_alive);
        }
        partial[depth] = 0;
        return total;
    }
};

}  // namespace

std::uint64_t count_standard_monomials(const MonomialIdeal& M) {
    const int N = M.nvars;
    if (M.contains_one()) return 0;
    StandardCounter counter{&M, std::vector<int>(N, 0), {}};
    for (int v = 0; v < N; ++v) {
        int bound = -1;
        for (const auto& g : M.gens) {
            int pv = pure_power_var(g);
            if (pv == v) bound = bound < 0 ? g.degree() : std::min<int>(bound, g.degree());
        }
        if (bound < 0)
            throw std::domain_error("quotient is not Artinian: no pure power of variable slot " +
                                    std::to_string(v));
        counter.bounds[v] = bound;
    }
    counter.support_max.reserve(M.gens.size());
    for (const auto& g : M.gens) {
        int top = -1;
        for (int k = 0; k < N; ++k)
            if (g.exp(k) > 0) top = k;
        counter.support_max.push_back(top);
    }
    std::vector<int> alive(M.gens.size());
    for (std::size_t k = 0; k < alive.size(); ++k) alive[k] = static_cast<int>(k);
    std::vector<std::int32_t> partial(N, 0);
    return counter.count(0, partial, alive);
}

std::uint64_t colength(const std::vector<Polynomial>& gens) {
    if (gens.empty()) throw std::invalid_argument("colength: empty generator list");
    GroebnerBasis gb = buchberger(gens);
    const RingPtr& ring = gens.front().ring();
    if (gb.basis.empty())
        throw std::domain_error(
            "quotient is not Artinian: no pure power of variable " + ring->roster[0].name());
    MonomialIdeal in = initial_ideal(gb);
    if (in.contains_one()) return 0;
    try {
        return count_standard_monomials(in);
    } catch (const std::domain_error&) {
        // rethrow with the roster name for the offending variable
        for (int v = 0; v < ring->nvars(); ++v) {
            bool has_power = false;
            for (const auto& g : in.gens)
                if (pure_power_var(g) == v) has_power = true;
            if (!has_power)
                throw std::domain_error("quotient is not Artinian: variable " +
                                        ring->roster[v].name() + " has no pure power in the initial ideal");
        }
        throw;
    }
}

LocalColengthResult local_colength(const std::vector<Polynomial>& gens,
                                   const LocalColengthOptions& opts) {
    if (gens.empty()) throw std::invalid_argument("local_colength: empty generator list");
    const RingPtr& ring = gens.front().ring();
    GroebnerBasis base = buchberger(gens);

    std::optional<std::uint64_t> prev;
    int exponent = opts.power_start;
    while (true) {
        std::vector<Polynomial> closed = base.basis;
        for (const auto& v : ring->roster)
            closed.push_back(Polynomial::variable(ring, v, exponent));
        std::uint64_t value = colength(closed);
        if (prev && *prev == value) return {value, exponent};
        prev = value;
        if (exponent >= opts.power_cap)
            throw std::runtime_error(
                "local colength did not stabilize up to pure-power exponent " +
                std::to_string(opts.power_cap) + " (not a system of parameters?)");
        exponent = std::min(opts.power_cap, exponent * 2);
    }
}

int quotient_dimension(const std::vector<Polynomial>& ambient, const RingPtr& ring) {
    std::vector<Polynomial> nonzero;
    for (const auto& f : ambient)
        if (!f.is_zero()) nonzero.push_back(f);
    if (nonzero.empty()) return ring->nvars();
    GroebnerBasis gb = buchberger(nonzero);
    return krull_dim(hilbert_numerator(initial_ideal(gb), ring->nvars()));
}

namespace {

MultiplicityResult multiplicity_by_reduction(const std::vector<Polynomial>& j_gens,
                                             const std::vector<Polynomial>& ambient,
                                             std::uint64_t seed,
                                             const MultiplicityOptions& opts) {
    const RingPtr& ring = j_gens.front().ring();
    const int d = quotient_dimension(ambient, ring);

    std::vector<std::uint64_t> seen;
    for (int round = 0; round < opts.retry_cap; ++round) {
        SplitMix64 rng = SplitMix64::substream(seed, static_cast<std::uint64_t>(round));
        std::vector<Polynomial> cut = ambient;
        for (int k = 0; k < d; ++k) {
            Polynomial combo = Polynomial::zero(ring);
            for (const auto& g : j_gens)
                combo = combo + g.scaled(make_rational(rng.nonzero_in(opts.coeff_bound)));
            cut.push_back(std::move(combo));
        }
        std::uint64_t value;
        int stab;
        try {
            LocalColengthResult res = local_colength(cut, opts.local);
            value = res.value;
            stab = res.stabilized_at;
        } catch (const std::runtime_error&) {
            continue;  // degenerate draw, try again
        }
        for (std::uint64_t v : seen)
            if (v == value)
                return {value, MultiplicityMethod::GenericReduction, round + 1, stab};
        seen.push_back(value);
    }
    throw std::runtime_error("generic reduction draws did not agree within the retry cap");
}

MultiplicityResult multiplicity_by_fit(const std::vector<Polynomial>& j_gens,
                                       const std::vector<Polynomial>& ambient,
                                       const MultiplicityOptions& opts) {
    const RingPtr& ring = j_gens.front().ring();
    const int d = quotient_dimension(ambient, ring);

    std::vector<Monomial> base;
    for (const auto& g : j_gens) {
        if (!g.is_monomial())
            throw std::invalid_argument("the Hilbert-Samuel fit oracle requires monomial generators");
        base.push_back(g.leading_monomial());
    }
    MonomialIdeal jmin = minimalize(base, ring->nvars());

    std::vector<long long> lengths;
    std::vector<Monomial> power = jmin.gens;
    for (int n = 1; n <= opts.fit_cap; ++n) {
        if (n > 1) {
            std::unordered_set<Monomial, MonomialHash> products;
            for (const auto& p : power)
                for (const auto& g : jmin.gens) products.insert(p * g);
            power = minimalize(std::vector<Monomial>(products.begin(), products.end()),
                               ring->nvars())
                        .gens;
        }
        std::vector<Polynomial> gens = ambient;
        for (const auto& m : power) gens.push_back(Polynomial::monomial(ring, m));
        lengths.push_back(static_cast<long long>(colength(gens)));

        if (static_cast<int>(lengths.size()) >= d + 2) {
            std::vector<long long> diff = lengths;
            for (int round = 0; round < d; ++round)
                for (std::size_t k = 0; k + 1 < diff.size(); ++k) diff[k] = diff[k + 1] - diff[k];
            diff.resize(lengths.size() - d);
            if (diff.size() >= 2 && diff[diff.size() - 1] == diff[diff.size() - 2] &&
                diff.back() > 0)
                return {static_cast<std::uint64_t>(diff.back()), MultiplicityMethod::HsFit, 0, n};
        }
    }
    throw std::runtime_error("Hilbert-Samuel fit did not stabilize within the power cap");
}

}  // namespace

MultiplicityResult hs_multiplicity(const std::vector<Polynomial>& j_gens,
                                   const std::vector<Polynomial>& ambient,
                                   MultiplicityMethod method, std::uint64_t seed,
                                   const MultiplicityOptions& opts) {
    if (j_gens.empty()) throw std::invalid_argument("multiplicity of the zero ideal");
    if (method == MultiplicityMethod::GenericReduction)
        return multiplicity_by_reduction(j_gens, ambient, seed, opts);
    return multiplicity_by_fit(j_gens, ambient, opts);
}

}  // namespace toricdd
