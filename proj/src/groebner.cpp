#include "toricdd/groebner.hpp"

#include <algorithm>
#include <cstdint>
#include <queue>
#include <stdexcept>
#include <unordered_set>

namespace toricdd {

namespace {

// Full tail reduction against a basis of integer-primitive elements scanned
// in array order (first divisor wins). Arithmetic is fraction-free: instead
// of dividing by leading coefficients, the working polynomial is scaled up by
// the cofactor and the joint content is stripped, which keeps coefficient
// growth under control. The raw result equals multiplier * NF(f); exact
// callers divide it back out.
struct Reducer {
    const std::vector<Polynomial>* basis;
    const MonomialOrder* order;
    const std::vector<int>* sugars = nullptr;  // optional, parallel to basis
    bool sorted_by_degree = false;
    int skip = -1;

    Polynomial normal_form_raw(Polynomial f, mpq_class* multiplier,
                               int* sugar = nullptr) const {
        mpq_class u = 1;
        if (!f.is_zero()) {
            mpz_class denom_lcm = 1;
            for (const auto& t : f.terms())
                mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(),
                        t.coeff.get_den().get_mpz_t());
            if (denom_lcm != 1) {
                f = f.scaled(mpq_class(denom_lcm));
                u *= denom_lcm;
            }
        }
        std::vector<Term> out;
        while (!f.is_zero()) {
            const Term& lead = f.leading_term();
            bool stepped = false;
            for (std::size_t k = 0; k < basis->size(); ++k) {
                if (static_cast<int>(k) == skip) continue;
                const Polynomial& g = (*basis)[k];
                if (g.is_zero()) continue;
                const Monomial& gl = g.leading_monomial();
                if (gl.degree() > lead.mono.degree()) {
                    if (sorted_by_degree) break;
                    continue;
                }
                if (!gl.divides(lead.mono)) continue;
                Monomial q = lead.mono.quotient(gl);
                if (sugar && sugars)
                    *sugar = std::max(*sugar, (*sugars)[k] + q.degree());

                const mpz_class& a = g.leading_coeff().get_num();  // positive
                mpz_class c = lead.coeff.get_num();
                mpz_class d;
                mpz_gcd(d.get_mpz_t(), c.get_mpz_t(), a.get_mpz_t());
                mpz_class scale = a / d;
                if (scale != 1) {
                    f = f.scaled(mpq_class(scale));
                    for (auto& t : out) t.coeff *= scale;
                    u *= scale;
                }
                f = f.sub_mul(mpq_class(c / d), q, g);
                strip_content(out, f, u);
                stepped = true;
                break;
            }
            if (!stepped) {
                out.push_back(lead);
                f = f.tail();
            }
        }
        *multiplier = u;
        return Polynomial::from_terms(f.ring(), std::move(out));
    }

    Polynomial normal_form(const Polynomial& f, int* sugar = nullptr) const {
        mpq_class u;
        Polynomial raw = normal_form_raw(f, &u, sugar);
        if (raw.is_zero() || u == 1) return raw;
        return raw.scaled(1 / u);
    }

private:
    static void strip_content(std::vector<Term>& out, Polynomial& f, mpq_class& u) {
        mpz_class content = 0;
        for (const auto& t : out) {
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), t.coeff.get_num().get_mpz_t());
            if (content == 1) return;
        }
        for (const auto& t : f.terms()) {
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), t.coeff.get_num().get_mpz_t());
            if (content == 1) return;
        }
        if (content == 0 || content == 1) return;
        mpq_class inv(1, content);
        inv.canonicalize();
        f = f.scaled(inv);
        for (auto& t : out) t.coeff /= content;
        u = u * inv;
    }
};

struct SPair {
    int i, j;
    Monomial lcm;
    std::int32_t lcm_deg;
    int sugar;
    bool alive = true;
};

struct Engine {
    RingPtr ring;
    MonomialOrder order;
    std::vector<Polynomial> basis;  // monic, sorted ascending by LM at the end
    std::vector<int> sugars;
    std::vector<SPair> pairs;
    // min-heap of indices into pairs
    struct HeapKey {
        std::int32_t deg;
        int sugar;
        int idx;
    };
    std::vector<HeapKey> heap;

    bool heap_less(const HeapKey& a, const HeapKey& b) const {
        if (a.deg != b.deg) return a.deg < b.deg;
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        int c = compare(pairs[a.idx].lcm, pairs[b.idx].lcm, order);
        if (c != 0) return c < 0;
        if (pairs[a.idx].i != pairs[b.idx].i) return pairs[a.idx].i < pairs[b.idx].i;
        return pairs[a.idx].j < pairs[b.idx].j;
    }

    void heap_push(int idx) {
        heap.push_back({pairs[idx].lcm_deg, pairs[idx].sugar, idx});
        std::push_heap(heap.begin(), heap.end(),
                       [this](const HeapKey& a, const HeapKey& b) { return heap_less(b, a); });
    }

    int heap_pop() {
        while (!heap.empty()) {
            std::pop_heap(heap.begin(), heap.end(),
                          [this](const HeapKey& a, const HeapKey& b) { return heap_less(b, a); });
            int idx = heap.back().idx;
            heap.pop_back();
            if (pairs[idx].alive) return idx;
        }
        return -1;
    }

    // Gebauer-Moeller update: add h (monic, nonzero) to the basis and refresh
    // the pair set with the coprimality and chain criteria applied.
    void add_element(Polynomial h, int sugar) {
        const int t = static_cast<int>(basis.size());
        const Monomial& hl = h.leading_monomial();

        struct Cand {
            int g;
            Monomial lcm;
            bool keep = true;
        };
        std::vector<Cand> cands;
        cands.reserve(basis.size());
        for (int g = 0; g < t; ++g) cands.push_back({g, lcm(hl, basis[g].leading_monomial())});

        // within the new pairs, drop any whose lcm is a proper multiple of
        // another's (keep equal-lcm representatives: the first)
        for (std::size_t a = 0; a < cands.size(); ++a) {
            if (!cands[a].keep) continue;
            for (std::size_t b = 0; b < cands.size(); ++b) {
                if (a == b || !cands[b].keep) continue;
                if (cands[b].lcm.divides(cands[a].lcm)) {
                    if (!(cands[a].lcm == cands[b].lcm) || b < a) {
                        cands[a].keep = false;
                        break;
                    }
                }
            }
        }
        // coprime criterion
        for (auto& c : cands)
            if (c.keep && coprime(hl, basis[c.g].leading_monomial())) c.keep = false;

        // chain criterion against pending old pairs
        for (auto& pr : pairs) {
            if (!pr.alive) continue;
            if (!hl.divides(pr.lcm)) continue;
            if (lcm(hl, basis[pr.i].leading_monomial()) == pr.lcm) continue;
            if (lcm(hl, basis[pr.j].leading_monomial()) == pr.lcm) continue;
            pr.alive = false;
        }

        basis.push_back(std::move(h));
        sugars.push_back(sugar);

        for (auto& c : cands) {
            if (!c.keep) continue;
            // both-monomial pairs have an identically zero S-polynomial
            if (basis[t].is_monomial() && basis[c.g].is_monomial()) continue;
            std::int32_t d = c.lcm.degree();
            int sug = std::max(sugars[c.g] + d - basis[c.g].leading_monomial().degree(),
                               sugars[t] + d - basis[t].leading_monomial().degree());
            pairs.push_back({c.g, t, std::move(c.lcm), d, sug});
            heap_push(static_cast<int>(pairs.size()) - 1);
        }
    }
};

std::vector<Polynomial> interreduce(std::vector<Polynomial> basis, const RingPtr& ring,
                                    const MonomialOrder& order) {
    std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
        return less_than(a.leading_monomial(), b.leading_monomial(), order);
    });
    // minimalize: drop elements whose LM is divisible by an earlier LM
    std::vector<Polynomial> minimal;
    for (auto& p : basis) {
        bool redundant = false;
        for (const auto& q : minimal)
            if (q.leading_monomial().divides(p.leading_monomial())) {
                redundant = true;
                break;
            }
        if (!redundant) minimal.push_back(std::move(p));
    }
    // tail-reduce each element modulo the others (monomials have no tail)
    std::vector<Polynomial> out;
    out.reserve(minimal.size());
    for (std::size_t k = 0; k < minimal.size(); ++k) {
        if (minimal[k].is_monomial()) {
            out.push_back(minimal[k].monic());
            continue;
        }
        Reducer red{&minimal, &order, nullptr, order.kind == MonomialOrder::Kind::Grevlex,
                    static_cast<int>(k)};
        mpq_class u;
        out.push_back(red.normal_form_raw(minimal[k], &u).monic());
    }
    std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
        return less_than(a.leading_monomial(), b.leading_monomial(), order);
    });
    return out;
}

}  // namespace

Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& G,
                  const MonomialOrder& order) {
    if (G.empty()) return f;
    RingPtr work_ring = f.ring();
    bool shadow = !(work_ring->order == order);
    if (shadow) work_ring = f.ring()->with_order(order);

    std::vector<Polynomial> basis;
    basis.reserve(G.size());
    for (const auto& g : G) {
        if (g.is_zero()) continue;
        basis.push_back((shadow ? g.transport(work_ring) : g).primitive());
    }
    std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
        if (int c = compare(a.leading_monomial(), b.leading_monomial(), order)) return c < 0;
        return Polynomial::compare(a, b) < 0;
    });
    Reducer red{&basis, &order, nullptr, order.kind == MonomialOrder::Kind::Grevlex, -1};
    Polynomial nf = red.normal_form(shadow ? f.transport(work_ring) : f);
    return shadow ? nf.transport(f.ring()) : nf;
}

Polynomial reduce(const Polynomial& f, const GroebnerBasis& gb) {
    if (gb.basis.empty()) return f;
    bool shadow = !same_ring(*f.ring(), *gb.ring);
    Polynomial g = shadow ? f.transport(gb.ring) : f;
    std::vector<Polynomial> basis;
    basis.reserve(gb.basis.size());
    for (const auto& p : gb.basis) basis.push_back(p.primitive());
    Reducer red{&basis, &gb.order, nullptr,
                gb.order.kind == MonomialOrder::Kind::Grevlex, -1};
    Polynomial nf = red.normal_form(g);
    return shadow ? nf.transport(f.ring()) : nf;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
    require_same_ring(f.ring(), g.ring());
    Monomial u = lcm(f.leading_monomial(), g.leading_monomial());
    Polynomial s = Polynomial::zero(f.ring());
    s = s.sub_mul(-1 / f.leading_coeff(), u.quotient(f.leading_monomial()), f);
    s = s.sub_mul(1 / g.leading_coeff(), u.quotient(g.leading_monomial()), g);
    (void)order;
    return s;
}

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order) {
    if (gens.empty()) throw std::invalid_argument("buchberger: empty generator list");
    RingPtr in_ring = gens.front().ring();
    for (const auto& g : gens) require_same_ring(in_ring, g.ring());

    bool shadow = !(in_ring->order == order);
    RingPtr work_ring = shadow ? in_ring->with_order(order) : in_ring;

    std::vector<Polynomial> input;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        input.push_back(shadow ? g.transport(work_ring) : g);
    }
    if (input.empty()) return {work_ring, order, {}};

    std::sort(input.begin(), input.end(), [&](const Polynomial& a, const Polynomial& b) {
        if (int c = compare(a.leading_monomial(), b.leading_monomial(), order)) return c < 0;
        return Polynomial::compare(a, b) < 0;
    });

    Engine eng{work_ring, order, {}, {}, {}, {}};
    for (auto& g : input) {
        Reducer red{&eng.basis, &order, &eng.sugars};
        int sugar = g.total_degree();
        mpq_class u;
        Polynomial nf = red.normal_form_raw(std::move(g), &u, &sugar);
        if (!nf.is_zero()) eng.add_element(nf.primitive(), sugar);
    }

    while (true) {
        int idx = eng.heap_pop();
        if (idx < 0) break;
        const SPair pr = eng.pairs[idx];
        Polynomial s = s_polynomial(eng.basis[pr.i], eng.basis[pr.j], order);
        if (s.is_zero()) continue;
        int sugar = pr.sugar;
        Reducer red{&eng.basis, &order, &eng.sugars};
        mpq_class u;
        Polynomial nf = red.normal_form_raw(std::move(s), &u, &sugar);
        if (!nf.is_zero()) eng.add_element(nf.primitive(), sugar);
    }

    return {work_ring, order, interreduce(std::move(eng.basis), work_ring, order)};
}

GroebnerBasis buchberger(const std::vector<Polynomial>& gens) {
    if (gens.empty()) throw std::invalid_argument("buchberger: empty generator list");
    return buchberger(gens, gens.front().ring()->order);
}

bool ideal_member(const Polynomial& f, const GroebnerBasis& gb) {
    return reduce(f, gb).is_zero();
}

std::vector<Polynomial> eliminate(const std::vector<Polynomial>& gens,
                                  const std::vector<VarId>& elim_vars) {
    if (gens.empty()) return {};
    RingPtr ring = gens.front().ring();
    std::vector<char> mask(ring->nvars(), 0);
    for (const auto& v : elim_vars) mask[ring->index_of_checked(v)] = 1;

    GroebnerBasis gb = buchberger(gens, MonomialOrder::elimination(mask));
    std::vector<Polynomial> kept;
    for (const auto& p : gb.basis) {
        bool uses_elim = false;
        for (const auto& t : p.terms()) {
            for (int k = 0; k < ring->nvars() && !uses_elim; ++k)
                if (mask[k] && t.mono.exp(k) > 0) uses_elim = true;
            if (uses_elim) break;
        }
        if (!uses_elim) kept.push_back(p.transport(ring));
    }
    std::sort(kept.begin(), kept.end(), [&](const Polynomial& a, const Polynomial& b) {
        return less_than(a.leading_monomial(), b.leading_monomial(), ring->order);
    });
    return kept;
}

bool ideal_equal(const std::vector<Polynomial>& A, const std::vector<Polynomial>& B,
                 const MonomialOrder& order) {
    auto nonzero = [](const std::vector<Polynomial>& v) {
        std::vector<Polynomial> out;
        for (const auto& p : v)
            if (!p.is_zero()) out.push_back(p);
        return out;
    };
    std::vector<Polynomial> a = nonzero(A), b = nonzero(B);
    if (a.empty() || b.empty()) return a.empty() && b.empty();

    GroebnerBasis gba = buchberger(a, order);
    GroebnerBasis gbb = buchberger(b, order);
    for (const auto& f : a)
        if (!ideal_member(f, gbb)) return false;
    for (const auto& g : b)
        if (!ideal_member(g, gba)) return false;
    return true;
}

}  // namespace toricdd
