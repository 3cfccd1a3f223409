#include "toricdd/lech.hpp"

#include <atomic>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "toricdd/ddideal.hpp"
#include "toricdd/format.hpp"

namespace toricdd {

std::string decimal_truncate3(const mpq_class& value) {
    if (value == 0) return "0";
    if (value < 0) return "-" + decimal_truncate3(mpq_class(-value));
    const mpz_class& p = value.get_num();
    const mpz_class& q = value.get_den();
    mpz_class scaled = p / q;
    int shift = 0;
    if (scaled >= 1000) {
        // truncate an integer >= 1000 to its first three digits
        mpz_class t = scaled;
        mpz_class tens = 1;
        while (t >= 1000) {
            t /= 10;
            tens *= 10;
        }
        t *= tens;
        return t.get_str();
    }
    mpz_class num = p;
    while (scaled < 100) {
        num *= 10;
        ++shift;
        scaled = num / q;
    }
    std::string digits = scaled.get_str();  // three significant digits, truncated
    if (shift == 0) return digits;
    std::string integral = shift >= static_cast<int>(digits.size())
                               ? "0"
                               : digits.substr(0, digits.size() - shift);
    std::string frac = digits.substr(integral == "0" ? 0 : integral.size());
    while (static_cast<int>(frac.size()) < shift) frac.insert(frac.begin(), '0');
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    if (frac.empty()) return integral;
    return integral + "." + frac;
}

namespace {

std::uint64_t binomial_u64(int top, int bottom) {
    if (bottom < 0 || bottom > top) return 0;
    std::uint64_t out = 1;
    for (int k = 1; k <= bottom; ++k) out = out * static_cast<std::uint64_t>(top - bottom + k) / k;
    return out;
}

}  // namespace

Monomial random_monomial(int nvars, int max_degree, SplitMix64& rng) {
    if (max_degree < 1) throw std::invalid_argument("max_degree must be at least 1");
    int deg = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_degree)));
    std::uint64_t total = binomial_u64(deg + nvars - 1, nvars - 1);
    std::uint64_t rank = rng.below(total);
    // unrank the composition: count compositions by the first exponent
    std::vector<std::int32_t> exps(nvars, 0);
    int remaining = deg;
    for (int v = 0; v + 1 < nvars; ++v) {
        for (int e = remaining; e >= 0; --e) {
            std::uint64_t block = binomial_u64(remaining - e + nvars - v - 2, nvars - v - 2);
            if (rank < block) {
                exps[v] = e;
                remaining -= e;
                break;
            }
            rank -= block;
        }
    }
    exps[nvars - 1] = remaining;
    return Monomial(std::move(exps));
}

std::vector<Monomial> sample_extras(const ExperimentConfig& config, int index) {
    SplitMix64 rng = SplitMix64::substream(config.master_seed, static_cast<std::uint64_t>(index));
    int span = config.extra_max - config.extra_min + 1;
    int k = config.extra_min + static_cast<int>(rng.below(static_cast<std::uint64_t>(span)));
    std::vector<Monomial> extras;
    extras.reserve(k);
    for (int c = 0; c < k; ++c) extras.push_back(random_monomial(8, config.extra_max_degree, rng));
    return extras;
}

std::vector<Polynomial> build_sample_ideal(const ExperimentConfig& config, int index,
                                           const RingPtr& ring) {
    std::vector<Polynomial> gens;
    for (const auto& v : ring->roster)
        gens.push_back(Polynomial::variable(ring, v, config.pure_power_exp));
    for (const auto& m : sample_extras(config, index))
        gens.push_back(Polynomial::monomial(ring, m));
    return gens;
}

namespace {

std::uint64_t factorial_u64(int d) {
    std::uint64_t out = 1;
    for (int k = 2; k <= d; ++k) out *= static_cast<std::uint64_t>(k);
    return out;
}

mpq_class exact_ratio(std::uint64_t mult, int d, std::uint64_t length) {
    mpq_class ratio(mpz_class(static_cast<unsigned long>(mult)),
                    mpz_class(static_cast<unsigned long>(factorial_u64(d))) *
                        static_cast<unsigned long>(length));
    ratio.canonicalize();
    return ratio;
}

}  // namespace

std::vector<SampleRecord> run_experiment(const ExperimentConfig& config) {
    RingPtr ring = RingSpec::dd_ring(2, 2, 2);
    DDParams params{2, 2, 2, 2, 2};
    const std::vector<Polynomial> ambient = dd_ideal(params, ring);
    const int d = quotient_dimension(ambient, ring);

    std::vector<SampleRecord> records(config.sample_count);
    std::atomic<int> cursor{0};

    auto worker = [&]() {
        while (true) {
            int idx = cursor.fetch_add(1);
            if (idx >= config.sample_count) return;
            SampleRecord& rec = records[idx];
            rec.index = idx;
            rec.seed = SplitMix64::substream(config.master_seed,
                                             static_cast<std::uint64_t>(idx))
                           .state;
            try {
                rec.extras = sample_extras(config, idx);
                std::vector<Polynomial> j_gens = build_sample_ideal(config, idx, ring);
                std::vector<Polynomial> full = ambient;
                for (const auto& g : j_gens) full.push_back(g);
                rec.length = colength(full);
                MultiplicityResult mult = hs_multiplicity(
                    j_gens, ambient, MultiplicityMethod::GenericReduction,
                    rec.seed ^ 0x5ECCE55ull);
                rec.mult = mult.value;
                rec.ratio = exact_ratio(rec.mult, d, rec.length);
                rec.ratio_decimal = decimal_truncate3(rec.ratio);
            } catch (const std::exception& ex) {
                rec.error = ex.what();
            }
        }
    };

    int jobs = std::max(1, config.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return records;
}

namespace {

std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"\n") == std::string::npos) return value;
    std::string quoted = "\"";
    for (char c : value) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += "\"";
    return quoted;
}

}  // namespace

void write_csv(const std::vector<SampleRecord>& records, std::ostream& out) {
    RingPtr ring = RingSpec::dd_ring(2, 2, 2);
    out << "index,seed,k,extra_gens,length,mult,ratio_exact,ratio_decimal,error\n";
    for (const auto& rec : records) {
        std::string extras;
        for (std::size_t k = 0; k < rec.extras.size(); ++k) {
            if (k) extras += ";";
            extras += to_string(rec.extras[k], *ring);
        }
        out << rec.index << "," << rec.seed << "," << rec.extras.size() << ","
            << csv_field(extras) << ",";
        if (rec.error.empty()) {
            out << rec.length << "," << rec.mult << "," << rec.ratio.get_str() << ","
                << rec.ratio_decimal << ",";
        } else {
            out << ",,,," << csv_field(rec.error);
        }
        out << "\n";
    }
}

void write_gnuplot(const std::vector<SampleRecord>& records, std::ostream& fig1,
                   std::ostream& fig2) {
    for (const auto& rec : records) {
        if (!rec.error.empty()) continue;
        fig1 << rec.length << " " << rec.ratio_decimal << "\n";
        fig2 << rec.extras.size() << " " << rec.ratio_decimal << "\n";
    }
}

namespace {

// all degree-k monomials in the ring's variables
std::vector<Polynomial> power_of_irrelevant(const RingPtr& ring, int k) {
    std::vector<Polynomial> out;
    std::vector<std::int32_t> exps(ring->nvars(), 0);
    auto rec = [&](auto&& self, int var, int remaining) -> void {
        if (var + 1 == ring->nvars()) {
            exps[var] = remaining;
            out.push_back(Polynomial::monomial(ring, Monomial(exps)));
            exps[var] = 0;
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            exps[var] = e;
            self(self, var + 1, remaining - e);
        }
        exps[var] = 0;
    };
    rec(rec, 0, k);
    return out;
}

}  // namespace

std::vector<MuPowerRow> mu_power_table(int k_max, std::uint64_t seed) {
    if (k_max < 1) throw std::invalid_argument("k_max must be at least 1");
    RingPtr ring = RingSpec::dd_ring(2, 2, 2);
    DDParams params{2, 2, 2, 2, 2};
    std::vector<Polynomial> ambient = dd_ideal(params, ring);

    GroebnerBasis gb = buchberger(ambient);
    HilbertSeriesNumerator num = hilbert_numerator(initial_ideal(gb), ring->nvars());
    const int d = krull_dim(num);
    const std::uint64_t e_mu = ring_degree(num);

    std::vector<MuPowerRow> rows;
    for (int k = 1; k <= k_max; ++k) {
        MuPowerRow row;
        row.k = k;

        std::vector<Polynomial> gens = ambient;
        std::vector<Polynomial> mu_k = power_of_irrelevant(ring, k);
        for (const auto& g : mu_k) gens.push_back(g);
        row.length = colength(gens);

        std::uint64_t scale = 1;
        for (int c = 0; c < d; ++c) scale *= static_cast<std::uint64_t>(k);
        row.mult = scale * e_mu;
        if (k <= 3) {
            MultiplicityResult check = hs_multiplicity(
                mu_k, ambient, MultiplicityMethod::GenericReduction,
                seed + static_cast<std::uint64_t>(k));
            if (check.value != row.mult)
                throw std::runtime_error("scaling law and generic reduction disagree at k = " +
                                         std::to_string(k));
        }
        row.ratio = exact_ratio(row.mult, d, row.length);
        row.ratio_decimal = decimal_truncate3(row.ratio);
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_table_csv(const std::vector<MuPowerRow>& rows, std::ostream& out) {
    out << "k,length,mult,ratio_exact,ratio_decimal\n";
    for (const auto& row : rows)
        out << row.k << "," << row.length << "," << row.mult << "," << row.ratio.get_str() << ","
            << row.ratio_decimal << "\n";
}

}  // namespace toricdd
