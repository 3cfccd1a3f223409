#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "toricdd/hilbert.hpp"

namespace toricdd {

/// Renders a positive rational truncated (not rounded) to three significant
/// digits, trailing fractional zeros stripped: 49/64 -> "0.765".
std::string decimal_truncate3(const mpq_class& value);

/// Uniformly random monomial: the degree is uniform in {1..max_degree}, then
/// the monomial is uniform among all monomials of that degree (uniform over
/// exponent compositions, by combinatorial unranking).
Monomial random_monomial(int nvars, int max_degree, SplitMix64& rng);

/// Configuration of the randomized Lech-ratio sweep over S = R/I for the
/// 2 x 2 x 2 case: every sample ideal contains the twelfth power of each of
/// the eight variables plus 1..6 extra random monomials of degree <= 10.
struct ExperimentConfig {
    std::uint64_t master_seed = 0;
    int sample_count = 175;
    int extra_min = 1;
    int extra_max = 6;
    int extra_max_degree = 10;
    int pure_power_exp = 12;
    int jobs = 1;
};

struct SampleRecord {
    int index = 0;
    std::uint64_t seed = 0;  // per-sample stream seed
    std::vector<Monomial> extras;
    std::uint64_t length = 0;   // l(S/JS)
    std::uint64_t mult = 0;     // e(JS)
    mpq_class ratio;            // e / (d! * l), exact
    std::string ratio_decimal;  // 3-significant-digit truncation
    std::string error;          // nonempty when the sample failed
};

/// Per-sample generator draw (deterministic in (master_seed, index)).
std::vector<Monomial> sample_extras(const ExperimentConfig& config, int index);

/// The sample ideal: eight twelfth powers plus the drawn extras.
std::vector<Polynomial> build_sample_ideal(const ExperimentConfig& config, int index,
                                           const RingPtr& ring);

/// Runs the sweep: per sample, length by colength of I + J and multiplicity
/// by generic reduction over S. Samples are independent; jobs > 1 runs them
/// in parallel without changing any output (streams are index-keyed).
/// Per-sample failures land in the record's error field.
std::vector<SampleRecord> run_experiment(const ExperimentConfig& config);

/// RFC-4180 CSV: index,seed,k,extra_gens,length,mult,ratio_exact,ratio_decimal,error
void write_csv(const std::vector<SampleRecord>& records, std::ostream& out);

/// Scatter data: (length, ratio) and (number of extras, ratio), one pair per
/// line, whitespace separated.
void write_gnuplot(const std::vector<SampleRecord>& records, std::ostream& fig1,
                   std::ostream& fig2);

struct MuPowerRow {
    int k = 0;
    std::uint64_t length = 0;  // l(S/mu^k)
    std::uint64_t mult = 0;    // e(mu^k) = k^d e(mu)
    mpq_class ratio;           // e(mu^k) / (d! l(S/mu^k))
    std::string ratio_decimal;
};

/// The mu-power reference table for S(2,2,2): lengths by direct colength,
/// multiplicities by the exact scaling law e(mu^k) = k^d e(mu) with a
/// generic-reduction cross-check for k <= 3.
std::vector<MuPowerRow> mu_power_table(int k_max, std::uint64_t seed = 1);

void write_table_csv(const std::vector<MuPowerRow>& rows, std::ostream& out);

}  // namespace toricdd
