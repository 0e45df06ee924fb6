#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tame/classify.hpp"
#include "tame/numeric.hpp"
#include "tame/quadfield.hpp"
#include "tame/selmer.hpp"

namespace tame {

struct ScanConfig {
    BigInt disc;
    unsigned p = 3;
    std::uint64_t bound = 0;
    std::string bundle_path;
    std::string out_path;      // JSON Lines, one record per prime
    std::string summary_path;  // single-row CSV
    unsigned jobs = 1;
    unsigned seed = 0;  // auxiliary-prime table offset, forwarded to SelmerSpace
    // Normalization knobs; every combination must produce identical verdicts.
    RootChoice root = RootChoice::CANONICAL;
    unsigned tau_choice = 0;
    unsigned char_scale = 1;
};

// Tallies over one scan. Degree-1 ideal counts weight SPLIT rational primes
// by 2 (conjugate ideals share the verdict); INERT step-3 primes are degree 2
// and tallied apart since they carry no density.
struct ScanSummary {
    std::uint64_t q_bound = 0;
    unsigned long total = 0;  // rational primes q <= B
    std::map<std::string, unsigned long> verdict_counts;
    unsigned long n_M = 0;     // degree-1 step-3 ideals (d = 2, split in F1)
    unsigned long n_Mpp = 0;   // subset with psi-annihilated Frobenius
    unsigned long n_tau0 = 0;  // subset with tau = 0
    unsigned long split_rational = 0;        // classified SPLIT rational primes
    unsigned long split_step3_rational = 0;  // SPLIT step-3 rational primes
    unsigned long inert_step3 = 0;           // degree-2 step-3 primes, kept apart
};

// Exact rational report fields for the density statements.
struct DensityBounds {
    Rational generic_bound;     // 1/([F(zeta_p):F] * p^{r_F+1+delta_F+max(r_F-1,1)})
    Rational ratio_bound;       // p^{-max(r_F-1,1)}
    Rational combined_bound;    // generic_bound * ratio_bound
    Rational sharp_ratio_bound; // ratio_psi of the space modulo the capitulation image
    unsigned long gov_index = 0;  // [F(zeta_p):F] * p * p^{capit_dim}
    unsigned capit_dim = 0;       // dimension of the capitulation image (0 or 1)
};

DensityBounds density_bounds(const QuadField& Q, const SelmerSpace& space,
                             unsigned capit_dim);
DensityBounds density_bounds(const QuadField& Q, const SelmerSpace& space);

// Wilson score interval for k successes in n trials at critical value z.
std::pair<double, double> wilson_interval(unsigned long k, unsigned long n, double z);

// z for a two-sided 99% interval.
inline constexpr double kWilsonZ99 = 2.5758293035489004;

// Classify every prime q <= bound. Records come back in ascending q; the
// result is identical for every jobs value (order-stable block merge). An
// internal-inconsistency error in any worker aborts the whole scan.
std::pair<std::vector<ClassifiedPrime>, ScanSummary> run_scan(const QuadField& Q,
                                                              const SelmerSpace& space,
                                                              const ScanConfig& cfg);

// One JSON record per prime, fixed key order, no whitespace.
std::string record_json(const ClassifiedPrime& c);

// Write the JSONL records and CSV summary atomically (temp file + rename) and
// a human-readable table to text_out. Safe on empty record lists.
void emit_reports(const std::vector<ClassifiedPrime>& records, const ScanSummary& summary,
                  const DensityBounds& bounds, const ScanConfig& cfg,
                  std::ostream& text_out);

}  // namespace tame
