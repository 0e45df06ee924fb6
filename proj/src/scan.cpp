#include "tame/scan.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "tame/cyclic_module.hpp"
#include "tame/errors.hpp"

namespace tame {

namespace {

long long as_ll(const BigInt& v) {
    if (!v.fits_slong_p()) throw InternalError("scan value exceeds the record range");
    return v.get_si();
}

const char* splitting_name(SplittingType s) {
    switch (s) {
        case SplittingType::SPLIT: return "SPLIT";
        case SplittingType::INERT: return "INERT";
        case SplittingType::RAMIFIED: return "RAMIFIED";
    }
    throw InternalError("unmapped splitting type");
}

// Power p^e as an exact rational denominator.
Rational inv_power(unsigned p, unsigned e) {
    BigInt d = 1;
    for (unsigned i = 0; i < e; ++i) d *= p;
    return Rational(1, d);
}

// Quotient of the sigma action by the line spanned by the capitulation image
// (sigma-stable since the image is sigma-fixed). Returns the action matrix on
// the quotient space.
FpMatrix quotient_action(const FpMatrix& S, const std::vector<unsigned>& capit) {
    const unsigned p = S.p();
    const std::size_t n = S.rows();
    // Complete capit to a basis, greedily adding standard vectors.
    std::vector<std::vector<uint32_t>> cols;
    cols.push_back(std::vector<uint32_t>(capit.begin(), capit.end()));
    for (std::size_t i = 0; i < n && cols.size() < n; ++i) {
        std::vector<uint32_t> e(n, 0);
        e[i] = 1;
        cols.push_back(e);
        FpMatrix trial(p, n, cols.size());
        for (std::size_t c = 0; c < cols.size(); ++c)
            for (std::size_t r = 0; r < n; ++r) trial.at(r, c) = cols[c][r];
        if (trial.rank() < cols.size()) cols.pop_back();
    }
    if (cols.size() != n) throw InternalError("capitulation line completion failed");
    FpMatrix T(p, n, n);
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t r = 0; r < n; ++r) T.at(r, c) = cols[c][r];
    auto inv = T.inverse();
    if (!inv.first) throw InternalError("capitulation basis change not invertible");
    FpMatrix M = inv.second * S * T;
    FpMatrix Qm(p, n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
        for (std::size_t c = 1; c < n; ++c) Qm.at(r - 1, c - 1) = M.at(r, c);
    return Qm;
}

}  // namespace

DensityBounds density_bounds(const QuadField& Q, const SelmerSpace& space,
                             unsigned capit_dim) {
    const unsigned p = Q.p();
    const unsigned r_F = Q.r_F();
    const unsigned delta_F = Q.delta_F();

    // [F(zeta_p):F]: trivial when the roots of unity are already present,
    // halved when F is the quadratic field inside the cyclotomic one.
    unsigned deg_zeta;
    if (delta_F) {
        deg_zeta = 1;
    } else {
        BigInt pstar = (p % 4 == 1) ? BigInt(p) : BigInt(-static_cast<long>(p));
        deg_zeta = (Q.D() == pstar) ? (p - 1) / 2 : (p - 1);
    }

    const unsigned mx = (r_F >= 2) ? r_F - 1 : 1;

    DensityBounds b;
    b.capit_dim = capit_dim;
    b.generic_bound = inv_power(p, r_F + 1 + delta_F + mx) / Rational(deg_zeta);
    b.ratio_bound = inv_power(p, mx);
    b.combined_bound = b.generic_bound * b.ratio_bound;

    BigInt gov = BigInt(deg_zeta) * p;
    for (unsigned i = 0; i < capit_dim; ++i) gov *= p;
    if (!gov.fits_ulong_p()) throw InternalError("governing index out of range");
    b.gov_index = gov.get_ui();

    const FpMatrix& S = space.sigma_matrix();
    if (space.dim() == 0 || (capit_dim == 1 && space.dim() == 1)) {
        b.sharp_ratio_bound = Rational(1);
    } else {
        FpMatrix Qact = (capit_dim == 0) ? S : quotient_action(S, space.capitulation());
        b.sharp_ratio_bound = ratio_psi(CyclicModule(p, Qact));
    }
    return b;
}

DensityBounds density_bounds(const QuadField& Q, const SelmerSpace& space) {
    const auto& capit = space.capitulation();
    bool nonzero = false;
    for (unsigned x : capit) nonzero = nonzero || (x != 0);
    return density_bounds(Q, space, nonzero ? 1u : 0u);
}

std::pair<double, double> wilson_interval(unsigned long k, unsigned long n, double z) {
    if (n == 0) return {0.0, 1.0};
    const double nn = static_cast<double>(n);
    const double ph = static_cast<double>(k) / nn;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / nn;
    const double center = (ph + z2 / (2.0 * nn)) / denom;
    const double half =
        z * std::sqrt(ph * (1.0 - ph) / nn + z2 / (4.0 * nn * nn)) / denom;
    double lo = center - half, hi = center + half;
    if (lo < 0.0) lo = 0.0;
    if (hi > 1.0) hi = 1.0;
    return {lo, hi};
}

std::string record_json(const ClassifiedPrime& c) {
    nlohmann::ordered_json j;
    j["q"] = as_ll(c.q);
    j["Nq"] = as_ll(c.Nq);
    j["split_F"] = splitting_name(c.split_F);
    if (c.classified) {
        j["class"] = c.class_principal ? "principal" : "nonprincipal";
        j["d"] = c.d;
    } else {
        j["class"] = nullptr;
        j["d"] = nullptr;
    }
    if (c.has_tau) j["tau"] = c.tau;
    j["verdict"] = verdict_name(c.verdict);
    j["rule"] = c.rule;
    return j.dump();
}

std::pair<std::vector<ClassifiedPrime>, ScanSummary> run_scan(const QuadField& Q,
                                                              const SelmerSpace& space,
                                                              const ScanConfig& cfg) {
    std::vector<std::uint64_t> primes = prime_sieve(cfg.bound);

    constexpr std::size_t kBlock = 256;
    const std::size_t nblocks = (primes.size() + kBlock - 1) / kBlock;
    std::vector<std::vector<ClassifiedPrime>> blocks(nblocks);

    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mu;

    auto worker = [&]() {
        for (;;) {
            if (failed.load(std::memory_order_relaxed)) return;
            const std::size_t b = next.fetch_add(1);
            if (b >= nblocks) return;
            try {
                const std::size_t lo = b * kBlock;
                const std::size_t hi = std::min(lo + kBlock, primes.size());
                std::vector<ClassifiedPrime> out;
                out.reserve(hi - lo);
                for (std::size_t i = lo; i < hi; ++i)
                    out.push_back(classify_prime(Q, space, BigInt(primes[i]), cfg.root,
                                                 cfg.tau_choice, cfg.char_scale));
                blocks[b] = std::move(out);
            } catch (...) {
                std::lock_guard<std::mutex> lk(error_mu);
                if (!error) error = std::current_exception();
                failed.store(true, std::memory_order_relaxed);
                return;
            }
        }
    };

    unsigned jobs = cfg.jobs ? cfg.jobs : 1;
    const std::size_t nthreads =
        std::min<std::size_t>(jobs, nblocks ? nblocks : 1);
    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nthreads);
        for (std::size_t t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (error) std::rethrow_exception(error);

    ScanSummary s;
    s.q_bound = cfg.bound;
    std::vector<ClassifiedPrime> records;
    records.reserve(primes.size());
    for (auto& blk : blocks)
        for (auto& c : blk) {
            ++s.total;
            ++s.verdict_counts[verdict_name(c.verdict)];
            if (c.classified && c.split_F == SplittingType::SPLIT) {
                ++s.split_rational;
                if (c.has_tau) {
                    ++s.split_step3_rational;
                    s.n_M += 2;
                    if (c.psi_ann) s.n_Mpp += 2;
                    if (c.tau_zero) s.n_tau0 += 2;
                }
            } else if (c.classified && c.has_tau) {
                ++s.inert_step3;
            }
            records.push_back(std::move(c));
        }
    return {std::move(records), s};
}

namespace {

void write_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    fs::path target(path);
    std::error_code ec;
    if (target.has_parent_path()) {
        fs::create_directories(target.parent_path(), ec);
        if (ec) throw IoError("cannot create directory " +
                              target.parent_path().string() + ": " + ec.message());
    }
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open " + tmp + " for writing");
        out << content;
        out.flush();
        if (!out) throw IoError("short write to " + tmp);
    }
    fs::rename(tmp, path, ec);
    if (ec) throw IoError("cannot move " + tmp + " into place: " + ec.message());
}

std::string format_ratio(unsigned long num, unsigned long den) {
    if (den == 0) return "NA";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", static_cast<double>(num) / den);
    return buf;
}

}  // namespace

void emit_reports(const std::vector<ClassifiedPrime>& records, const ScanSummary& summary,
                  const DensityBounds& bounds, const ScanConfig& cfg,
                  std::ostream& text_out) {
    if (!cfg.out_path.empty()) {
        std::string lines;
        for (const auto& c : records) {
            lines += record_json(c);
            lines += '\n';
        }
        write_atomic(cfg.out_path, lines);
    }

    if (!cfg.summary_path.empty()) {
        std::ostringstream csv;
        csv << "q_bound,total,n_M,n_Mpp,n_tau0,ratio,ratio_bound,gov_index\n";
        csv << summary.q_bound << ',' << summary.total << ',' << summary.n_M << ','
            << summary.n_Mpp << ',' << summary.n_tau0 << ','
            << format_ratio(summary.n_Mpp, summary.n_M) << ','
            << to_string(bounds.ratio_bound) << ',' << bounds.gov_index << '\n';
        write_atomic(cfg.summary_path, csv.str());
    }

    text_out << "scan D=" << to_string(cfg.disc) << " p=" << cfg.p
             << " bound=" << summary.q_bound << "\n";
    text_out << "  rational primes scanned: " << summary.total << "\n";
    text_out << "  verdicts:\n";
    for (const auto& [name, count] : summary.verdict_counts)
        text_out << "    " << name << ": " << count << "\n";
    text_out << "  degree-1 ideal tallies: n_M=" << summary.n_M
             << " n_Mpp=" << summary.n_Mpp << " n_tau0=" << summary.n_tau0 << "\n";
    text_out << "  inert step-3 primes (degree 2, density 0): " << summary.inert_step3
             << "\n";

    const auto density = wilson_interval(summary.split_step3_rational,
                                         summary.split_rational, kWilsonZ99);
    text_out << "  step-3 density among split primes: "
             << format_ratio(summary.split_step3_rational, summary.split_rational)
             << " (target 1/" << bounds.gov_index << ", Wilson99 [" << density.first
             << ", " << density.second << "])\n";
    const auto ratio =
        wilson_interval(summary.n_Mpp / 2, summary.n_M ? summary.n_M / 2 : 0, kWilsonZ99);
    text_out << "  ratio n_Mpp/n_M: " << format_ratio(summary.n_Mpp, summary.n_M)
             << " (generic bound " << to_string(bounds.ratio_bound) << ", sharp bound "
             << to_string(bounds.sharp_ratio_bound) << ", Wilson99 [" << ratio.first
             << ", " << ratio.second << "])\n";
    text_out << "  exact bounds: generic " << to_string(bounds.generic_bound)
             << ", combined " << to_string(bounds.combined_bound) << ", governing index "
             << bounds.gov_index << "\n";
    text_out << "  note: densities use natural-density counting up to the bound as a "
                "proxy for Dirichlet density\n";
}

}  // namespace tame
