#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "tame/bundle.hpp"
#include "tame/classify.hpp"
#include "tame/errors.hpp"
#include "tame/numeric.hpp"
#include "tame/quadfield.hpp"
#include "tame/scan.hpp"
#include "tame/selmer.hpp"

using namespace tame;
namespace fs = std::filesystem;

namespace {

struct Loaded {
    QuadField Q;
    SelmerSpace space;
};

Loaded& m23() {
    static Loaded l = [] {
        QuadField Q(BigInt(-23), 3);
        ValidatedBundle vb = validate_bundle(Q, load_bundle("fixtures/f1_m23.json"));
        return Loaded{Q, SelmerSpace(Q, vb)};
    }();
    return l;
}

ScanConfig config(std::uint64_t bound, const std::string& tag) {
    ScanConfig cfg;
    cfg.disc = -23;
    cfg.p = 3;
    cfg.bound = bound;
    cfg.bundle_path = "fixtures/f1_m23.json";
    cfg.out_path = "build/test_out/" + tag + ".jsonl";
    cfg.summary_path = "build/test_out/" + tag + ".csv";
    return cfg;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("single-prime records serialize with a fixed key order") {
    Loaded& l = m23();
    ClassifiedPrime c59 = classify_prime(l.Q, l.space, BigInt(59));
    CHECK(record_json(c59) ==
          R"({"q":59,"Nq":59,"split_F":"SPLIT","class":"principal","d":1,)"
          R"("verdict":"FINITE_D_AT_MOST_1","rule":"cyclic case"})");
    // Inert prime: norm q^2.
    ClassifiedPrime c5 = classify_prime(l.Q, l.space, BigInt(5));
    CHECK(record_json(c5) ==
          R"({"q":5,"Nq":25,"split_F":"INERT","class":"principal","d":1,)"
          R"("verdict":"FINITE_D_AT_MOST_1","rule":"cyclic case"})");
    // Skipped prime: null class and d, no tau (3 does split in this field).
    ClassifiedPrime c3 = classify_prime(l.Q, l.space, BigInt(3));
    CHECK(record_json(c3) ==
          R"({"q":3,"Nq":3,"split_F":"SPLIT","class":null,"d":null,)"
          R"("verdict":"SKIPPED_BAD","rule":"p-adic prime"})");
    // Ramified prime: the splitting field is reported faithfully.
    ClassifiedPrime c23 = classify_prime(l.Q, l.space, BigInt(23));
    CHECK(record_json(c23) ==
          R"({"q":23,"Nq":23,"split_F":"RAMIFIED","class":null,"d":null,)"
          R"("verdict":"SKIPPED_BAD","rule":"ramified in F"})");
    // Step-3 prime: tau array between d and verdict.
    ClassifiedPrime c307 = classify_prime(l.Q, l.space, BigInt(307));
    CHECK(record_json(c307) ==
          R"({"q":307,"Nq":307,"split_F":"SPLIT","class":"principal","d":2,)"
          R"("tau":[2,2],"verdict":"UNDECIDED","rule":"psi-annihilated Frobenius"})");
}

TEST_CASE("scan of the first hundred integers: census and reports") {
    Loaded& l = m23();
    ScanConfig cfg = config(100, "b100");
    auto [records, summary] = run_scan(l.Q, l.space, cfg);
    CHECK(records.size() == 25);  // pi(100)
    CHECK(summary.total == 25);
    CHECK(summary.q_bound == 100);
    // Ascending order, one record per sieve prime.
    auto primes = prime_sieve(100);
    for (size_t i = 0; i < records.size(); ++i) CHECK(records[i].q == primes[i]);
    // Verdict counts add up to the total.
    unsigned long sum = 0;
    for (const auto& [name, count] : summary.verdict_counts) sum += count;
    CHECK(sum == summary.total);
    // No split step-3 prime below 100 for this field: the smallest is 307.
    CHECK(summary.n_M == 0);
    CHECK(summary.n_Mpp == 0);
    CHECK(summary.n_tau0 == 0);
    CHECK(summary.split_step3_rational == 0);
    // Inert step-3 primes below 100: 19, 37, 43, 61, 67, 79 (psi-annihilated
    // rows) plus 83 and 97 (zero rows).
    CHECK(summary.inert_step3 == 8);
    // Reports: NA ratio when n_M = 0, exact header, pinned record line.
    DensityBounds bounds = density_bounds(l.Q, l.space);
    std::ostringstream text;
    emit_reports(records, summary, bounds, cfg, text);
    std::string csv = slurp(cfg.summary_path);
    CHECK(csv.substr(0, csv.find('\n')) ==
          "q_bound,total,n_M,n_Mpp,n_tau0,ratio,ratio_bound,gov_index");
    CHECK(csv.find("100,25,0,0,0,NA,1/3,18") != std::string::npos);
    std::string jsonl = slurp(cfg.out_path);
    CHECK(jsonl.find(R"({"q":59,"Nq":59,"split_F":"SPLIT","class":"principal","d":1,)"
                     R"("verdict":"FINITE_D_AT_MOST_1","rule":"cyclic case"})") !=
          std::string::npos);
    // One line per record.
    CHECK(std::count(jsonl.begin(), jsonl.end(), '\n') == 25);
    CHECK(text.str().find("bound=100") != std::string::npos);
    CHECK(text.str().find("n_M=0") != std::string::npos);
}

TEST_CASE("worker count does not change any output byte") {
    Loaded& l = m23();
    ScanConfig cfg1 = config(3000, "jobs1");
    cfg1.jobs = 1;
    ScanConfig cfg4 = config(3000, "jobs4");
    cfg4.jobs = 4;
    auto [r1, s1] = run_scan(l.Q, l.space, cfg1);
    auto [r4, s4] = run_scan(l.Q, l.space, cfg4);
    REQUIRE(r1.size() == r4.size());
    for (size_t i = 0; i < r1.size(); ++i) CHECK(record_json(r1[i]) == record_json(r4[i]));
    CHECK(s1.n_M == s4.n_M);
    CHECK(s1.n_Mpp == s4.n_Mpp);
    CHECK(s1.n_tau0 == s4.n_tau0);
    CHECK(s1.verdict_counts == s4.verdict_counts);
    DensityBounds bounds = density_bounds(l.Q, l.space);
    std::ostringstream t1, t4;
    emit_reports(r1, s1, bounds, cfg1, t1);
    emit_reports(r4, s4, bounds, cfg4, t4);
    CHECK(slurp(cfg1.out_path) == slurp(cfg4.out_path));
    CHECK(slurp(cfg1.summary_path) == slurp(cfg4.summary_path));
    CHECK(t1.str() == t4.str());
}

TEST_CASE("scan summaries nest: a longer scan extends a shorter one") {
    Loaded& l = m23();
    auto [r1, s1] = run_scan(l.Q, l.space, config(300, "nest1"));
    auto [r2, s2] = run_scan(l.Q, l.space, config(1300, "nest2"));
    REQUIRE(r1.size() <= r2.size());
    for (size_t i = 0; i < r1.size(); ++i) CHECK(record_json(r1[i]) == record_json(r2[i]));
    CHECK(s1.n_M <= s2.n_M);
    CHECK(s1.total <= s2.total);
    // The split step-3 primes of this field up to 1300 are 307, 997, 1231;
    // each contributes its conjugate pair of degree-1 ideals.
    CHECK(s1.n_M == 0);
    CHECK(s2.n_M == 6);
    CHECK(s2.n_Mpp == 6);  // all three rows are psi-annihilated (1231 is zero)
    CHECK(s2.n_tau0 == 2);
}

TEST_CASE("exact density targets for the base field") {
    Loaded& l = m23();
    DensityBounds b = density_bounds(l.Q, l.space);
    CHECK(b.capit_dim == 1);
    CHECK(b.gov_index == 18);
    CHECK(b.generic_bound == Rational(1, 18));
    CHECK(b.ratio_bound == Rational(1, 3));
    CHECK(b.combined_bound == Rational(1, 54));
    // The capitulation image spans the socle here, so the conditional ratio
    // over the quotient module is 1 (every coset is psi-annihilated).
    CHECK(b.sharp_ratio_bound == Rational(1, 1));
    // Forcing capit_dim = 0 recovers the unconditional module ratio 1/3.
    DensityBounds b0 = density_bounds(l.Q, l.space, 0);
    CHECK(b0.gov_index == 6);
    CHECK(b0.sharp_ratio_bound == Rational(1, 3));
}

TEST_CASE("Wilson interval: closed-form spot values and edge cases") {
    auto [lo, hi] = wilson_interval(5, 10, 1.96);
    CHECK(lo == doctest::Approx(0.2366).epsilon(0.001));
    CHECK(hi == doctest::Approx(0.7634).epsilon(0.001));
    auto [l0, h0] = wilson_interval(0, 0, 1.96);
    CHECK(l0 == 0.0);
    CHECK(h0 == 1.0);
    auto [lz, hz] = wilson_interval(0, 50, 2.0);
    CHECK(lz == 0.0);
    CHECK(hz > 0.0);
    auto [ln, hn] = wilson_interval(50, 50, 2.0);
    CHECK(ln < 1.0);
    CHECK(hn == 1.0);
    // Wider z, wider interval.
    auto [lw, hw] = wilson_interval(5, 10, kWilsonZ99);
    CHECK(lw < lo);
    CHECK(hw > hi);
}

TEST_CASE("report writing is atomic and creates parent directories") {
    Loaded& l = m23();
    ScanConfig cfg = config(100, "deep/nested/dir/out");
    fs::remove_all("build/test_out/deep");
    auto [records, summary] = run_scan(l.Q, l.space, cfg);
    DensityBounds bounds = density_bounds(l.Q, l.space);
    std::ostringstream text;
    emit_reports(records, summary, bounds, cfg, text);
    CHECK(fs::exists(cfg.out_path));
    CHECK(fs::exists(cfg.summary_path));
    // No stray temp files left behind.
    for (const auto& e : fs::directory_iterator("build/test_out/deep/nested/dir"))
        CHECK(e.path().extension() != ".tmp");
    // Unwritable target raises the I/O error kind.
    ScanConfig bad = cfg;
    bad.out_path = "build/test_out/not_a_dir.jsonl/x.jsonl";
    fs::remove_all("build/test_out/not_a_dir.jsonl");
    std::ofstream blocker("build/test_out/not_a_dir.jsonl");
    blocker << "file";
    blocker.close();
    std::ostringstream sink;
    CHECK_THROWS_AS(emit_reports(records, summary, bounds, bad, sink), IoError);
}

TEST_CASE("empty record list is handled") {
    Loaded& l = m23();
    ScanConfig cfg = config(100, "empty");
    std::vector<ClassifiedPrime> none;
    ScanSummary s;
    s.q_bound = 100;
    DensityBounds bounds = density_bounds(l.Q, l.space);
    std::ostringstream text;
    emit_reports(none, s, bounds, cfg, text);
    CHECK(slurp(cfg.out_path).empty());
    CHECK(slurp(cfg.summary_path).find("100,0,0,0,0,NA,1/3,18") != std::string::npos);
}
