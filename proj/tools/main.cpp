// Command-line driver: prime scans, single-prime classification, exact density
// bounds, and a self-contained invariant suite.
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tame/bundle.hpp"
#include "tame/classify.hpp"
#include "tame/cyclic_module.hpp"
#include "tame/errors.hpp"
#include "tame/numeric.hpp"
#include "tame/pgroup.hpp"
#include "tame/quadfield.hpp"
#include "tame/scan.hpp"
#include "tame/selmer.hpp"

namespace {

struct CommonArgs {
    std::string disc;
    unsigned p = 3;
    std::string bundle_path;
    unsigned seed = 0;
};

void add_common(CLI::App* cmd, CommonArgs& a) {
    cmd->add_option("--disc", a.disc, "fundamental discriminant D < 0")->required();
    cmd->add_option("-p,--p", a.p, "odd prime p")->required();
    cmd->add_option("--bundle", a.bundle_path, "field data bundle (JSON)")->required();
    cmd->add_option("--seed", a.seed, "auxiliary-prime table offset");
}

struct Loaded {
    tame::QuadField Q;
    tame::SelmerSpace space;
};

Loaded load(const CommonArgs& a) {
    tame::QuadField Q(tame::parse_bigint(a.disc), a.p);
    tame::FieldDataBundle b = tame::load_bundle(a.bundle_path);
    tame::ValidatedBundle vb = tame::validate_bundle(Q, b);
    tame::SelmerSpace space(Q, vb, a.seed);
    return {std::move(Q), std::move(space)};
}

void check(bool ok, const std::string& label) {
    if (!ok) throw tame::InternalError("selftest failed: " + label);
    std::cout << "ok " << label << "\n";
}

// Built-in invariant suite: fixture-free checks of the arithmetic kernels.
void run_selftest() {
    using namespace tame;

    {
        QuadClassGroup g23(-23), g31(-31), g4(-4);
        check(g23.h() == 3 && g23.p_part_cyclic(3), "class group -23: h=3 cyclic");
        check(g31.h() == 3 && g31.p_part_cyclic(3), "class group -31: h=3 cyclic");
        check(g4.h() == 1, "class group -4: trivial");
    }
    {
        FinitePGroup h3 = heisenberg(3);
        check(!is_powerful(h3), "Heisenberg group is not powerful");
        check(frattini_rank(h3) == 2 && h3.exponent() == 3 && h3.order() == 27,
              "Heisenberg group: 2 generators, exponent 3, order 27");
        check(lower_p_central_series(h3) == std::vector<unsigned>({27, 3, 1}),
              "Heisenberg lower 3-central series 27,3,1");
        check(check_lemma34(h3), "Heisenberg obstruction quotient");
        check(is_powerful(abelian_group(3, {2, 1})), "abelian groups are powerful");
        // Order-27 modular group: a |-> a+1 and a |-> 4a on Z/9.
        std::vector<unsigned> add1(9), mul4(9);
        for (unsigned i = 0; i < 9; ++i) {
            add1[i] = (i + 1) % 9;
            mul4[i] = (4 * i) % 9;
        }
        FinitePGroup m27 = generate_permutation_group(3, {add1, mul4});
        check(m27.order() == 27 && is_powerful(m27), "modular group of order 27 powerful");
    }
    {
        CyclicModule y2 = block_module(3, JordanType{3, {0, 1, 0}});
        check(jordan_type(y2).t == std::vector<unsigned>({0, 1, 0}),
              "Jordan type of a single 2-block");
        check(jordan_type(dual_module(y2)) == jordan_type(y2), "dual preserves Jordan type");
        check(ratio_psi(y2) == Rational(1, 3), "psi-kernel ratio of a 2-block");
        check(tate_cohomology(block_module(3, JordanType{3, {0, 0, 1}}), 1) == 0,
              "free block has trivial H^1");
        check(tate_cohomology(y2, 1) == 1, "2-block has H^1 of order p");
        for (unsigned p : {3u, 5u, 7u, 11u})
            for (unsigned c : psi_coefficients(p))
                check(c % p != 0, "psi coefficient nonzero mod " + std::to_string(p));
    }
    {
        using V = std::vector<std::vector<unsigned>>;
        check(gras_munnier_exists(V{{1, 0}, {2, 0}}, 3), "dependency exists: colinear pair");
        check(!gras_munnier_exists(V{{1, 0}, {0, 1}}, 3), "no dependency: independent pair");
        check(gras_munnier_exists(V{{0, 0}}, 3), "dependency exists: zero vector");
        check(!gras_munnier_exists(V{{1, 0}}, 3), "no dependency: single nonzero");
        check(golod_shafarevich_infinite(5, 0, 0) && golod_shafarevich_infinite(4, 0, 0) &&
                  !golod_shafarevich_infinite(4, 1, 1),
              "generator/relation rank threshold");
    }
    {
        check(sqrt_mod(2, 7) == 3, "square root mod 7");
        check(inv_mod(5, 13) == 8, "inverse mod 13");
        check(is_prime(BigInt("2305843009213693951")), "Mersenne prime 2^61-1");
        auto w = wilson_interval(100, 1800, kWilsonZ99);
        check(w.first < 1.0 / 18 && 1.0 / 18 < w.second, "Wilson interval covers the rate");
    }
    std::cout << "selftest: all checks passed\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tame Galois group classifier for imaginary quadratic fields"};
    app.require_subcommand(1);

    CommonArgs scan_args, classify_args, bounds_args;
    tame::ScanConfig cfg;
    std::uint64_t bound = 0;
    std::string out_path = "out/scan.jsonl", summary_path = "out/summary.csv";
    unsigned jobs = 1, tau_choice = 0, char_scale = 1;
    bool conj_root = false;
    std::string prime_str;

    CLI::App* scan = app.add_subcommand("scan", "classify every prime up to a bound");
    add_common(scan, scan_args);
    scan->add_option("--bound", bound, "scan primes q <= bound (>= 100)")->required();
    scan->add_option("--out", out_path, "JSONL records path");
    scan->add_option("--summary", summary_path, "CSV summary path");
    scan->add_option("--jobs", jobs, "worker threads");
    scan->add_option("--tau-choice", tau_choice, "index of the degree-1 factor used");
    scan->add_option("--char-scale", char_scale, "character normalization unit");
    scan->add_flag("--conjugate-root", conj_root, "use the conjugate residue root");

    CLI::App* classify = app.add_subcommand("classify", "classify a single prime");
    add_common(classify, classify_args);
    classify->add_option("--prime", prime_str, "rational prime q")->required();
    classify->add_option("--tau-choice", tau_choice, "index of the degree-1 factor used");
    classify->add_option("--char-scale", char_scale, "character normalization unit");
    classify->add_flag("--conjugate-root", conj_root, "use the conjugate residue root");

    CLI::App* bounds_cmd = app.add_subcommand("bounds", "print the exact density bounds");
    add_common(bounds_cmd, bounds_args);

    app.add_subcommand("selftest", "run the built-in invariant suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (scan->parsed()) {
            if (bound < 100)
                throw tame::ConfigError("scan bound must be at least 100");
            Loaded L = load(scan_args);
            cfg.disc = tame::parse_bigint(scan_args.disc);
            cfg.p = scan_args.p;
            cfg.bound = bound;
            cfg.bundle_path = scan_args.bundle_path;
            cfg.out_path = out_path;
            cfg.summary_path = summary_path;
            cfg.jobs = jobs;
            cfg.seed = scan_args.seed;
            cfg.root = conj_root ? tame::RootChoice::CONJUGATE : tame::RootChoice::CANONICAL;
            cfg.tau_choice = tau_choice;
            cfg.char_scale = char_scale;
            auto [records, summary] = tame::run_scan(L.Q, L.space, cfg);
            tame::DensityBounds b = tame::density_bounds(L.Q, L.space);
            tame::emit_reports(records, summary, b, cfg, std::cout);
        } else if (classify->parsed()) {
            tame::BigInt q = tame::parse_bigint(prime_str);
            if (q < 2 || !tame::is_prime(q))
                throw tame::ConfigError("--prime must be a rational prime");
            Loaded L = load(classify_args);
            tame::ClassifiedPrime c = tame::classify_prime(
                L.Q, L.space, q,
                conj_root ? tame::RootChoice::CONJUGATE : tame::RootChoice::CANONICAL,
                tau_choice, char_scale);
            std::cout << tame::record_json(c) << "\n";
        } else if (bounds_cmd->parsed()) {
            Loaded L = load(bounds_args);
            tame::DensityBounds b = tame::density_bounds(L.Q, L.space);
            std::cout << "generic_bound " << tame::to_string(b.generic_bound) << "\n"
                      << "ratio_bound " << tame::to_string(b.ratio_bound) << "\n"
                      << "combined_bound " << tame::to_string(b.combined_bound) << "\n"
                      << "sharp_ratio_bound " << tame::to_string(b.sharp_ratio_bound)
                      << "\n"
                      << "gov_index " << b.gov_index << "\n"
                      << "capit_dim " << b.capit_dim << "\n";
        } else {
            run_selftest();
        }
    } catch (const tame::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.exit_code;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
