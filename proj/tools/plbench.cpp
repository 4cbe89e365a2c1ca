// Benchmark CLI: seeded Monte-Carlo batches of PAC best-item
// identification runs over Plackett-Luce battling environments, with CSV
// summaries for scaling plots.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numeric>
#include <string>

#include "plb/bench.hpp"
#include "plb/oracle.hpp"
#include "plb/validation.hpp"

namespace {

struct CommonOpts {
    std::string algo = "trace-wi";
    int n = 20;
    int k = 5;
    int m = 1;
    double eps = 0.1;
    double delta = 0.1;
    int trials = 100;
    std::uint64_t seed = 0;
    std::string instance = "one-good(1,0.6)";
    std::string out;
    int threads = 0;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--algo", opts.algo, "trace-wi, divide-wi, halving, trace-tr or divide-tr");
    cmd->add_option("--n", opts.n, "number of items");
    cmd->add_option("--k", opts.k, "subset size per round");
    cmd->add_option("--m", opts.m, "ranking length for top-m feedback");
    cmd->add_option("--eps", opts.eps, "error tolerance in (0, 1/2]");
    cmd->add_option("--delta", opts.delta, "failure probability in (0, 1)");
    cmd->add_option("--trials", opts.trials, "number of seeded trials");
    cmd->add_option("--seed", opts.seed, "base seed; trial i uses base_seed XOR i");
    cmd->add_option("--instance", opts.instance,
                    "lower-bound(theta,eps) | one-good(best,rest) | geometric(ratio) | "
                    "uniform-random(lo,hi,seed) | explicit(t0,t1,...)");
    cmd->add_option("--out", opts.out, "output CSV path (stdout when omitted)");
    cmd->add_option("--threads", opts.threads, "worker threads (0 = hardware)");
    cmd->set_config("--config", "", "flat key=value config file; flags override");
}

plb::ExperimentConfig to_config(const CommonOpts& opts) {
    plb::ExperimentConfig cfg;
    cfg.algo = plb::algorithm_from_string(opts.algo);
    cfg.n = opts.n;
    cfg.k = opts.k;
    cfg.m = opts.m;
    cfg.eps = opts.eps;
    cfg.delta = opts.delta;
    cfg.instance = plb::InstanceSpec::parse(opts.instance);
    cfg.trials = opts.trials;
    cfg.base_seed = opts.seed;
    cfg.out = opts.out;
    return cfg;
}

int emit(const std::string& path, const std::vector<plb::SummaryRow>& rows) {
    if (path.empty()) {
        plb::write_csv(std::cout, rows);
    } else {
        std::ofstream os(path, std::ios::binary);
        if (!os) {
            std::cerr << "cannot open " << path << " for writing\n";
            return 1;
        }
        plb::write_csv(os, rows);
    }
    if (!plb::all_pac_pass(rows)) {
        std::cerr << "PAC bound check failed for at least one row\n";
        return 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"PAC best-item identification benchmark for Plackett-Luce battling bandits"};
    app.require_subcommand(1);

    CommonOpts run_opts;
    CLI::App* run = app.add_subcommand("run", "run one experiment configuration");
    add_common(run, run_opts);

    CommonOpts sweep_opts;
    std::string sweep_var;
    CLI::App* sweep = app.add_subcommand("sweep", "run a one-variable grid");
    add_common(sweep, sweep_opts);
    sweep->add_option("--sweep", sweep_var, "grid, e.g. n=20,40,80 or m=1,3,5")->required();

    std::uint64_t oracle_seed = 20260809;
    CLI::App* oracle = app.add_subcommand("oracle-check", "run the oracle validation suites");
    oracle->add_option("--seed", oracle_seed, "seed for the validation suites");

    CommonOpts sample_opts;
    std::int64_t sample_rounds = 20;
    CLI::App* sample = app.add_subcommand("sample", "dump raw feedback draws");
    add_common(sample, sample_opts);
    sample->add_option("--rounds", sample_rounds, "number of subset plays to dump");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run) {
            const plb::ExperimentConfig cfg = to_config(run_opts);
            const auto records = plb::run_trials(cfg, run_opts.threads);
            return emit(cfg.out, {plb::summarize(cfg, records)});
        }

        if (*sweep) {
            const plb::ExperimentConfig cfg = to_config(sweep_opts);
            const auto rows =
                plb::scaling_sweep(cfg, plb::SweepSpec::parse(sweep_var), sweep_opts.threads);
            return emit(cfg.out, rows);
        }

        if (*oracle) {
            int fails = 0;
            for (const plb::CheckResult& res : plb::run_oracle_checks(oracle_seed)) {
                std::printf("[%s] %s: %s\n", res.pass ? "PASS" : "FAIL", res.name.c_str(),
                            res.detail.c_str());
                fails += res.pass ? 0 : 1;
            }
            return fails == 0 ? 0 : 3;
        }

        if (*sample) {
            const plb::ExperimentConfig cfg = to_config(sample_opts);
            if (sample_rounds < 1) throw std::invalid_argument("need --rounds >= 1");
            const plb::PLInstance instance = plb::generate_instance(cfg.instance, cfg.n);
            const auto [env_seed, alg_seed] = plb::split_seed(cfg.base_seed);
            // m = 1 dumps winner draws, m > 1 top-m rankings.
            const auto mode =
                cfg.m == 1 ? plb::FeedbackMode::winner : plb::FeedbackMode::top_m;
            plb::BattleEnvironment env(instance, mode, cfg.m, env_seed);
            plb::Rng alg_rng = plb::make_rng(alg_seed);

            std::ostream* os = &std::cout;
            std::ofstream file;
            if (!cfg.out.empty()) {
                file.open(cfg.out, std::ios::binary);
                if (!file) {
                    std::cerr << "cannot open " << cfg.out << " for writing\n";
                    return 1;
                }
                os = &file;
            }
            *os << "round,subset,feedback\n";
            std::vector<int> pool(static_cast<std::size_t>(cfg.n));
            for (std::int64_t round = 1; round <= sample_rounds; ++round) {
                std::iota(pool.begin(), pool.end(), 0);
                plb::partial_shuffle(pool, static_cast<std::size_t>(cfg.k), alg_rng);
                plb::Subset s{std::vector<int>(pool.begin(), pool.begin() + cfg.k)};
                std::sort(s.items.begin(), s.items.end());
                const plb::TopMRanking& fb = env.play(s);
                *os << round << ',';
                for (std::size_t i = 0; i < s.items.size(); ++i) {
                    *os << (i ? ";" : "") << s.items[i];
                }
                *os << ',';
                for (std::size_t i = 0; i < fb.ranked.size(); ++i) {
                    *os << (i ? ";" : "") << fb.ranked[i];
                }
                *os << "\n";
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
