#include "plb/validation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>

#include "plb/bench.hpp"
#include "plb/budgets.hpp"
#include "plb/oracle.hpp"

namespace plb {

namespace {

std::string format(const char* fmt, ...) {
    char buf[512];
    va_list args;
    va_start(args, fmt);
    std::vsnprintf(buf, sizeof(buf), fmt, args);
    va_end(args);
    return std::string(buf);
}

PLInstance random_instance(int n, Rng& rng, double lo = 0.1, double hi = 1.0) {
    std::vector<double> v(static_cast<std::size_t>(n));
    for (double& x : v) x = lo + (hi - lo) * uniform_double(rng);
    return PLInstance(std::move(v));
}

std::vector<int> random_subset(int n, int size, Rng& rng) {
    std::vector<int> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 0);
    partial_shuffle(pool, static_cast<std::size_t>(size), rng);
    pool.resize(static_cast<std::size_t>(size));
    return pool;
}

std::int64_t ceil_div64(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

}  // namespace

CheckResult check_sampler_exactness(std::uint64_t seed) {
    Rng rng = make_rng(seed);
    const std::int64_t draws = 100000;
    double worst_tv = 0.0;
    std::string worst;
    for (int trial = 0; trial < 20; ++trial) {
        const PLInstance inst = random_instance(6, rng);
        for (int size = 1; size <= 5; ++size) {
            const Subset s{random_subset(6, size, rng)};
            for (int m = 1; m <= size; ++m) {
                Rng draw_rng = make_rng(rng());
                const DiscreteDistribution exact = enumerate_top_m_distribution(inst, s, m);
                const DiscreteDistribution emp =
                    empirical_top_m_distribution(inst, s, m, draws, draw_rng);
                const double tv = tv_distance(emp, exact);
                if (tv > worst_tv) {
                    worst_tv = tv;
                    worst = format("instance %d, |s|=%d, m=%d", trial, size, m);
                }
            }
        }
    }
    CheckResult res;
    res.name = "sampler-exactness";
    res.pass = worst_tv < 0.02;
    res.detail = format("max TV %.4f at %s over 300 cells (bound 0.02, 1e5 draws each)", worst_tv,
                        worst.c_str());
    return res;
}

CheckResult check_coupling_equivalence(std::uint64_t seed) {
    Rng master = make_rng(seed);
    double worst_tv = 0.0;
    double worst_cond = 0.0;
    const std::int64_t draws = 100000;

    struct Case {
        PLInstance inst;
        Subset s;
        int i;
        int j;
    };
    std::vector<Case> cases;
    cases.push_back({PLInstance({0.5, 0.3, 0.2}), Subset{0, 1, 2}, 0, 1});
    for (int size = 2; size <= 5; ++size) {
        PLInstance inst = random_instance(6, master);
        std::vector<int> items = random_subset(6, size, master);
        const int i = items[0];
        const int j = items[1];
        cases.push_back({std::move(inst), Subset{std::move(items)}, i, j});
    }

    for (const Case& c : cases) {
        const DiscreteDistribution exact = enumerate_top_m_distribution(c.inst, c.s, 1);
        std::vector<std::int64_t> hits(exact.support.size(), 0);
        CoinStream coins = CoinStream::for_pair(c.inst, c.i, c.j, master());
        Rng rng = make_rng(master());
        std::int64_t in_pair = 0;
        std::int64_t got_i = 0;
        for (std::int64_t d = 0; d < draws; ++d) {
            const int w = sample_winner_coupled(c.inst, c.s, c.i, c.j, coins, rng);
            for (std::size_t slot = 0; slot < exact.support.size(); ++slot) {
                if (exact.support[slot].front() == w) {
                    ++hits[slot];
                    break;
                }
            }
            if (w == c.i || w == c.j) {
                ++in_pair;
                got_i += (w == c.i) ? 1 : 0;
            }
        }
        DiscreteDistribution emp = exact;
        for (std::size_t slot = 0; slot < hits.size(); ++slot) {
            emp.probs[slot] = static_cast<double>(hits[slot]) / static_cast<double>(draws);
        }
        worst_tv = std::max(worst_tv, tv_distance(emp, exact));
        const double cond = static_cast<double>(got_i) / static_cast<double>(in_pair);
        worst_cond =
            std::max(worst_cond, std::abs(cond - pairwise_prob(c.inst, c.i, c.j)));
    }

    CheckResult res;
    res.name = "coupling-equivalence";
    res.pass = worst_tv < 0.02 && worst_cond < 0.01;
    res.detail = format("max TV %.4f (bound 0.02), max conditional error %.4f (bound 0.01)",
                        worst_tv, worst_cond);
    return res;
}

CheckResult check_pairwise_concentration(std::uint64_t seed) {
    Rng setup = make_rng(seed);
    const PLInstance inst = random_instance(6, setup);
    const int i = 0;
    const int j = 1;
    const double p_ij = pairwise_prob(inst, i, j);
    const double eta = 0.1;
    const std::int64_t v = 200;
    const int reps = 500;
    const int rounds = 2000;

    Rng rng = make_rng(setup());
    std::vector<int> others = {2, 3, 4, 5};
    std::vector<double> wbuf;
    std::vector<int> ranked;
    std::vector<int> items;

    int hits = 0;
    for (int rep = 0; rep < reps; ++rep) {
        std::int64_t n_i = 0;
        std::int64_t n_ij = 0;
        for (int t = 0; t < rounds; ++t) {
            const int size = 2 + static_cast<int>(uniform_below(rng, 5));  // 2..6
            items.clear();
            items.push_back(i);
            items.push_back(j);
            partial_shuffle(others, static_cast<std::size_t>(size - 2), rng);
            items.insert(items.end(), others.begin(), others.begin() + (size - 2));
            sample_top_m_into(inst, items, 1, rng, wbuf, ranked);
            const int w = ranked.front();
            n_i += (w == i) ? 1 : 0;
            n_ij += (w == i || w == j) ? 1 : 0;
        }
        const bool event = n_ij >= v && (static_cast<double>(n_i) / static_cast<double>(n_ij) -
                                         p_ij) >= eta;
        hits += event ? 1 : 0;
    }

    const double bound = std::exp(-2.0 * static_cast<double>(v) * eta * eta);
    const double slack = 3.0 * std::sqrt(bound * (1.0 - bound) / reps);
    const double freq = static_cast<double>(hits) / reps;

    CheckResult res;
    res.name = "pairwise-concentration";
    res.pass = freq <= bound + slack;
    res.detail = format("deviation frequency %.4f <= %.4f (= exp(-2 v eta^2) %.4f + 3 SE %.4f)",
                        freq, bound + slack, bound, slack);
    return res;
}

CheckResult check_rank_breaking_pigeonhole(std::uint64_t seed) {
    Rng rng = make_rng(seed);
    int violations = 0;
    for (int h = 0; h < 1000; ++h) {
        const int k = 2 + static_cast<int>(uniform_below(rng, 7));  // 2..8
        const int m = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(k)));
        const int t = 1 + static_cast<int>(uniform_below(rng, 50));
        const PLInstance inst = random_instance(k, rng);
        Subset s{random_subset(k, k, rng)};
        std::vector<TopMRanking> history;
        history.reserve(static_cast<std::size_t>(t));
        for (int round = 0; round < t; ++round) {
            history.push_back(sample_top_m(inst, s, m, rng));
        }
        const AppearanceCounts ac = appearance_counts(s, history);
        if (ac.max_q() < ceil_div64(static_cast<std::int64_t>(m) * t, k)) ++violations;
    }
    CheckResult res;
    res.name = "rank-breaking-pigeonhole";
    res.pass = violations == 0;
    res.detail = format("%d violations of max_i q_i >= ceil(mt/k) over 1000 histories", violations);
    return res;
}

CheckResult check_budget_determinism(std::uint64_t seed) {
    ExperimentConfig wi;
    wi.algo = AlgorithmId::trace_wi;
    wi.n = 20;
    wi.k = 5;
    wi.eps = 0.1;
    wi.delta = 0.05;
    wi.instance = InstanceSpec::parse("one-good(1,0.6)");
    wi.trials = 3;
    wi.base_seed = seed;

    ExperimentConfig tr = wi;
    tr.algo = AlgorithmId::trace_tr;
    tr.m = 5;

    bool ok = true;
    std::uint64_t wi_rounds = 0;
    std::uint64_t tr_rounds = 0;
    for (const TrialRecord& rec : run_trials(wi)) {
        wi_rounds = rec.rounds_used;
        ok = ok && rec.rounds_used == 33425;
    }
    for (const TrialRecord& rec : run_trials(tr)) {
        tr_rounds = rec.rounds_used;
        ok = ok && rec.rounds_used == 6685;
    }
    ok = ok && static_cast<std::int64_t>(wi_rounds) == trace_total_budget(20, 5, 1, 0.1, 0.05);
    ok = ok && static_cast<std::int64_t>(tr_rounds) == trace_total_budget(20, 5, 5, 0.1, 0.05);
    ok = ok && wi_rounds == 5 * tr_rounds;

    CheckResult res;
    res.name = "budget-determinism";
    res.pass = ok;
    res.detail = format("trace-wi %llu rounds (want 33425), trace-tr m=5 %llu (want 6685, 1/m of WI)",
                        static_cast<unsigned long long>(wi_rounds),
                        static_cast<unsigned long long>(tr_rounds));
    return res;
}

CheckResult check_pac_success(std::uint64_t seed, int threads, bool verbose) {
    struct Cell {
        AlgorithmId algo;
        int n;
        int m;
    };
    std::vector<Cell> cells;
    for (int n : {20, 50}) {
        cells.push_back({AlgorithmId::trace_wi, n, 1});
        cells.push_back({AlgorithmId::divide_wi, n, 1});
        cells.push_back({AlgorithmId::halving, n, 1});
        for (int m : {1, 3, 5}) {
            cells.push_back({AlgorithmId::trace_tr, n, m});
            cells.push_back({AlgorithmId::divide_tr, n, m});
        }
    }

    const int trials = 200;
    const double delta = 0.1;
    const double threshold = 1.0 - delta - 3.0 * std::sqrt(delta * (1.0 - delta) / trials);

    int passed = 0;
    double min_rate = 1.0;
    std::string min_cell = "-";
    for (std::size_t idx = 0; idx < cells.size(); ++idx) {
        const Cell& cell = cells[idx];
        ExperimentConfig cfg;
        cfg.algo = cell.algo;
        cfg.n = cell.n;
        cfg.k = 5;
        cfg.m = cell.m;
        cfg.eps = 0.1;
        cfg.delta = delta;
        cfg.instance = InstanceSpec::parse("one-good(1,0.6)");
        cfg.trials = trials;
        cfg.base_seed = SplitMix64(seed + 101 * idx).next();

        const SummaryRow row = summarize(cfg, run_trials(cfg, threads));
        if (verbose) {
            std::fprintf(stderr, "    %-9s n=%-3d m=%d  rate=%.3f  mean_rounds=%.0f\n",
                         row.algo.c_str(), row.n, row.m, row.success_rate, row.mean_rounds);
        }
        if (row.success_rate >= threshold) ++passed;
        if (row.success_rate < min_rate) {
            min_rate = row.success_rate;
            min_cell = format("%s n=%d m=%d", row.algo.c_str(), row.n, row.m);
        }
    }

    CheckResult res;
    res.name = "pac-success";
    res.pass = passed == static_cast<int>(cells.size());
    res.detail = format("%d/%zu cells with success rate >= %.4f; min %.3f at %s", passed,
                        cells.size(), threshold, min_rate, min_cell.c_str());
    return res;
}

CheckResult check_k_independence() {
    const int n = 100;
    const double eps = 0.1;
    const double delta = 0.1;

    std::uint64_t measured[2] = {0, 0};
    const int ks[2] = {2, 10};
    for (int idx = 0; idx < 2; ++idx) {
        ExperimentConfig cfg;
        cfg.algo = AlgorithmId::trace_wi;
        cfg.n = n;
        cfg.k = ks[idx];
        cfg.eps = eps;
        cfg.delta = delta;
        cfg.instance = InstanceSpec::parse("one-good(1,0.6)");
        cfg.trials = 1;
        cfg.base_seed = 7;
        measured[idx] = run_trials(cfg).front().rounds_used;
    }
    const double ratio = static_cast<double>(std::max(measured[0], measured[1])) /
                         static_cast<double>(std::min(measured[0], measured[1]));

    // The paper-style ceiling form ceil(n/(k-1)) * t for reference.
    const auto form = [&](int k) {
        return static_cast<std::int64_t>((n + k - 2) / (k - 1)) *
               trace_round_budget(n, k, 1, eps, delta);
    };
    const double form_ratio = static_cast<double>(std::max(form(2), form(10))) /
                              static_cast<double>(std::min(form(2), form(10)));

    CheckResult res;
    res.name = "k-independence";
    res.pass = ratio < 1.6;
    res.detail = format(
        "measured %llu (k=2) vs %llu (k=10): ratio %.3f, bound 1.6; ceil-form ratio %.3f",
        static_cast<unsigned long long>(measured[0]), static_cast<unsigned long long>(measured[1]),
        ratio, form_ratio);
    return res;
}

CheckResult check_kl_bound(std::uint64_t seed) {
    bool ok = true;
    std::string why;

    // Spot check: k=2, eps=0.1, theta=1.
    {
        const LowerBoundFamily fam = build_lower_bound_instances(2, 0.1, 1.0);
        const Subset s{0, 1};
        const double kl = winner_kl(fam.true_instance, fam.alternatives[0], s);
        const double cap = lower_bound_kl_cap(2, 0.1);
        if (std::abs(kl - 0.0810930216216329) > 1e-6 || kl > cap) {
            ok = false;
            why = format("spot value KL %.6f (want ~0.081093 <= cap %.6f)", kl, cap);
        }
    }

    Rng rng = make_rng(seed);
    int checked = 0;
    double max_excess = -1.0;
    for (int cfg = 0; cfg < 100 && ok; ++cfg) {
        const int k = 2 + static_cast<int>(uniform_below(rng, 7));  // 2..8
        const int n = k + static_cast<int>(uniform_below(rng, 4)); // k..k+3
        const double eps = 0.005 + uniform_double(rng) * (1.0 / std::sqrt(8.0) - 0.005);
        const double theta = 0.5 + 1.5 * uniform_double(rng);
        const int a = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n - 1)));
        const LowerBoundFamily fam = build_lower_bound_instances(n, eps, theta);
        const double cap = lower_bound_kl_cap(k, eps);

        // All k-subsets containing the perturbed arm.
        std::vector<int> rest;
        for (int i = 0; i < n; ++i) {
            if (i != a) rest.push_back(i);
        }
        std::vector<int> pick(static_cast<std::size_t>(k - 1));
        const std::function<void(std::size_t, int)> enumerate = [&](std::size_t from, int depth) {
            if (!ok) return;
            if (depth == k - 1) {
                std::vector<int> items(pick.begin(), pick.end());
                items.push_back(a);
                const double kl = winner_kl(fam.true_instance,
                                            fam.alternatives[static_cast<std::size_t>(a - 1)],
                                            Subset{std::move(items)});
                max_excess = std::max(max_excess, kl - cap);
                ++checked;
                if (kl > cap + 1e-9) {
                    ok = false;
                    why = format("KL %.9f exceeds cap %.9f (k=%d, eps=%.4f)", kl, cap, k, eps);
                }
                return;
            }
            for (std::size_t i = from; i < rest.size(); ++i) {
                pick[static_cast<std::size_t>(depth)] = rest[i];
                enumerate(i + 1, depth + 1);
            }
        };
        enumerate(0, 0);
    }

    CheckResult res;
    res.name = "kl-bound";
    res.pass = ok;
    res.detail = ok ? format("spot KL 0.0811 <= 0.3472; %d subset KLs within cap (max excess %.2e)",
                             checked, max_excess)
                    : why;
    return res;
}

CheckResult check_additive_transitivity(std::uint64_t seed) {
    Rng rng = make_rng(seed);
    int violations = 0;
    int applicable = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        double s0 = 0.1 + 0.9 * uniform_double(rng);
        double s1 = 0.1 + 0.9 * uniform_double(rng);
        double s2 = 0.1 + 0.9 * uniform_double(rng);
        double a = std::max({s0, s1, s2});
        double c = std::min({s0, s1, s2});
        double b = s0 + s1 + s2 - a - c;
        if (a == b || b == c) continue;

        const double e1 = 0.001 + uniform_double(rng) * 0.45;
        const double e2 = 0.001 + uniform_double(rng) * (0.499 - e1 - 0.001);

        const double p_ba = b / (b + a) - 0.5;
        const double p_cb = c / (c + b) - 0.5;
        const double p_ca = c / (c + a) - 0.5;
        if (p_ba > -e1 && p_cb > -e2) {
            ++applicable;
            if (!(p_ca > -(e1 + e2))) ++violations;
        }
    }
    CheckResult res;
    res.name = "additive-transitivity";
    res.pass = violations == 0;
    res.detail = format("%d violations over 1000 triples (%d with both premises holding)",
                        violations, applicable);
    return res;
}

CheckResult check_sweep_reproducibility() {
    ExperimentConfig base;
    base.algo = AlgorithmId::trace_wi;
    base.n = 10;
    base.k = 3;
    base.eps = 0.25;
    base.delta = 0.2;
    base.instance = InstanceSpec::parse("one-good(1,0.6)");
    base.trials = 5;
    base.base_seed = 20260809;
    const SweepSpec sweep = SweepSpec::parse("n=10,16");

    std::ostringstream first;
    write_csv(first, scaling_sweep(base, sweep));
    std::ostringstream second;
    write_csv(second, scaling_sweep(base, sweep));

    CheckResult res;
    res.name = "sweep-reproducibility";
    res.pass = !first.str().empty() && first.str() == second.str();
    res.detail = format("two sweep runs emitted %zu bytes, byte-identical: %s", first.str().size(),
                        res.pass ? "yes" : "no");
    return res;
}

CheckResult check_enumeration_equivalence(std::uint64_t seed) {
    Rng rng = make_rng(seed);
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 4 + static_cast<int>(uniform_below(rng, 4));  // 4..7
        const PLInstance inst = random_instance(n, rng);
        const int size = 2 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n - 1)));
        const Subset s{random_subset(n, size, rng)};
        const int m = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(size)));
        const DiscreteDistribution dist = enumerate_top_m_distribution(inst, s, m);
        for (std::size_t i = 0; i < dist.support.size(); ++i) {
            const double direct = top_m_prob(inst, s, TopMRanking{std::vector<int>(dist.support[i])});
            worst = std::max(worst, std::abs(direct - dist.probs[i]));
        }
    }
    CheckResult res;
    res.name = "enumeration-equivalence";
    res.pass = worst <= 1e-10;
    res.detail = format("max |product formula - winner marginalization| = %.2e (bound 1e-10)",
                        worst);
    return res;
}

std::vector<CheckResult> run_acceptance_checks(std::uint64_t seed, int threads) {
    std::vector<CheckResult> out;
    out.push_back(check_sampler_exactness(seed + 1));
    out.push_back(check_coupling_equivalence(seed + 2));
    out.push_back(check_pairwise_concentration(seed + 3));
    out.push_back(check_rank_breaking_pigeonhole(seed + 4));
    out.push_back(check_budget_determinism(seed + 5));
    out.push_back(check_pac_success(seed + 6, threads));
    out.push_back(check_k_independence());
    out.push_back(check_kl_bound(seed + 8));
    out.push_back(check_additive_transitivity(seed + 9));
    out.push_back(check_sweep_reproducibility());
    return out;
}

std::vector<CheckResult> run_oracle_checks(std::uint64_t seed) {
    std::vector<CheckResult> out;
    out.push_back(check_enumeration_equivalence(seed + 11));
    out.push_back(check_sampler_exactness(seed + 1));
    out.push_back(check_coupling_equivalence(seed + 2));
    out.push_back(check_kl_bound(seed + 8));
    return out;
}

}  // namespace plb
