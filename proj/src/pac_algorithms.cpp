#include "plb/pac_algorithms.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace plb {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

void check_common(const BattleEnvironment& env, const PacParams& p) {
    p.validate();
    require(env.num_items() == p.n, "algorithm/environment item counts differ");
}

void check_wi(const BattleEnvironment& env, const PacParams& p) {
    check_common(env, p);
    require(env.mode() == FeedbackMode::winner, "environment mode mismatch (requires WI)");
}

void check_tr(const BattleEnvironment& env, const PacParams& p) {
    check_common(env, p);
    if (env.mode() == FeedbackMode::top_m) {
        require(env.ranking_size() == p.m, "environment ranking length differs from m");
    } else if (env.mode() == FeedbackMode::full_ranking) {
        require(p.m == p.k, "full-ranking environment requires m == k");
    } else {
        throw std::invalid_argument("environment mode mismatch (requires TR)");
    }
}

std::vector<int> iota_items(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    return v;
}

// Winner of a fixed group over t rounds by win count, smallest index on
// ties (the group is kept sorted).
int battle_group_wi(BattleEnvironment& env, const std::vector<int>& group, std::int64_t t) {
    Subset arena{group};
    std::vector<std::int64_t> wins(group.size(), 0);
    for (std::int64_t tau = 0; tau < t; ++tau) {
        const int winner = env.play(arena).ranked.front();
        for (std::size_t idx = 0; idx < group.size(); ++idx) {
            if (group[idx] == winner) {
                ++wins[idx];
                break;
            }
        }
    }
    std::size_t best = 0;
    for (std::size_t idx = 1; idx < group.size(); ++idx) {
        if (wins[idx] > wins[best]) best = idx;
    }
    return group[static_cast<std::size_t>(best)];
}

// Survivor of a fixed group under top-m feedback: first item (ascending)
// whose rank-broken estimate clears 1/2 - eps_l/2 against every other
// member, else a uniformly random member.
int battle_group_tr(BattleEnvironment& env, const std::vector<int>& group, std::int64_t t,
                    double eps_l, Rng& alg_rng) {
    Subset arena{group};
    PairwiseCounts counts(group);
    for (std::int64_t tau = 0; tau < t; ++tau) {
        rank_break_update(counts, arena, env.play(arena));
    }
    for (int i : group) {
        bool qualified = true;
        for (int j : group) {
            if (j == i) continue;
            if (empirical_pref(counts, i, j) + eps_l / 2.0 < 0.5) {
                qualified = false;
                break;
            }
        }
        if (qualified) return i;
    }
    return group[static_cast<std::size_t>(uniform_below(alg_rng, group.size()))];
}

AlgorithmResult trace_core(BattleEnvironment& env, const PacParams& p, Rng& rng, int m_budget) {
    const int n = p.n;
    const int k = p.k;
    const std::int64_t t = trace_round_budget(n, k, m_budget, p.eps, p.delta);
    const std::uint64_t start = env.rounds_played();
    AlgorithmResult res;

    int running = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n)));
    std::vector<int> pool;
    pool.reserve(static_cast<std::size_t>(n) - 1);
    for (int i = 0; i < n; ++i) {
        if (i != running) pool.push_back(i);
    }
    partial_shuffle(pool, static_cast<std::size_t>(k - 1), rng);
    std::vector<int> current(pool.begin(), pool.begin() + (k - 1));
    current.push_back(running);
    std::sort(current.begin(), current.end());
    std::vector<int> remaining(pool.begin() + (k - 1), pool.end());

    for (;;) {
        ++res.iterations;
        Subset arena{current};
        PairwiseCounts counts(current);
        for (std::int64_t tau = 0; tau < t; ++tau) {
            rank_break_update(counts, arena, env.play(arena));
        }
        const std::vector<int> leaders = copeland_winners(counts, arena);
        int challenger = leaders.front();
        for (int c : leaders) {
            if (c == running) continue;
            if (empirical_pref(counts, c, running) > 0.5 + p.eps / 2.0) {
                running = c;
                challenger = c;
                break;
            }
        }

        IterationLog log;
        log.iteration = res.iterations;
        log.running_winner = running;
        log.challenger = challenger;
        log.groups.push_back(current);
        log.rounds_per_group = t;
        log.survivors = static_cast<int>(remaining.size());
        res.trace.push_back(std::move(log));

        if (remaining.empty()) break;
        if (static_cast<int>(remaining.size()) < k - 1) {
            const std::size_t need = static_cast<std::size_t>(k - 1) - remaining.size();
            std::vector<int> fodder;
            fodder.reserve(current.size() - 1);
            for (int it : current) {
                if (it != running) fodder.push_back(it);
            }
            partial_shuffle(fodder, need, rng);
            current.assign(remaining.begin(), remaining.end());
            current.insert(current.end(), fodder.begin(), fodder.begin() + static_cast<long>(need));
            current.push_back(running);
            remaining.clear();
        } else {
            partial_shuffle(remaining, static_cast<std::size_t>(k - 1), rng);
            current.assign(remaining.begin(), remaining.begin() + (k - 1));
            current.push_back(running);
            remaining.erase(remaining.begin(), remaining.begin() + (k - 1));
        }
        std::sort(current.begin(), current.end());
    }

    res.chosen = running;
    res.rounds_used = env.rounds_played() - start;
    return res;
}

AlgorithmResult divide_core(BattleEnvironment& env, const PacParams& p, Rng& rng, bool top_m) {
    const int n = p.n;
    const int k = p.k;
    const std::uint64_t start = env.rounds_played();
    AlgorithmResult res;

    std::vector<int> pool = iota_items(n);
    fisher_yates_shuffle(pool, rng);

    for (int phase = 1;; ++phase) {
        ++res.iterations;
        const int full = static_cast<int>(pool.size()) / k;
        const Schedule sch = divide_schedule(p.eps, p.delta, phase);
        const std::int64_t t =
            top_m ? divide_round_budget_tr(k, p.m, sch) : divide_round_budget_wi(k, sch);

        IterationLog log;
        log.iteration = res.iterations;
        log.rounds_per_group = t;

        std::vector<int> next;
        for (int g = 0; g < full; ++g) {
            std::vector<int> group(pool.begin() + static_cast<long>(g) * k,
                                   pool.begin() + static_cast<long>(g + 1) * k);
            std::sort(group.begin(), group.end());
            log.groups.push_back(group);
            next.push_back(top_m ? battle_group_tr(env, group, t, sch.eps_l, rng)
                                 : battle_group_wi(env, group, t));
        }
        next.insert(next.end(), pool.begin() + static_cast<long>(full) * k, pool.end());
        pool = std::move(next);

        log.survivors = static_cast<int>(pool.size());
        res.trace.push_back(std::move(log));

        if (pool.size() == 1) {
            res.chosen = pool.front();
            break;
        }
        if (static_cast<int>(pool.size()) <= k) {
            std::vector<int> outside;
            outside.reserve(static_cast<std::size_t>(n) - pool.size());
            for (int i = 0; i < n; ++i) {
                if (std::find(pool.begin(), pool.end(), i) == pool.end()) outside.push_back(i);
            }
            const std::size_t need = static_cast<std::size_t>(k) - pool.size();
            partial_shuffle(outside, need, rng);
            std::vector<int> group = pool;
            group.insert(group.end(), outside.begin(), outside.begin() + static_cast<long>(need));
            std::sort(group.begin(), group.end());

            const Schedule fin = divide_final_schedule(p.eps, p.delta);
            const std::int64_t tf =
                top_m ? divide_round_budget_tr(k, p.m, fin) : divide_round_budget_wi(k, fin);
            ++res.iterations;
            res.chosen = top_m ? battle_group_tr(env, group, tf, fin.eps_l, rng)
                               : battle_group_wi(env, group, tf);

            IterationLog fin_log;
            fin_log.iteration = res.iterations;
            fin_log.groups.push_back(group);
            fin_log.rounds_per_group = tf;
            fin_log.survivors = 1;
            res.trace.push_back(std::move(fin_log));
            break;
        }
        fisher_yates_shuffle(pool, rng);
    }

    res.rounds_used = env.rounds_played() - start;
    return res;
}

}  // namespace

void PacParams::validate() const {
    require(n >= 2, "PacParams: need n >= 2");
    require(k >= 2 && k <= n, "PacParams: need 2 <= k <= n");
    require(m >= 1 && m <= k, "PacParams: need 1 <= m <= k");
    require(eps > 0.0 && eps <= 0.5, "PacParams: need 0 < eps <= 1/2");
    require(delta > 0.0 && delta < 1.0, "PacParams: need 0 < delta < 1");
}

AlgorithmResult trace_the_best_wi(BattleEnvironment& env, const PacParams& p, Rng& alg_rng) {
    check_wi(env, p);
    return trace_core(env, p, alg_rng, 1);
}

AlgorithmResult trace_the_best_tr(BattleEnvironment& env, const PacParams& p, Rng& alg_rng) {
    check_tr(env, p);
    return trace_core(env, p, alg_rng, p.m);
}

AlgorithmResult divide_and_battle_wi(BattleEnvironment& env, const PacParams& p, Rng& alg_rng) {
    check_wi(env, p);
    return divide_core(env, p, alg_rng, false);
}

AlgorithmResult divide_and_battle_tr(BattleEnvironment& env, const PacParams& p, Rng& alg_rng) {
    check_tr(env, p);
    return divide_core(env, p, alg_rng, true);
}

AlgorithmResult halving_battle(BattleEnvironment& env, const PacParams& p, Rng& alg_rng) {
    check_wi(env, p);
    const int n = p.n;
    const int k = p.k;
    const std::uint64_t start = env.rounds_played();
    AlgorithmResult res;

    std::vector<int> pool = iota_items(n);
    fisher_yates_shuffle(pool, alg_rng);

    for (int iteration = 1;; ++iteration) {
        ++res.iterations;
        const Schedule sch = halving_schedule(p.eps, p.delta, iteration);
        const std::int64_t t = halving_round_budget(k, sch);

        IterationLog log;
        log.iteration = iteration;
        log.rounds_per_group = t;

        std::vector<int> next;
        const std::size_t sz = pool.size();
        for (std::size_t lo = 0; lo < sz; lo += static_cast<std::size_t>(k)) {
            const std::size_t hi = std::min(sz, lo + static_cast<std::size_t>(k));
            std::vector<int> group(pool.begin() + static_cast<long>(lo),
                                   pool.begin() + static_cast<long>(hi));
            std::sort(group.begin(), group.end());
            log.groups.push_back(group);

            Subset arena{group};
            std::vector<std::int64_t> wins(group.size(), 0);
            for (std::int64_t tau = 0; tau < t; ++tau) {
                const int winner = env.play(arena).ranked.front();
                for (std::size_t idx = 0; idx < group.size(); ++idx) {
                    if (group[idx] == winner) {
                        ++wins[idx];
                        break;
                    }
                }
            }
            // lower median: value at position ceil(|G|/2) counting from the top
            std::vector<std::int64_t> order = wins;
            std::sort(order.begin(), order.end(), std::greater<std::int64_t>());
            const std::int64_t median = order[(group.size() + 1) / 2 - 1];
            for (std::size_t idx = 0; idx < group.size(); ++idx) {
                if (wins[idx] >= median) next.push_back(group[idx]);
            }
        }
        pool = std::move(next);

        log.survivors = static_cast<int>(pool.size());
        res.trace.push_back(std::move(log));

        if (pool.size() == 1) {
            res.chosen = pool.front();
            break;
        }
        fisher_yates_shuffle(pool, alg_rng);
    }

    res.rounds_used = env.rounds_played() - start;
    return res;
}

}  // namespace plb
