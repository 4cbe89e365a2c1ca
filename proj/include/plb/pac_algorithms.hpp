#pragma once

#include <cstdint>
#include <vector>

#include "plb/budgets.hpp"
#include "plb/environment.hpp"
#include "plb/rank_breaking.hpp"
#include "plb/rng.hpp"

namespace plb {

struct PacParams {
    int n = 0;
    int k = 0;
    int m = 1;  // ranking length for top-m feedback; 1 under winner feedback
    double eps = 0.0;
    double delta = 0.0;

    void validate() const;
};

struct IterationLog {
    int iteration = 0;
    int running_winner = -1;  // Trace-the-Best variants
    int challenger = -1;      // Trace-the-Best variants
    std::vector<std::vector<int>> groups;
    std::int64_t rounds_per_group = 0;
    int survivors = -1;  // pool size entering the next iteration
};

struct AlgorithmResult {
    int chosen = -1;
    std::uint64_t rounds_used = 0;
    int iterations = 0;
    std::vector<IterationLog> trace;
};

// Keeps a running winner battling k-1 fresh challengers per iteration;
// replaces it only on an empirical margin above 1/2 + eps/2.
AlgorithmResult trace_the_best_wi(BattleEnvironment& env, const PacParams& p, Rng& alg_rng);
AlgorithmResult trace_the_best_tr(BattleEnvironment& env, const PacParams& p, Rng& alg_rng);

// Plays disjoint groups of k, keeps one survivor per group, recurses;
// a final padded set decides among the last survivors.
AlgorithmResult divide_and_battle_wi(BattleEnvironment& env, const PacParams& p, Rng& alg_rng);
AlgorithmResult divide_and_battle_tr(BattleEnvironment& env, const PacParams& p, Rng& alg_rng);

// Median elimination over groups of size at most k (subset sizes may be
// smaller than k); keeps every item scoring at least the group's lower
// median win count.
AlgorithmResult halving_battle(BattleEnvironment& env, const PacParams& p, Rng& alg_rng);

// Halving-Battle's retention threshold: the win count at position
// ceil(g/2) from the top. For a group of two this is the larger count.
std::int64_t lower_median_win_count(std::vector<std::int64_t> wins);

}  // namespace plb
