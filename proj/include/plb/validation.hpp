#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace plb {

// Self-contained verification suites shared by the acceptance runner and
// the CLI's oracle-check subcommand. Each check is deterministic given
// its seed and returns a one-line verdict.
struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// 1. Empirical top-m draws vs. the enumeration oracle (TV < 0.02 at 1e5
//    draws, every subset size <= 5, every m, 20 random instances).
CheckResult check_sampler_exactness(std::uint64_t seed);

// 2. Coupled winner sampler: TV < 0.02 vs. the enumeration oracle and
//    conditional i-vs-j frequency within 0.01 of theta_i/(theta_i+theta_j).
CheckResult check_coupling_equivalence(std::uint64_t seed);

// 3. Pairwise-estimate deviation event frequency stays below
//    exp(-2 v eta^2) + 3 SE at (eta, v) = (0.1, 200), 500 repetitions of
//    2000 winner rounds on random supersets of a fixed pair.
CheckResult check_pairwise_concentration(std::uint64_t seed);

// 4. Rank-breaking pigeonhole: max_i q_i >= ceil(m t / k) on 1000 random
//    histories, no exceptions.
CheckResult check_rank_breaking_pigeonhole(std::uint64_t seed);

// 5. Budget determinism: Trace-the-Best totals are seed-independent and
//    hit the closed form (33425 rounds at n=20, k=5, eps=0.1, delta=0.05;
//     6685 with top-5 feedback, a factor-m reduction).
CheckResult check_budget_determinism(std::uint64_t seed);

// 6. PAC success of all five algorithms on one-good(1, 0.6) instances at
//    eps = delta = 0.1: empirical rate >= 1 - delta - 3 sqrt(delta(1-delta)/200)
//    over 200 seeded trials per cell, (n,k) in {(20,5),(50,5)}, m in {1,3,k}.
CheckResult check_pac_success(std::uint64_t seed, int threads = 0, bool verbose = false);

// 7. k-independence: Trace-the-Best WI totals at n=100 for k=2 vs k=10
//    within a factor of 1.6.
CheckResult check_k_independence();

// 8. Exact winner KL of lower-bound instance pairs never exceeds
//    (1/k)(R - 1/R)^2 (+1e-9) on 100 random configurations; spot value
//    k=2, eps=0.1 -> KL ~ 0.0811 <= 0.3472.
CheckResult check_kl_bound(std::uint64_t seed);

// 9. Additive transitivity of shifted pairwise probabilities on 1000
//    random score triples, zero violations.
CheckResult check_additive_transitivity(std::uint64_t seed);

// 10. Two identical sweep invocations emit byte-identical CSV.
CheckResult check_sweep_reproducibility();

// Oracle-only equivalence: enumeration by winner marginalization agrees
// with the direct product formula to 1e-10.
CheckResult check_enumeration_equivalence(std::uint64_t seed);

std::vector<CheckResult> run_acceptance_checks(std::uint64_t seed, int threads = 0);
std::vector<CheckResult> run_oracle_checks(std::uint64_t seed);

}  // namespace plb
