// Acceptance suite: runs the statistical and exact verification criteria
// end to end and prints one pass/fail line per criterion. A single
// criterion can be selected with --criterion N (used by ctest so each
// criterion reports separately).

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

#include "plb/validation.hpp"

namespace {

struct Criterion {
    int index;
    const char* label;
    plb::CheckResult (*run)(std::uint64_t seed, int threads);
};

plb::CheckResult run1(std::uint64_t s, int) { return plb::check_sampler_exactness(s + 1); }
plb::CheckResult run2(std::uint64_t s, int) { return plb::check_coupling_equivalence(s + 2); }
plb::CheckResult run3(std::uint64_t s, int) { return plb::check_pairwise_concentration(s + 3); }
plb::CheckResult run4(std::uint64_t s, int) { return plb::check_rank_breaking_pigeonhole(s + 4); }
plb::CheckResult run5(std::uint64_t s, int) { return plb::check_budget_determinism(s + 5); }
plb::CheckResult run6(std::uint64_t s, int threads) {
    return plb::check_pac_success(s + 6, threads, true);
}
plb::CheckResult run7(std::uint64_t, int) { return plb::check_k_independence(); }
plb::CheckResult run8(std::uint64_t s, int) { return plb::check_kl_bound(s + 8); }
plb::CheckResult run9(std::uint64_t s, int) { return plb::check_additive_transitivity(s + 9); }
plb::CheckResult run10(std::uint64_t, int) { return plb::check_sweep_reproducibility(); }

const Criterion kCriteria[] = {
    {1, "sampler exactness vs enumeration oracle", run1},
    {2, "coupled winner sampler equivalence", run2},
    {3, "pairwise estimate concentration", run3},
    {4, "rank-breaking pigeonhole", run4},
    {5, "budget determinism and 1/m reduction", run5},
    {6, "PAC success, all five algorithms", run6},
    {7, "k-independence of the WI budget", run7},
    {8, "winner KL bound on lower-bound pairs", run8},
    {9, "additive transitivity", run9},
    {10, "sweep reproducibility", run10},
};

}  // namespace

int main(int argc, char** argv) {
    std::uint64_t seed = 20260809;
    int threads = 0;
    int only = 0;

    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--criterion") && i + 1 < argc) {
            only = std::atoi(argv[++i]);
        } else if (!std::strcmp(argv[i], "--seed") && i + 1 < argc) {
            seed = std::strtoull(argv[++i], nullptr, 10);
        } else if (!std::strcmp(argv[i], "--threads") && i + 1 < argc) {
            threads = std::atoi(argv[++i]);
        } else {
            std::fprintf(stderr, "usage: %s [--criterion N] [--seed S] [--threads T]\n", argv[0]);
            return 64;
        }
    }

    int failures = 0;
    for (const Criterion& c : kCriteria) {
        if (only != 0 && c.index != only) continue;
        const plb::CheckResult res = c.run(seed, threads);
        std::printf("[%s] criterion %d (%s) %s: %s\n", res.pass ? "PASS" : "FAIL", c.index,
                    c.label, res.name.c_str(), res.detail.c_str());
        std::fflush(stdout);
        failures += res.pass ? 0 : 1;
    }
    return failures;
}
