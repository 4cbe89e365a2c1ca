#pragma once

#include <cstdint>

namespace plb {

// Closed-form round budgets and elimination schedules shared by the
// algorithms, the benchmark's theory column, and the budget audits.
// All real-valued round counts are rounded up.

// --- Trace-the-Best ---------------------------------------------------
// Per-iteration rounds: ceil((2k / (m eps^2)) ln(2n / delta)); m = 1 for
// winner feedback.
std::int64_t trace_round_budget(int n, int k, int m, double eps, double delta);

// The loop consumes k - 1 fresh items per iteration after the initial
// set of k, so it runs 1 + ceil((n - k) / (k - 1)) times. This equals
// ceil(n / (k - 1)) except when (k - 1) divides (n - k) exactly.
int trace_iteration_count(int n, int k);

std::int64_t trace_total_budget(int n, int k, int m, double eps, double delta);

// --- Divide-and-Battle ------------------------------------------------
// Interior iteration l = 1, 2, ... uses eps_l = (eps/8) (3/4)^(l-1) and
// delta_l = delta / 2^(l+1); the padded final set is played once at
// (eps/2, delta/2). The per-iteration error/confidence grid telescopes to
// (eps, delta) overall.
struct Schedule {
    double eps_l;
    double delta_l;
};

Schedule divide_schedule(double eps, double delta, int iteration);
Schedule divide_final_schedule(double eps, double delta);

// Winner feedback: ceil((k / (2 eps_l^2)) ln(k / delta_l)).
std::int64_t divide_round_budget_wi(int k, const Schedule& sch);
// Top-m feedback: ceil((4k / (m eps_l^2)) ln(2k / delta_l)).
std::int64_t divide_round_budget_tr(int k, int m, const Schedule& sch);

// Total rounds are feedback-independent: the group sizes follow the
// deterministic recursion size -> floor(size/k) + size mod k.
std::int64_t divide_total_budget_wi(int n, int k, double eps, double delta);
std::int64_t divide_total_budget_tr(int n, int k, int m, double eps, double delta);

// --- Halving-Battle ---------------------------------------------------
// Iteration l uses eps_l = (eps/4) (3/4)^(l-1), delta_l = delta / 2^l and
// plays every group ceil((k / (2 eps_l^2)) ln(4 / delta_l)) rounds.
Schedule halving_schedule(double eps, double delta, int iteration);
std::int64_t halving_round_budget(int k, const Schedule& sch);

// Reference curve only: assumes each iteration retains exactly the upper
// half of every group. Actual rounds depend on the draws.
std::int64_t halving_budget_estimate(int n, int k, double eps, double delta);

}  // namespace plb
