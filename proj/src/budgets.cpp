#include "plb/budgets.hpp"

#include <cmath>
#include <stdexcept>

namespace plb {

namespace {

std::int64_t ceil_rounds(double x) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw std::invalid_argument("round budget must be positive and finite");
    }
    return static_cast<std::int64_t>(std::ceil(x));
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

}  // namespace

std::int64_t trace_round_budget(int n, int k, int m, double eps, double delta) {
    return ceil_rounds((2.0 * k) / (m * eps * eps) * std::log(2.0 * n / delta));
}

int trace_iteration_count(int n, int k) {
    if (n == k) return 1;
    return 1 + ceil_div(n - k, k - 1);
}

std::int64_t trace_total_budget(int n, int k, int m, double eps, double delta) {
    return static_cast<std::int64_t>(trace_iteration_count(n, k)) *
           trace_round_budget(n, k, m, eps, delta);
}

Schedule divide_schedule(double eps, double delta, int iteration) {
    Schedule sch;
    sch.eps_l = (eps / 8.0) * std::pow(0.75, iteration - 1);
    sch.delta_l = delta / std::pow(2.0, iteration + 1);
    return sch;
}

Schedule divide_final_schedule(double eps, double delta) {
    return Schedule{eps / 2.0, delta / 2.0};
}

std::int64_t divide_round_budget_wi(int k, const Schedule& sch) {
    return ceil_rounds(k / (2.0 * sch.eps_l * sch.eps_l) * std::log(k / sch.delta_l));
}

std::int64_t divide_round_budget_tr(int k, int m, const Schedule& sch) {
    return ceil_rounds((4.0 * k) / (m * sch.eps_l * sch.eps_l) * std::log(2.0 * k / sch.delta_l));
}

namespace {

template <typename BudgetFn>
std::int64_t divide_total(int n, int k, double eps, double delta, BudgetFn&& round_budget) {
    std::int64_t total = 0;
    int full = n / k;
    int leftover = n % k;
    for (int phase = 1;; ++phase) {
        total += static_cast<std::int64_t>(full) * round_budget(divide_schedule(eps, delta, phase));
        const int size = full + leftover;
        if (size == 1) break;
        if (size <= k) {
            total += round_budget(divide_final_schedule(eps, delta));
            break;
        }
        full = size / k;
        leftover = size % k;
    }
    return total;
}

}  // namespace

std::int64_t divide_total_budget_wi(int n, int k, double eps, double delta) {
    return divide_total(n, k, eps, delta,
                        [k](const Schedule& sch) { return divide_round_budget_wi(k, sch); });
}

std::int64_t divide_total_budget_tr(int n, int k, int m, double eps, double delta) {
    return divide_total(n, k, eps, delta,
                        [k, m](const Schedule& sch) { return divide_round_budget_tr(k, m, sch); });
}

Schedule halving_schedule(double eps, double delta, int iteration) {
    Schedule sch;
    sch.eps_l = (eps / 4.0) * std::pow(0.75, iteration - 1);
    sch.delta_l = delta / std::pow(2.0, iteration);
    return sch;
}

std::int64_t halving_round_budget(int k, const Schedule& sch) {
    return ceil_rounds(k / (2.0 * sch.eps_l * sch.eps_l) * std::log(4.0 / sch.delta_l));
}

std::int64_t halving_budget_estimate(int n, int k, double eps, double delta) {
    std::int64_t total = 0;
    int size = n;
    for (int iteration = 1; size > 1; ++iteration) {
        const int groups = ceil_div(size, k);
        total += static_cast<std::int64_t>(groups) *
                 halving_round_budget(k, halving_schedule(eps, delta, iteration));
        const int full = size / k;
        const int rem = size % k;
        size = full * ceil_div(k, 2) + (rem > 0 ? ceil_div(rem, 2) : 0);
    }
    return total;
}

}  // namespace plb
