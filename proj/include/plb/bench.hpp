#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "plb/choice_model.hpp"
#include "plb/environment.hpp"
#include "plb/pac_algorithms.hpp"

namespace plb {

enum class AlgorithmId { trace_wi, divide_wi, halving, trace_tr, divide_tr };

std::string to_string(AlgorithmId id);
AlgorithmId algorithm_from_string(const std::string& s);
FeedbackMode feedback_for(AlgorithmId id);

// Ground-truth generator: a named family plus parameters, or an explicit
// score vector. Deterministic given its own parameters (the random family
// carries its own seed), so every trial of a batch sees the same instance.
struct InstanceSpec {
    enum class Kind { lower_bound, one_good, geometric, uniform_random, explicit_scores };

    Kind kind = Kind::one_good;
    std::vector<double> params;  // see parse() for the per-family layout

    static InstanceSpec parse(const std::string& text);
    std::string to_string() const;
};

PLInstance generate_instance(const InstanceSpec& spec, int n);

struct ExperimentConfig {
    AlgorithmId algo = AlgorithmId::trace_wi;
    int n = 0;
    int k = 0;
    int m = 1;
    double eps = 0.0;
    double delta = 0.0;
    InstanceSpec instance;
    int trials = 1;
    std::uint64_t base_seed = 0;
    std::string out;

    PacParams pac_params() const;
    void validate() const;
};

struct TrialRecord {
    int index = 0;
    std::uint64_t seed = 0;
    int chosen = -1;
    bool eps_optimal = false;
    std::uint64_t rounds_used = 0;
    double wall_seconds = 0.0;
};

// Runs cfg.trials independent trials. Trial i derives its seed as
// base_seed XOR i and splits it into an environment stream and an
// algorithm stream, so records are reproducible and order-independent.
// threads <= 0 picks the hardware count.
std::vector<TrialRecord> run_trials(const ExperimentConfig& cfg, int threads = 0);

struct SummaryRow {
    std::string algo;
    std::string feedback;
    int n = 0;
    int k = 0;
    int m = 1;
    double eps = 0.0;
    double delta = 0.0;
    int trials = 0;
    double success_rate = 0.0;
    double se = 0.0;  // binomial standard error of the empirical rate
    double mean_rounds = 0.0;
    std::uint64_t max_rounds = 0;
    std::int64_t theory_budget = 0;
    bool pac_pass = false;  // success_rate >= 1 - delta - 3 sqrt(delta(1-delta)/trials)
    std::uint64_t base_seed = 0;
};

SummaryRow summarize(const ExperimentConfig& cfg, const std::vector<TrialRecord>& records);

// Closed-form round budget for the theory column (an estimate for
// Halving-Battle, exact for the others).
std::int64_t theory_budget(AlgorithmId id, int n, int k, int m, double eps, double delta);

struct SweepSpec {
    std::string variable;        // one of n, k, m, eps, delta
    std::vector<double> values;  // integral for n/k/m

    static SweepSpec parse(const std::string& text);  // "n=20,40,80"
};

std::vector<SummaryRow> scaling_sweep(const ExperimentConfig& base, const SweepSpec& sweep,
                                      int threads = 0);

extern const char* const kCsvHeader;

void write_csv(std::ostream& os, const std::vector<SummaryRow>& rows);
bool all_pac_pass(const std::vector<SummaryRow>& rows);

}  // namespace plb
