#include "plb/bench.hpp"

#include "plb/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace plb {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

double parse_double(const std::string& s) {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    require(pos == s.size(), "malformed number: " + s);
    return v;
}

}  // namespace

std::string to_string(AlgorithmId id) {
    switch (id) {
        case AlgorithmId::trace_wi: return "trace-wi";
        case AlgorithmId::divide_wi: return "divide-wi";
        case AlgorithmId::halving: return "halving";
        case AlgorithmId::trace_tr: return "trace-tr";
        case AlgorithmId::divide_tr: return "divide-tr";
    }
    return "?";
}

AlgorithmId algorithm_from_string(const std::string& s) {
    if (s == "trace-wi") return AlgorithmId::trace_wi;
    if (s == "divide-wi") return AlgorithmId::divide_wi;
    if (s == "halving") return AlgorithmId::halving;
    if (s == "trace-tr") return AlgorithmId::trace_tr;
    if (s == "divide-tr") return AlgorithmId::divide_tr;
    throw std::invalid_argument("unknown algorithm: " + s);
}

FeedbackMode feedback_for(AlgorithmId id) {
    switch (id) {
        case AlgorithmId::trace_tr:
        case AlgorithmId::divide_tr: return FeedbackMode::top_m;
        default: return FeedbackMode::winner;
    }
}

InstanceSpec InstanceSpec::parse(const std::string& text) {
    const std::size_t open = text.find('(');
    require(open != std::string::npos && text.back() == ')',
            "instance spec must look like name(arg,...): " + text);
    const std::string name = text.substr(0, open);
    const std::string body = text.substr(open + 1, text.size() - open - 2);

    std::vector<double> args;
    std::size_t begin = 0;
    while (begin <= body.size() && !body.empty()) {
        std::size_t comma = body.find(',', begin);
        if (comma == std::string::npos) comma = body.size();
        args.push_back(parse_double(body.substr(begin, comma - begin)));
        begin = comma + 1;
        if (comma == body.size()) break;
    }

    InstanceSpec spec;
    spec.params = std::move(args);
    if (name == "lower-bound") {
        require(spec.params.size() == 2, "lower-bound(theta,eps) takes 2 parameters");
        spec.kind = Kind::lower_bound;
    } else if (name == "one-good") {
        require(spec.params.size() == 2, "one-good(theta_best,theta_rest) takes 2 parameters");
        spec.kind = Kind::one_good;
    } else if (name == "geometric") {
        require(spec.params.size() == 1, "geometric(ratio) takes 1 parameter");
        spec.kind = Kind::geometric;
    } else if (name == "uniform-random") {
        require(spec.params.size() == 3, "uniform-random(lo,hi,seed) takes 3 parameters");
        spec.kind = Kind::uniform_random;
    } else if (name == "explicit") {
        require(!spec.params.empty(), "explicit(...) needs at least one score");
        spec.kind = Kind::explicit_scores;
    } else {
        throw std::invalid_argument("unknown instance family: " + name);
    }
    return spec;
}

std::string InstanceSpec::to_string() const {
    std::string name;
    switch (kind) {
        case Kind::lower_bound: name = "lower-bound"; break;
        case Kind::one_good: name = "one-good"; break;
        case Kind::geometric: name = "geometric"; break;
        case Kind::uniform_random: name = "uniform-random"; break;
        case Kind::explicit_scores: name = "explicit"; break;
    }
    std::string out = name + "(";
    for (std::size_t i = 0; i < params.size(); ++i) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%g", params[i]);
        if (i) out += ",";
        out += buf;
    }
    return out + ")";
}

PLInstance generate_instance(const InstanceSpec& spec, int n) {
    require(n >= 2, "generate_instance: need n >= 2");
    switch (spec.kind) {
        case InstanceSpec::Kind::lower_bound:
            return build_lower_bound_instances(n, spec.params[1], spec.params[0]).true_instance;
        case InstanceSpec::Kind::one_good: {
            std::vector<double> v(static_cast<std::size_t>(n), spec.params[1]);
            v[0] = spec.params[0];
            return PLInstance(std::move(v));
        }
        case InstanceSpec::Kind::geometric: {
            const double ratio = spec.params[0];
            require(ratio > 0.0, "geometric: ratio must be positive");
            std::vector<double> v(static_cast<std::size_t>(n));
            double cur = 1.0;
            for (int i = 0; i < n; ++i) {
                v[static_cast<std::size_t>(i)] = cur;
                cur *= ratio;
            }
            return PLInstance(std::move(v));
        }
        case InstanceSpec::Kind::uniform_random: {
            const double lo = spec.params[0];
            const double hi = spec.params[1];
            require(lo > 0.0 && hi >= lo, "uniform-random: need 0 < lo <= hi");
            Rng rng = make_rng(static_cast<std::uint64_t>(spec.params[2]));
            std::vector<double> v(static_cast<std::size_t>(n));
            for (double& x : v) x = lo + (hi - lo) * uniform_double(rng);
            return PLInstance(std::move(v));
        }
        case InstanceSpec::Kind::explicit_scores: {
            require(static_cast<int>(spec.params.size()) == n,
                    "explicit instance length disagrees with n");
            return PLInstance(spec.params);
        }
    }
    throw std::logic_error("unreachable");
}

PacParams ExperimentConfig::pac_params() const {
    PacParams p;
    p.n = n;
    p.k = k;
    p.m = feedback_for(algo) == FeedbackMode::winner ? 1 : m;
    p.eps = eps;
    p.delta = delta;
    return p;
}

void ExperimentConfig::validate() const {
    pac_params().validate();
    require(trials >= 1, "ExperimentConfig: need trials >= 1");
}

namespace {

AlgorithmResult dispatch(AlgorithmId id, BattleEnvironment& env, const PacParams& p, Rng& rng) {
    switch (id) {
        case AlgorithmId::trace_wi: return trace_the_best_wi(env, p, rng);
        case AlgorithmId::divide_wi: return divide_and_battle_wi(env, p, rng);
        case AlgorithmId::halving: return halving_battle(env, p, rng);
        case AlgorithmId::trace_tr: return trace_the_best_tr(env, p, rng);
        case AlgorithmId::divide_tr: return divide_and_battle_tr(env, p, rng);
    }
    throw std::logic_error("unreachable");
}

TrialRecord run_one(const ExperimentConfig& cfg, const PLInstance& instance, int index) {
    const std::uint64_t seed = cfg.base_seed ^ static_cast<std::uint64_t>(index);
    const auto [env_seed, alg_seed] = split_seed(seed);
    const PacParams p = cfg.pac_params();

    BattleEnvironment env(instance, feedback_for(cfg.algo), p.m, env_seed);
    Rng alg_rng = make_rng(alg_seed);

    const auto t0 = std::chrono::steady_clock::now();
    const AlgorithmResult result = dispatch(cfg.algo, env, p, alg_rng);
    const auto t1 = std::chrono::steady_clock::now();

    TrialRecord rec;
    rec.index = index;
    rec.seed = seed;
    rec.chosen = result.chosen;
    rec.eps_optimal = is_eps_optimal(instance, result.chosen, cfg.eps);
    rec.rounds_used = result.rounds_used;
    rec.wall_seconds = std::chrono::duration<double>(t1 - t0).count();
    return rec;
}

}  // namespace

std::vector<TrialRecord> run_trials(const ExperimentConfig& cfg, int threads) {
    cfg.validate();
    const PLInstance instance = generate_instance(cfg.instance, cfg.n);

    int nthreads = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
    nthreads = std::max(1, std::min(nthreads, cfg.trials));

    std::vector<TrialRecord> records(static_cast<std::size_t>(cfg.trials));
    std::atomic<int> next{0};
    auto worker = [&] {
        for (;;) {
            const int i = next.fetch_add(1);
            if (i >= cfg.trials) break;
            records[static_cast<std::size_t>(i)] = run_one(cfg, instance, i);
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(nthreads - 1));
    for (int t = 1; t < nthreads; ++t) pool.emplace_back(worker);
    worker();
    for (std::thread& t : pool) t.join();
    return records;
}

SummaryRow summarize(const ExperimentConfig& cfg, const std::vector<TrialRecord>& records) {
    require(!records.empty(), "summarize: no records");
    SummaryRow row;
    row.algo = to_string(cfg.algo);
    const FeedbackMode mode = feedback_for(cfg.algo);
    row.feedback = mode == FeedbackMode::winner ? "WI" : (cfg.m == cfg.k ? "FR" : "TR");
    row.n = cfg.n;
    row.k = cfg.k;
    row.m = cfg.pac_params().m;
    row.eps = cfg.eps;
    row.delta = cfg.delta;
    row.trials = static_cast<int>(records.size());
    row.base_seed = cfg.base_seed;

    std::int64_t successes = 0;
    double round_sum = 0.0;
    for (const TrialRecord& rec : records) {
        successes += rec.eps_optimal ? 1 : 0;
        round_sum += static_cast<double>(rec.rounds_used);
        row.max_rounds = std::max(row.max_rounds, rec.rounds_used);
    }
    const double trials = static_cast<double>(records.size());
    row.success_rate = static_cast<double>(successes) / trials;
    row.se = std::sqrt(row.success_rate * (1.0 - row.success_rate) / trials);
    row.mean_rounds = round_sum / trials;
    row.theory_budget = theory_budget(cfg.algo, cfg.n, cfg.k, row.m, cfg.eps, cfg.delta);

    const double pac_threshold =
        1.0 - cfg.delta - 3.0 * std::sqrt(cfg.delta * (1.0 - cfg.delta) / trials);
    row.pac_pass = row.success_rate >= pac_threshold;
    return row;
}

std::int64_t theory_budget(AlgorithmId id, int n, int k, int m, double eps, double delta) {
    switch (id) {
        case AlgorithmId::trace_wi: return trace_total_budget(n, k, 1, eps, delta);
        case AlgorithmId::trace_tr: return trace_total_budget(n, k, m, eps, delta);
        case AlgorithmId::divide_wi: return divide_total_budget_wi(n, k, eps, delta);
        case AlgorithmId::divide_tr: return divide_total_budget_tr(n, k, m, eps, delta);
        case AlgorithmId::halving: return halving_budget_estimate(n, k, eps, delta);
    }
    throw std::logic_error("unreachable");
}

SweepSpec SweepSpec::parse(const std::string& text) {
    const std::size_t eq = text.find('=');
    require(eq != std::string::npos, "sweep spec must look like var=v1,v2,...: " + text);
    SweepSpec spec;
    spec.variable = text.substr(0, eq);
    require(spec.variable == "n" || spec.variable == "k" || spec.variable == "m" ||
                spec.variable == "eps" || spec.variable == "delta",
            "sweep variable must be one of n,k,m,eps,delta");
    std::string body = text.substr(eq + 1);
    require(!body.empty(), "sweep needs at least one value");
    std::size_t begin = 0;
    for (;;) {
        std::size_t comma = body.find(',', begin);
        if (comma == std::string::npos) comma = body.size();
        spec.values.push_back(parse_double(body.substr(begin, comma - begin)));
        if (comma == body.size()) break;
        begin = comma + 1;
    }
    return spec;
}

std::vector<SummaryRow> scaling_sweep(const ExperimentConfig& base, const SweepSpec& sweep,
                                      int threads) {
    require(!sweep.values.empty(), "scaling_sweep: empty grid");
    std::vector<SummaryRow> rows;
    rows.reserve(sweep.values.size());
    for (double value : sweep.values) {
        ExperimentConfig cfg = base;
        if (sweep.variable == "eps") {
            cfg.eps = value;
        } else if (sweep.variable == "delta") {
            cfg.delta = value;
        } else {
            const int iv = static_cast<int>(value);
            require(static_cast<double>(iv) == value,
                    "sweep over " + sweep.variable + " needs integral values");
            if (sweep.variable == "n") cfg.n = iv;
            if (sweep.variable == "k") cfg.k = iv;
            if (sweep.variable == "m") cfg.m = iv;
        }
        rows.push_back(summarize(cfg, run_trials(cfg, threads)));
    }
    return rows;
}

const char* const kCsvHeader =
    "algo,feedback,n,k,m,eps,delta,trials,success_rate,se,mean_rounds,max_rounds,"
    "theory_budget,pac_check,base_seed";

void write_csv(std::ostream& os, const std::vector<SummaryRow>& rows) {
    os << kCsvHeader << "\n";
    char params[64];
    char stats[64];
    for (const SummaryRow& r : rows) {
        std::snprintf(params, sizeof(params), "%g,%g", r.eps, r.delta);
        std::snprintf(stats, sizeof(stats), "%.6f,%.6f,%.3f", r.success_rate, r.se, r.mean_rounds);
        os << r.algo << ',' << r.feedback << ',' << r.n << ',' << r.k << ',' << r.m << ','
           << params << ',' << r.trials << ',' << stats << ',' << r.max_rounds << ','
           << r.theory_budget << ',' << (r.pac_pass ? "PASS" : "FAIL") << ',' << r.base_seed
           << "\n";
    }
}

bool all_pac_pass(const std::vector<SummaryRow>& rows) {
    for (const SummaryRow& r : rows) {
        if (!r.pac_pass) return false;
    }
    return true;
}

}  // namespace plb
