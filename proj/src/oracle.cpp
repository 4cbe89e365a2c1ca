#include "plb/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace plb {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

void enumerate_rec(const PLInstance& inst, std::vector<int>& remaining, int depth, int m,
                   double acc, std::vector<int>& prefix, DiscreteDistribution& out) {
    double total = 0.0;
    for (int it : remaining) total += inst.theta(it);
    for (std::size_t idx = 0; idx < remaining.size(); ++idx) {
        const int w = remaining[idx];
        const double p = acc * inst.theta(w) / total;
        prefix.push_back(w);
        if (depth + 1 == m) {
            out.support.push_back(prefix);
            out.probs.push_back(p);
        } else {
            std::vector<int> rest;
            rest.reserve(remaining.size() - 1);
            for (std::size_t q = 0; q < remaining.size(); ++q) {
                if (q != idx) rest.push_back(remaining[q]);
            }
            enumerate_rec(inst, rest, depth + 1, m, p, prefix, out);
        }
        prefix.pop_back();
    }
}

}  // namespace

int DiscreteDistribution::find(const std::vector<int>& outcome) const {
    for (std::size_t i = 0; i < support.size(); ++i) {
        if (support[i] == outcome) return static_cast<int>(i);
    }
    return -1;
}

void DiscreteDistribution::check() const {
    require(support.size() == probs.size(), "DiscreteDistribution: support/probs length mismatch");
    double sum = 0.0;
    for (double p : probs) {
        require(p >= 0.0, "DiscreteDistribution: negative probability");
        sum += p;
    }
    require(std::abs(sum - 1.0) <= 1e-10, "DiscreteDistribution: probabilities must sum to 1");
}

DiscreteDistribution enumerate_top_m_distribution(const PLInstance& inst, const Subset& s, int m) {
    s.validate(inst.size());
    require(s.size() <= 8, "enumerate_top_m_distribution: subset too large");
    require(m >= 1 && m <= s.size(), "enumerate_top_m_distribution: need 1 <= m <= |S|");
    DiscreteDistribution out;
    std::vector<int> remaining = s.items;
    std::vector<int> prefix;
    enumerate_rec(inst, remaining, 0, m, 1.0, prefix, out);
    out.check();
    return out;
}

DiscreteDistribution empirical_top_m_distribution(const PLInstance& inst, const Subset& s, int m,
                                                  std::int64_t draws, Rng& rng) {
    require(draws > 0, "empirical_top_m_distribution: need draws > 0");
    DiscreteDistribution out = enumerate_top_m_distribution(inst, s, m);

    // Mixed-radix outcome codes so each draw is indexed in O(m).
    const std::size_t k = s.items.size();
    std::vector<int> local(static_cast<std::size_t>(inst.size()), -1);
    for (std::size_t i = 0; i < k; ++i) local[static_cast<std::size_t>(s.items[i])] = static_cast<int>(i);
    const auto encode = [&](const std::vector<int>& outcome) {
        std::size_t code = 0;
        for (int item : outcome) {
            code = code * k + static_cast<std::size_t>(local[static_cast<std::size_t>(item)]);
        }
        return code;
    };
    std::size_t table_size = 1;
    for (int i = 0; i < m; ++i) table_size *= k;
    std::vector<int> slot_of(table_size, -1);
    for (std::size_t i = 0; i < out.support.size(); ++i) {
        slot_of[encode(out.support[i])] = static_cast<int>(i);
    }

    std::vector<std::int64_t> hits(out.support.size(), 0);
    std::vector<double> wbuf;
    std::vector<int> ranked;
    for (std::int64_t d = 0; d < draws; ++d) {
        sample_top_m_into(inst, s.items, m, rng, wbuf, ranked);
        ++hits[static_cast<std::size_t>(slot_of[encode(ranked)])];
    }
    for (std::size_t i = 0; i < hits.size(); ++i) {
        out.probs[i] = static_cast<double>(hits[i]) / static_cast<double>(draws);
    }
    return out;
}

double tv_distance(const DiscreteDistribution& p, const DiscreteDistribution& q) {
    require(p.support == q.support, "tv_distance: support mismatch");
    double acc = 0.0;
    for (std::size_t i = 0; i < p.probs.size(); ++i) {
        acc += std::abs(p.probs[i] - q.probs[i]);
    }
    return 0.5 * acc;
}

double winner_kl(const PLInstance& a, const PLInstance& b, const Subset& s) {
    require(a.size() == b.size(), "winner_kl: instances must share the item universe");
    s.validate(a.size());
    double sum_a = 0.0;
    double sum_b = 0.0;
    for (int it : s.items) {
        sum_a += a.theta(it);
        sum_b += b.theta(it);
    }
    double kl = 0.0;
    for (int it : s.items) {
        const double pa = a.theta(it) / sum_a;
        const double pb = b.theta(it) / sum_b;
        kl += pa * std::log(pa / pb);
    }
    return kl;
}

LowerBoundFamily build_lower_bound_instances(int n, double eps, double theta) {
    require(n >= 2, "build_lower_bound_instances: need n >= 2");
    require(theta > 0.0 && std::isfinite(theta), "build_lower_bound_instances: bad scale");
    require(eps > 0.0 && eps <= 1.0 / std::sqrt(8.0),
            "build_lower_bound_instances: need 0 < eps <= 1/sqrt(8)");

    const double hi = theta * (0.5 + eps);
    const double lo = theta * (0.5 - eps);
    std::vector<double> base(static_cast<std::size_t>(n), lo);
    base[0] = hi;

    std::vector<PLInstance> alts;
    alts.reserve(static_cast<std::size_t>(n) - 1);
    for (int a = 1; a < n; ++a) {
        std::vector<double> v(static_cast<std::size_t>(n), theta * (0.5 - eps) * (0.5 - eps));
        v[0] = theta * (0.25 - eps * eps);
        v[static_cast<std::size_t>(a)] = theta * (0.5 + eps) * (0.5 + eps);
        alts.emplace_back(std::move(v));
    }
    return LowerBoundFamily{PLInstance(std::move(base)), std::move(alts)};
}

double lower_bound_kl_cap(int k, double eps) {
    const double ratio = (0.5 + eps) / (0.5 - eps);
    const double gap = ratio - 1.0 / ratio;
    return gap * gap / static_cast<double>(k);
}

}  // namespace plb
