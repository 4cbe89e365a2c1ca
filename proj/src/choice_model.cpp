#include "plb/choice_model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace plb {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

double subset_score_sum(const PLInstance& inst, const std::vector<int>& items) {
    double total = 0.0;
    for (int it : items) total += inst.theta(it);
    return total;
}

}  // namespace

PLInstance::PLInstance(std::vector<double> thetas) : thetas_(std::move(thetas)) {
    require(thetas_.size() >= 2, "PLInstance: need at least 2 items");
    double best = 0.0;
    for (double t : thetas_) {
        require(std::isfinite(t) && t > 0.0, "PLInstance: scores must be positive and finite");
        best = std::max(best, t);
    }
    for (int i = 0; i < size(); ++i) {
        if (thetas_[static_cast<std::size_t>(i)] == best) best_.push_back(i);
    }
}

bool Subset::contains(int item) const {
    return std::find(items.begin(), items.end(), item) != items.end();
}

void Subset::validate(int n) const {
    require(!items.empty(), "Subset: must be non-empty");
    for (std::size_t a = 0; a < items.size(); ++a) {
        require(items[a] >= 0 && items[a] < n, "Subset: item index out of range");
        for (std::size_t b = a + 1; b < items.size(); ++b) {
            require(items[a] != items[b], "Subset: items must be distinct");
        }
    }
}

void TopMRanking::validate_for(const Subset& s) const {
    require(!ranked.empty() && size() <= s.size(), "TopMRanking: need 1 <= m <= |S|");
    for (std::size_t a = 0; a < ranked.size(); ++a) {
        require(s.contains(ranked[a]), "TopMRanking: entry not in played subset");
        for (std::size_t b = a + 1; b < ranked.size(); ++b) {
            require(ranked[a] != ranked[b], "TopMRanking: entries must be distinct");
        }
    }
}

CoinStream::CoinStream(double p_heads, std::uint64_t seed) : p_(p_heads), rng_(make_rng(seed)) {
    require(p_heads >= 0.0 && p_heads <= 1.0, "CoinStream: bias must be in [0, 1]");
}

CoinStream CoinStream::for_pair(const PLInstance& inst, int i, int j, std::uint64_t seed) {
    require(i != j, "CoinStream: need two distinct items");
    require(i >= 0 && i < inst.size() && j >= 0 && j < inst.size(), "CoinStream: item out of range");
    return CoinStream(inst.theta(i) / (inst.theta(i) + inst.theta(j)), seed);
}

bool CoinStream::next() {
    ++tosses_;
    return uniform_double(rng_) < p_;
}

double winner_prob(const PLInstance& inst, const Subset& s, int item) {
    s.validate(inst.size());
    require(s.contains(item), "winner_prob: item not in subset");
    return inst.theta(item) / subset_score_sum(inst, s.items);
}

double pairwise_prob(const PLInstance& inst, int i, int j) {
    require(i != j, "pairwise_prob: items must differ");
    require(i >= 0 && i < inst.size() && j >= 0 && j < inst.size(),
            "pairwise_prob: item out of range");
    return inst.theta(i) / (inst.theta(i) + inst.theta(j));
}

double top_m_prob(const PLInstance& inst, const Subset& s, const TopMRanking& r) {
    s.validate(inst.size());
    r.validate_for(s);
    double denom = subset_score_sum(inst, s.items);
    double p = 1.0;
    for (int item : r.ranked) {
        p *= inst.theta(item) / denom;
        denom -= inst.theta(item);
    }
    return p;
}

void sample_top_m_into(const PLInstance& inst, const std::vector<int>& items, int m, Rng& rng,
                       std::vector<double>& weight_buf, std::vector<int>& out_ranked) {
    const std::size_t k = items.size();
    weight_buf.resize(k);
    for (std::size_t i = 0; i < k; ++i) weight_buf[i] = inst.theta(items[i]);
    out_ranked.clear();
    for (int pos = 0; pos < m; ++pos) {
        double total = 0.0;
        for (std::size_t i = 0; i < k; ++i) {
            if (weight_buf[i] > 0.0) total += weight_buf[i];
        }
        const double u = uniform_double(rng) * total;
        double acc = 0.0;
        std::size_t pick = k;
        for (std::size_t i = 0; i < k; ++i) {
            if (weight_buf[i] <= 0.0) continue;
            acc += weight_buf[i];
            if (u < acc) {
                pick = i;
                break;
            }
        }
        if (pick == k) {  // u landed on the fp tail; take the last remaining item
            for (std::size_t i = k; i-- > 0;) {
                if (weight_buf[i] > 0.0) {
                    pick = i;
                    break;
                }
            }
        }
        out_ranked.push_back(items[pick]);
        weight_buf[pick] = -1.0;
    }
}

int sample_winner(const PLInstance& inst, const Subset& s, Rng& rng) {
    s.validate(inst.size());
    std::vector<double> wbuf;
    std::vector<int> out;
    sample_top_m_into(inst, s.items, 1, rng, wbuf, out);
    return out.front();
}

TopMRanking sample_top_m(const PLInstance& inst, const Subset& s, int m, Rng& rng) {
    s.validate(inst.size());
    require(m >= 1 && m <= s.size(), "sample_top_m: need 1 <= m <= |S|");
    std::vector<double> wbuf;
    TopMRanking r;
    sample_top_m_into(inst, s.items, m, rng, wbuf, r.ranked);
    return r;
}

int sample_winner_coupled(const PLInstance& inst, const Subset& s, int i, int j,
                          CoinStream& coins, Rng& rng) {
    s.validate(inst.size());
    require(i != j, "sample_winner_coupled: items must differ");
    require(s.contains(i) && s.contains(j), "sample_winner_coupled: pair not in subset");

    if (s.size() == 2) return coins.next() ? i : j;

    const double total = subset_score_sum(inst, s.items);
    const double pair_mass = inst.theta(i) + inst.theta(j);
    if (uniform_double(rng) * total < pair_mass) return coins.next() ? i : j;

    std::vector<int> rest;
    rest.reserve(s.items.size() - 2);
    for (int it : s.items) {
        if (it != i && it != j) rest.push_back(it);
    }
    std::vector<double> wbuf;
    std::vector<int> out;
    sample_top_m_into(inst, rest, 1, rng, wbuf, out);
    return out.front();
}

bool is_eps_optimal(const PLInstance& inst, int item, double eps) {
    require(item >= 0 && item < inst.size(), "is_eps_optimal: item out of range");
    require(eps > 0.0 && eps <= 0.5, "is_eps_optimal: need 0 < eps <= 1/2");
    const int best = inst.best_set().front();
    if (item == best || inst.theta(item) == inst.theta(best)) return true;
    return pairwise_prob(inst, item, best) > 0.5 - eps;
}

}  // namespace plb
