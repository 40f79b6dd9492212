#include "coreduce/monoid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace coreduce {

bool is_relation(const std::vector<Vec>& weights, const Vec& coeffs) {
    if (weights.empty()) return true;
    Vec s(weights[0].size(), 0);
    for (std::size_t i = 0; i < weights.size(); ++i)
        for (std::size_t k = 0; k < s.size(); ++k) s[k] += coeffs[i] * weights[i][k];
    return is_zero(s);
}

bool dominated_by(const Vec& big, const Vec& small) {
    for (std::size_t i = 0; i < big.size(); ++i)
        if (small[i] > big[i]) return false;
    return true;
}

namespace {

// Shared completion loop; `stop` may end the search early on a generator.
template <class Stop>
std::vector<Vec> complete(const std::vector<Vec>& w, const MonoidLimits& limits, Stop stop) {
    const std::size_t n = w.size();
    std::vector<Vec> gens;
    if (n == 0) return gens;
    const std::size_t dim = w[0].size();
    // Ap is tracked incrementally alongside p.
    struct Node {
        Vec p;
        Vec ap;
    };
    std::vector<Node> frontier;
    for (std::size_t i = 0; i < n; ++i) {
        Vec p(n, 0);
        p[i] = 1;
        frontier.push_back({p, w[i]});
    }
    while (!frontier.empty()) {
        std::vector<Node> next;
        std::unordered_set<Vec, VecHash> seen;
        std::vector<Vec> found;
        for (auto& node : frontier)
            if (is_zero(node.ap)) found.push_back(node.p);
        std::sort(found.begin(), found.end(), std::greater<Vec>());
        for (auto& f : found) {
            gens.push_back(f);
            if (stop(gens.back())) return gens;
            if (gens.size() > limits.max_generators) throw LimitExceeded("Hilbert basis generator limit exceeded");
        }
        for (auto& node : frontier) {
            if (is_zero(node.ap)) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (dot(node.ap, w[j]) >= 0) continue;
                Vec q = node.p;
                ++q[j];
                bool pruned = false;
                for (const auto& g : gens)
                    if (dominated_by(q, g)) {
                        pruned = true;
                        break;
                    }
                if (pruned || !seen.insert(q).second) continue;
                Vec aq = node.ap;
                for (std::size_t k = 0; k < dim; ++k) aq[k] += w[j][k];
                next.push_back({std::move(q), std::move(aq)});
                if (next.size() > limits.max_frontier) throw LimitExceeded("Hilbert basis frontier limit exceeded");
            }
        }
        frontier = std::move(next);
    }
    return gens;
}

}  // namespace

HilbertBasis hilbert_basis(const std::vector<Vec>& weights, const MonoidLimits& limits) {
    for (const auto& w : weights)
        if (is_zero(w)) throw std::invalid_argument("hilbert_basis needs nonzero weights");
    HilbertBasis hb;
    hb.weights = weights;
    hb.generators = complete(weights, limits, [](const Vec&) { return false; });
    std::sort(hb.generators.begin(), hb.generators.end(), [](const Vec& a, const Vec& b) {
        Int sa = std::accumulate(a.begin(), a.end(), Int{0}), sb = std::accumulate(b.begin(), b.end(), Int{0});
        return sa != sb ? sa < sb : a > b;
    });
    return hb;
}

TorusVerdict is_torus_coreduced(const std::vector<Vec>& weights, const MonoidLimits& limits) {
    TorusVerdict v;
    for (const auto& w : weights)
        if (!is_zero(w)) v.weights.push_back(w);
    std::vector<Vec> distinct;
    std::vector<std::size_t> first_copy;
    {
        std::unordered_map<Vec, std::size_t, VecHash> idx;
        for (std::size_t i = 0; i < v.weights.size(); ++i)
            if (idx.emplace(v.weights[i], distinct.size()).second) {
                distinct.push_back(v.weights[i]);
                first_copy.push_back(i);
            }
    }
    auto has_big = [](const Vec& g) {
        return std::any_of(g.begin(), g.end(), [](Int c) { return c >= 2; });
    };
    auto gens = complete(distinct, limits, has_big);
    if (!gens.empty() && has_big(gens.back())) {
        v.coreduced = false;
        Vec lifted(v.weights.size(), 0);
        for (std::size_t i = 0; i < distinct.size(); ++i) lifted[first_copy[i]] = gens.back()[i];
        v.violating = lifted;
    }
    return v;
}

namespace {

struct Layered {
    // Per layer: state -> (predecessor state, index of the added weight).
    std::vector<std::unordered_map<Vec, std::pair<Vec, std::size_t>, VecHash>> layers;
};

}  // namespace

SumResult exists_sum(const std::vector<Vec>& weights, const Vec& target, Int count, SumMode mode,
                     std::size_t state_limit) {
    if (mode == SumMode::one_per_block) throw std::invalid_argument("use exists_sum_blocks for block mode");
    SumResult res;
    res.counts.assign(weights.size(), 0);
    if (count < 0) return res;
    const std::size_t dim = target.size();
    if (is_zero(target) && (count == 0 || mode == SumMode::at_most)) {
        res.feasible = true;
        return res;
    }
    std::vector<std::size_t> uniq;
    {
        std::unordered_set<Vec, VecHash> s;
        for (std::size_t i = 0; i < weights.size(); ++i)
            if (s.insert(weights[i]).second) uniq.push_back(i);
    }
    Vec lo(dim, 0), hi(dim, 0);
    for (std::size_t k = 0; k < dim; ++k) {
        bool first = true;
        for (auto i : uniq) {
            lo[k] = first ? weights[i][k] : std::min(lo[k], weights[i][k]);
            hi[k] = first ? weights[i][k] : std::max(hi[k], weights[i][k]);
            first = false;
        }
    }
    // A state s with r steps left can still reach the target.
    auto reachable = [&](const Vec& s, Int r) {
        for (std::size_t k = 0; k < dim; ++k) {
            Int need = target[k] - s[k];
            Int mn = r * lo[k], mx = r * hi[k];
            if (mode == SumMode::at_most) {
                mn = std::min<Int>(0, mn);
                mx = std::max<Int>(0, mx);
            }
            if (need < mn || need > mx) return false;
        }
        return true;
    };
    Layered L;
    L.layers.resize(count + 1);
    L.layers[0].emplace(Vec(dim, 0), std::make_pair(Vec{}, std::size_t(-1)));
    Int hit_layer = -1;
    for (Int d = 0; d < count && hit_layer < 0; ++d) {
        for (const auto& [s, pred] : L.layers[d]) {
            for (auto i : uniq) {
                Vec t = add(s, weights[i]);
                if (!reachable(t, count - d - 1)) continue;
                if (L.layers[d + 1].emplace(t, std::make_pair(s, i)).second) {
                    if (++res.states > state_limit) throw LimitExceeded("exists_sum state limit exceeded");
                }
            }
        }
        if (mode == SumMode::at_most && L.layers[d + 1].count(target)) hit_layer = d + 1;
    }
    if (hit_layer < 0 && L.layers[count].count(target)) hit_layer = count;
    if (hit_layer < 0) return res;
    res.feasible = true;
    Vec cur = target;
    for (Int d = hit_layer; d > 0; --d) {
        auto it = L.layers[d].find(cur);
        ++res.counts[it->second.second];
        cur = it->second.first;
    }
    return res;
}

SumResult exists_sum_blocks(const std::vector<std::vector<Vec>>& blocks, const Vec& target, std::size_t state_limit) {
    SumResult res;
    std::size_t total = 0;
    for (const auto& b : blocks) total += b.size();
    res.counts.assign(total, 0);
    const std::size_t dim = target.size();
    std::vector<std::unordered_map<Vec, std::pair<Vec, std::size_t>, VecHash>> layers(blocks.size() + 1);
    layers[0].emplace(Vec(dim, 0), std::make_pair(Vec{}, std::size_t(-1)));
    std::size_t base = 0;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        for (const auto& [s, pred] : layers[b])
            for (std::size_t i = 0; i < blocks[b].size(); ++i) {
                if (layers[b + 1].emplace(add(s, blocks[b][i]), std::make_pair(s, base + i)).second)
                    if (++res.states > state_limit) throw LimitExceeded("exists_sum state limit exceeded");
            }
        base += blocks[b].size();
    }
    auto it = layers.back().find(target);
    if (it == layers.back().end()) return res;
    res.feasible = true;
    Vec cur = target;
    for (std::size_t b = blocks.size(); b > 0; --b) {
        auto jt = layers[b].find(cur);
        ++res.counts[jt->second.second];
        cur = jt->second.first;
    }
    return res;
}

}  // namespace coreduce
