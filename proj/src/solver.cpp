#include "bcast/solver.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>

#include "bcast/graph.hpp"

namespace bcast {

SolverLimits solver_limits() {
    SolverLimits limits;
    if (const char* env = std::getenv("BCAST_EXACT_LIMIT")) {
        int v = std::atoi(env);
        if (v > 0) limits = SolverLimits{v, v, v};
    }
    return limits;
}

namespace {

struct MisSearch {
    const std::vector<uint64_t>& adj;
    int n;
    long long nodes = 0;
    uint64_t best = 0;
    int best_size = 0;

    void run(uint64_t candidates, uint64_t current, int size) {
        ++nodes;
        if (size + __builtin_popcountll(candidates) <= best_size) return;
        if (candidates == 0) {
            best = current;
            best_size = size;
            return;
        }
        int v = __builtin_ctzll(candidates);
        uint64_t bit = uint64_t(1) << v;
        run(candidates & ~(adj[v] | bit), current | bit, size + 1);
        run(candidates & ~bit, current, size);
    }
};

}  // namespace

SolveResult max_independent_set(const CirculantGraph& g, const SolverLimits& limits) {
    if (g.n() > limits.alpha || g.n() > 64)
        throw size_limit_error("independence number: instance exceeds exact limit");
    std::vector<uint64_t> adj(g.n(), 0);
    for (int i = 0; i < g.n(); ++i)
        for (int j = 0; j < g.n(); ++j)
            if (i != j && g.adjacent(i, j)) adj[i] |= uint64_t(1) << j;
    MisSearch search{adj, g.n()};
    uint64_t all = (g.n() == 64) ? ~uint64_t(0) : ((uint64_t(1) << g.n()) - 1);
    search.run(all, 0, 0);
    std::vector<int> values(g.n(), 0);
    for (int i = 0; i < g.n(); ++i)
        if (search.best >> i & 1) values[i] = 1;
    return SolveResult{search.best_size, Broadcast(g, std::move(values)), search.nodes,
                       std::optional<int>(1)};
}

namespace {

struct BetaSearch {
    const DistanceOracle& oracle;
    int n;
    int max_value;
    long long nodes = 0;
    int best_cost = 0;
    std::vector<int> best_values;
    std::vector<int> values;
    std::vector<int> placed;  // positions with positive value, increasing

    // Consecutive broadcast vertices on the ring are more than max(f,f')
    // index steps apart, so the values plus one inter-vertex gap each must
    // fit in the part of the ring not already spanned by placed vertices.
    int remaining_bound(int idx) const {
        int span = placed.empty() ? 0 : placed.back() - placed.front();
        int loose = n - span - 1;
        int cap = (n - idx) * max_value;
        return std::max(0, std::min(loose, cap));
    }

    void run(int idx, int cost) {
        ++nodes;
        if (idx == n) {
            if (cost > best_cost) {
                best_cost = cost;
                best_values = values;
            }
            return;
        }
        if (cost + remaining_bound(idx) <= best_cost) return;
        values[idx] = 0;
        run(idx + 1, cost);
        for (int v = 1; v <= max_value; ++v) {
            bool ok = true;
            for (int p : placed) {
                if (oracle.distance(p, idx) <= std::max(values[p], v)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            values[idx] = v;
            placed.push_back(idx);
            run(idx + 1, cost + v);
            placed.pop_back();
        }
        values[idx] = 0;
    }
};

}  // namespace

SolveResult broadcast_independence(const CirculantGraph& g, std::optional<int> bound,
                                   const SolverLimits& limits) {
    if (bound && *bound < 1) throw std::invalid_argument("bound must be at least 1");
    int limit = (bound && *bound <= 2) ? limits.beta_bounded2 : limits.beta_unbounded;
    if (g.n() > limit)
        throw size_limit_error("broadcast independence: instance exceeds exact limit");
    DistanceOracle oracle(g);
    int max_value = oracle.diameter();
    if (bound) max_value = std::min(max_value, *bound);
    BetaSearch search{oracle, g.n(), max_value};
    search.values.assign(g.n(), 0);
    search.best_values.assign(g.n(), 0);
    search.run(0, 0);
    return SolveResult{search.best_cost, Broadcast(g, search.best_values), search.nodes,
                       bound};
}

bool verify_lower_bound_mu(const CirculantGraph& g) {
    int mu = antipodal_number(g);
    int diam = diameter(g);
    int beta = broadcast_independence(g).value;
    return beta >= mu * (diam - 1) && beta >= 2 * (diam - 1);
}

namespace {

void enumerate(const DistanceOracle& oracle, int bound, int idx, std::vector<int>& values,
               std::vector<int>& placed,
               const std::function<void(const std::vector<int>&)>& visit) {
    int n = oracle.graph().n();
    if (idx == n) {
        visit(values);
        return;
    }
    values[idx] = 0;
    enumerate(oracle, bound, idx + 1, values, placed, visit);
    int max_value = std::min(bound, oracle.diameter());
    for (int v = 1; v <= max_value; ++v) {
        bool ok = true;
        for (int p : placed) {
            if (oracle.distance(p, idx) <= std::max(values[p], v)) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        values[idx] = v;
        placed.push_back(idx);
        enumerate(oracle, bound, idx + 1, values, placed, visit);
        placed.pop_back();
    }
    values[idx] = 0;
}

}  // namespace

void for_each_bounded_independent_broadcast(
    const CirculantGraph& g, int bound,
    const std::function<void(const std::vector<int>&)>& visit) {
    DistanceOracle oracle(g);
    std::vector<int> values(g.n(), 0);
    std::vector<int> placed;
    enumerate(oracle, bound, 0, values, placed, visit);
}

}  // namespace bcast
