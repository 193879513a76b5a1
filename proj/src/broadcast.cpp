#include "bcast/broadcast.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace bcast {

int cost(const Broadcast& b) {
    return std::accumulate(b.values.begin(), b.values.end(), 0);
}

bool is_valid_broadcast(const Broadcast& b, const DistanceOracle& oracle) {
    for (int v : b.values)
        if (v < 0 || v > oracle.diameter()) return false;
    return true;
}

bool is_valid_broadcast(const Broadcast& b) {
    return is_valid_broadcast(b, DistanceOracle(b.graph));
}

bool is_independent(const Broadcast& b, const DistanceOracle& oracle) {
    if (!is_valid_broadcast(b, oracle))
        throw std::invalid_argument("not a valid broadcast");
    int n = b.graph.n();
    for (int i = 0; i < n; ++i) {
        if (b.values[i] == 0) continue;
        for (int j = i + 1; j < n; ++j) {
            if (b.values[j] == 0) continue;
            if (oracle.distance(i, j) <= std::max(b.values[i], b.values[j]))
                return false;
        }
    }
    return true;
}

bool is_independent(const Broadcast& b) {
    return is_independent(b, DistanceOracle(b.graph));
}

bool is_ell_bounded(const Broadcast& b, int ell) {
    if (ell < 1) throw std::invalid_argument("bound must be at least 1");
    return *std::max_element(b.values.begin(), b.values.end()) <= ell;
}

std::vector<int> dominated_set(const Broadcast& b, int i) {
    if (!b.graph.is_ring_with_chord())
        throw std::invalid_argument("dominated set formula needs generator set {1, a}");
    if (i < 0 || i >= b.graph.n() || b.values[i] <= 0)
        throw std::invalid_argument("not a broadcast vertex");
    int n = b.graph.n();
    int a = b.graph.chord();
    int f = b.values[i];
    std::set<int> out;
    for (int k = 0; k <= f; ++k) {
        for (int sign : {-1, 1}) {
            int center = i + sign * (f - k) * a;
            for (int j = center - k; j <= center + k; ++j) out.insert(mod(j, n));
        }
    }
    return std::vector<int>(out.begin(), out.end());
}

Broadcast from_independent_set(const CirculantGraph& g, const std::vector<int>& set) {
    std::vector<int> values(g.n(), 0);
    for (int v : set) {
        if (v < 0 || v >= g.n()) throw std::invalid_argument("vertex index out of range");
        values[v] = 1;
    }
    for (size_t x = 0; x < set.size(); ++x)
        for (size_t y = x + 1; y < set.size(); ++y)
            if (g.adjacent(set[x], set[y]))
                throw std::invalid_argument("set is not independent");
    return Broadcast(g, std::move(values));
}

RunReport a_sets_and_b_sets(const Broadcast& b, int axis) {
    const CirculantGraph& g = b.graph;
    if (!g.is_ring_with_chord())
        throw std::invalid_argument("run analysis needs generator set {1, a}");
    int a = g.chord();
    if (axis != 1 && axis != a) throw std::invalid_argument("axis must be 1 or a");
    if (!is_ell_bounded(b, 2)) throw std::invalid_argument("broadcast is not 2-bounded");
    DistanceOracle oracle(g);
    if (!is_independent(b, oracle))
        throw std::invalid_argument("broadcast is not independent");

    int n = g.n();
    auto at = [&](int idx) { return b.values[mod(idx, n)]; };

    RunReport report;
    report.axis = axis;

    std::vector<bool> covered(n, false);
    for (int i = 0; i < n; ++i) {
        if (b.values[i] != 1) continue;
        if (at(i - axis) != 0 || at(i - 2 * axis) != 0) continue;
        RunSet run;
        run.anchor = i;
        for (int k = 0;; ++k) {
            int one = mod(i + 2 * k * axis, n);
            int gap = mod(i + (2 * k + 1) * axis, n);
            run.members.push_back(one);
            run.members.push_back(gap);
            covered[one] = true;
            if (at(i + (2 * k + 2) * axis) != 1) {
                run.members.push_back(mod(i + (2 * k + 2) * axis, n));
                break;
            }
        }
        run.value_sum = 0;
        for (int v : run.members) run.value_sum += b.values[v];
        report.one_runs.push_back(std::move(run));
    }
    for (int i = 0; i < n; ++i)
        if (b.values[i] == 1 && !covered[i])
            throw no_anchor_error(
                "1-values alternate around a whole cycle along this axis; no run anchor exists");

    for (int j = 0; j < n; ++j) {
        if (b.values[j] != 2) continue;
        RunSet block;
        block.anchor = j;
        if (axis == 1)
            block.members = {mod(j - a + 1, n), j, mod(j + 1, n), mod(j + 2, n),
                             mod(j + a + 1, n)};
        else
            block.members = {j, mod(j + a - 1, n), mod(j + a, n), mod(j + a + 1, n),
                             mod(j + 2 * a, n)};
        block.value_sum = 0;
        for (int v : block.members) block.value_sum += b.values[v];
        report.two_blocks.push_back(std::move(block));
    }

    std::set<int> seen;
    report.pairwise_disjoint = true;
    report.total_size = 0;
    auto absorb = [&](const RunSet& s) {
        report.total_size += (int)s.members.size();
        for (int v : s.members)
            if (!seen.insert(v).second) report.pairwise_disjoint = false;
    };
    for (const auto& s : report.one_runs) absorb(s);
    for (const auto& s : report.two_blocks) absorb(s);
    return report;
}

}  // namespace bcast
