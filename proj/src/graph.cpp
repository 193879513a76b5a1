#include "bcast/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>

namespace bcast {

CirculantGraph::CirculantGraph(int n, std::vector<int> generators)
    : n_(n), gens_(std::move(generators)) {
    if (n_ < 3) throw std::invalid_argument("vertex count must be at least 3");
    if (gens_.empty()) throw std::invalid_argument("generator set must be non-empty");
    std::sort(gens_.begin(), gens_.end());
    for (size_t k = 0; k < gens_.size(); ++k) {
        int s = gens_[k];
        if (s < 1 || s > n_ / 2)
            throw std::invalid_argument("generator " + std::to_string(s) +
                                        " out of range [1, n/2]");
        if (k > 0 && gens_[k] == gens_[k - 1])
            throw std::invalid_argument("duplicate generator " + std::to_string(s));
    }
}

bool CirculantGraph::adjacent(int u, int v) const {
    if (u == v) return false;
    int d = mod(v - u, n_);
    d = std::min(d, n_ - d);
    return std::find(gens_.begin(), gens_.end(), d) != gens_.end();
}

int CirculantGraph::degree(int i) const {
    (void)i;
    int deg = 0;
    for (int s : gens_) deg += (2 * s == n_) ? 1 : 2;
    return deg;
}

int CirculantGraph::chord() const {
    if (!is_ring_with_chord())
        throw std::invalid_argument("graph does not have generator set {1, a}");
    return gens_[1];
}

CirculantGraph build_circulant(int n, std::vector<int> generators) {
    return CirculantGraph(n, std::move(generators));
}

DistanceOracle::DistanceOracle(const CirculantGraph& g)
    : graph_(g), row_(g.n(), -1) {
    std::deque<int> queue;
    row_[0] = 0;
    queue.push_back(0);
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int s : graph_.generators()) {
            for (int v : {mod(u + s, graph_.n()), mod(u - s, graph_.n())}) {
                if (row_[v] < 0) {
                    row_[v] = row_[u] + 1;
                    queue.push_back(v);
                }
            }
        }
    }
    for (int d : row_)
        if (d < 0) throw std::invalid_argument("graph is disconnected");
    diameter_ = *std::max_element(row_.begin(), row_.end());
}

DistanceOracle distances_from_origin(const CirculantGraph& g) {
    return DistanceOracle(g);
}

int diameter(const CirculantGraph& g) { return DistanceOracle(g).diameter(); }

int eccentricity(const CirculantGraph& g, int i) {
    (void)i;  // vertex-transitive: every vertex has the same eccentricity
    return diameter(g);
}

int radius(const CirculantGraph& g) { return diameter(g); }

int closed_form_diameter_1_2(int n) {
    if (n < 4) throw std::invalid_argument("need n >= 4");
    return (n - 1 + 3) / 4;
}

namespace {

// exact max clique on an adjacency-bitset graph, plain branch and bound
void clique_search(const std::vector<uint64_t>& adj, uint64_t candidates,
                   int current, int& best) {
    if (current + __builtin_popcountll(candidates) <= best) return;
    if (candidates == 0) {
        best = std::max(best, current);
        return;
    }
    uint64_t rest = candidates;
    while (rest) {
        if (current + __builtin_popcountll(rest) <= best) return;
        int v = __builtin_ctzll(rest);
        rest &= rest - 1;
        clique_search(adj, rest & adj[v], current + 1, best);
    }
}

}  // namespace

int antipodal_number(const CirculantGraph& g, int limit) {
    if (g.n() > limit || g.n() > 64)
        throw size_limit_error("antipodal number: instance exceeds exact limit");
    DistanceOracle oracle(g);
    int diam = oracle.diameter();
    std::vector<uint64_t> adj(g.n(), 0);
    for (int i = 0; i < g.n(); ++i)
        for (int j = 0; j < g.n(); ++j)
            if (i != j && oracle.distance(i, j) == diam) adj[i] |= uint64_t(1) << j;
    int best = 1;
    uint64_t all = (g.n() == 64) ? ~uint64_t(0) : ((uint64_t(1) << g.n()) - 1);
    clique_search(adj, all, 0, best);
    return best;
}

bool connection_set_equivalent(int n, int a, int b) {
    if (a < 1 || a > n / 2 || b < 1 || b > n / 2)
        throw std::invalid_argument("steps must lie in [1, n/2]");
    auto norm = [n](int x) {
        x = mod(x, n);
        return std::min(x, n - x);
    };
    for (int u = 1; u < n; ++u) {
        if (std::gcd(u, n) != 1) continue;
        int p = norm(u);
        int q = norm(u * a % n);
        if (std::min(p, q) == std::min(1, norm(b)) && std::max(p, q) == std::max(1, norm(b)))
            return true;
    }
    return false;
}

}  // namespace bcast
