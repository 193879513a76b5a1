#pragma once

#include <vector>

#include "bcast/graph.hpp"

namespace bcast {

// Assignment f: V -> {0..diam}; values[i] is the strength broadcast from v_i.
struct Broadcast {
    CirculantGraph graph;
    std::vector<int> values;

    Broadcast(CirculantGraph g, std::vector<int> vals)
        : graph(std::move(g)), values(std::move(vals)) {
        if ((int)values.size() != graph.n())
            throw std::invalid_argument("value array length does not match vertex count");
    }
};

int cost(const Broadcast& b);

bool is_valid_broadcast(const Broadcast& b, const DistanceOracle& oracle);
bool is_valid_broadcast(const Broadcast& b);

// no broadcast vertex may hear another: d(u,v) > max{f(u), f(v)}
bool is_independent(const Broadcast& b, const DistanceOracle& oracle);
bool is_independent(const Broadcast& b);

bool is_ell_bounded(const Broadcast& b, int ell);

// Vertices within distance f(v_i) of v_i, via the explicit interval formula
// for the generator set {1, a}: union over k of index windows
// i +/- (f(v_i)-k)a +/- k.  Coincides with the metric ball.
std::vector<int> dominated_set(const Broadcast& b, int i);

Broadcast from_independent_set(const CirculantGraph& g, const std::vector<int>& set);

// Run analysis for 2-bounded independent broadcasts.  Along the chosen axis
// (step 1 or step a), every 1-valued vertex belongs to a maximal alternating
// run 1010...100 opened at an anchor whose two predecessors carry 0, and
// every 2-valued vertex owns a fixed 5-vertex block.
struct RunSet {
    int anchor;                // index of the vertex opening the set
    std::vector<int> members;  // vertex indices, in set order
    int value_sum;             // sum of broadcast values over the members
};

struct RunReport {
    int axis;  // 1 or a
    std::vector<RunSet> one_runs;    // around 1-valued vertices
    std::vector<RunSet> two_blocks;  // around 2-valued vertices
    bool pairwise_disjoint;
    int total_size;  // sum of all set sizes
};

struct no_anchor_error : std::runtime_error {
    explicit no_anchor_error(const std::string& what) : std::runtime_error(what) {}
};

RunReport a_sets_and_b_sets(const Broadcast& b, int axis);

}  // namespace bcast
