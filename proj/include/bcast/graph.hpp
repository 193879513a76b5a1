#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace bcast {

// Thrown when an instance is too large for one of the exact algorithms.
struct size_limit_error : std::runtime_error {
    explicit size_limit_error(const std::string& what) : std::runtime_error(what) {}
};

// Ring of n vertices v_0..v_{n-1}; v_i is adjacent to v_{i +/- s mod n}
// for every step s in the generator set.
class CirculantGraph {
public:
    CirculantGraph(int n, std::vector<int> generators);

    int n() const { return n_; }
    const std::vector<int>& generators() const { return gens_; }

    bool adjacent(int u, int v) const;
    int degree(int i) const;

    // convenience for the two-generator case {1, a}
    bool is_ring_with_chord() const { return gens_.size() == 2 && gens_[0] == 1; }
    int chord() const;

private:
    int n_;
    std::vector<int> gens_;
};

CirculantGraph build_circulant(int n, std::vector<int> generators);

// Distances d(v_0, v_j) for all j; d(v_i, v_j) follows by rotation.
class DistanceOracle {
public:
    explicit DistanceOracle(const CirculantGraph& g);

    const CirculantGraph& graph() const { return graph_; }
    const std::vector<int>& row() const { return row_; }

    int distance(int i, int j) const {
        int d = j - i;
        d %= graph_.n();
        if (d < 0) d += graph_.n();
        return row_[d];
    }
    int diameter() const { return diameter_; }

private:
    CirculantGraph graph_;
    std::vector<int> row_;
    int diameter_;
};

DistanceOracle distances_from_origin(const CirculantGraph& g);

int diameter(const CirculantGraph& g);
int eccentricity(const CirculantGraph& g, int i);
int radius(const CirculantGraph& g);

// ceil((n-1)/4), the diameter of the ring with step-2 chords
int closed_form_diameter_1_2(int n);

// Largest set of pairwise antipodal vertices (pairwise at distance exactly
// the diameter); exact clique search, refuses n above `limit`.
int antipodal_number(const CirculantGraph& g, int limit = 64);

// True when some unit u mod n maps the step set {1, a} onto {1, b}
// (up to sign), a sufficient certificate that C(n;1,a) and C(n;1,b)
// are isomorphic.
bool connection_set_equivalent(int n, int a, int b);

inline int mod(int x, int n) {
    int r = x % n;
    return r < 0 ? r + n : r;
}

}  // namespace bcast
