#include "bcast/constructions.hpp"

#include <algorithm>

#include "bcast/formulas.hpp"
#include "bcast/graph.hpp"

namespace bcast {

namespace {

// Witness values for C(n;1,2): the known optimal triple when n = 9 mod 12,
// otherwise two antipodal vertices at value diam - 1.
std::vector<int> chord2_values(int n) {
    std::vector<int> values(n, 0);
    if (n <= 5) {
        values[0] = 1;
        return values;
    }
    if (n % 12 == 9) {
        int v = (n - 3) / 6;
        values[0] = values[n / 3] = values[2 * n / 3] = v;
        return values;
    }
    DistanceOracle oracle(build_circulant(n, {1, 2}));
    int diam = oracle.diameter();
    int t = 0;
    while (oracle.row()[t] != diam) ++t;
    values[0] = values[t] = diam - 1;
    return values;
}

std::vector<int> two_a_values(int n, int a) {
    std::vector<int> values(n, 0);
    if (a % 2 == 1) {
        for (int i = 0; i < n; i += 2) values[i] = 1;
    } else if ((a & (a - 1)) == 0) {
        for (int i = 0; i <= a - 2; i += 2) values[i] = 1;
        for (int i = a + 1; i <= 2 * a - 3; i += 2) values[i] = 1;
    } else {
        int k = __builtin_ctz(a);
        for (int i = 0; i < n; i += 2 << k) values[i] = 1 << k;
    }
    return values;
}

std::vector<int> chord4_values(int n) {
    std::vector<int> values(n, 0);
    int r = n % 5;
    auto place = [&](int limit) {
        for (int i = 0; i <= limit; ++i)
            if (i % 5 % 2 == 1) values[i] = 1;
    };
    if (r == 0 || r == 3) {
        place(n - 1);
    } else if (r == 2) {
        place(n - 3);
    } else {  // r = 1 or 4
        place(n - 7);
        values[n - 2] = values[n - 5] = 1;
    }
    return values;
}

// n = qa with a even and q odd, 5 <= q <= a-1.  The vertices split into a
// cycles {v_k, v_{k+a}, ...} of length q; each cycle gets a maximum
// independent set of the q-cycle, rotated so that neighbouring cycles pick
// disjoint position sets.  The rotation walks down by one for the first q
// cycles (absorbing a full wrap) and then alternates.
std::vector<int> staircase_values(int n, int a) {
    int q = n / a;
    std::vector<int> shift(a);
    for (int k = 0; k < a; ++k)
        shift[k] = k <= q ? mod(-k, q) : (k - q) % 2;
    std::vector<int> values(n, 0);
    for (int k = 0; k < a; ++k)
        for (int m = 0; m <= (q - 3) / 2; ++m)
            values[mod(k + mod(shift[k] + 2 * m, q) * a, n)] = 1;
    return values;
}

std::vector<int> segment_values(int n, int a) {
    auto split = decompose_segments(n, a);
    if (!split)
        throw std::logic_error("construction defect: no segment decomposition exists");
    return segment_pattern(n, a, split->first, split->second).values;
}

}  // namespace

Broadcast construct_witness(int n, int a) {
    Prediction pred = predict_beta(n, a);
    if (!pred.value)
        throw no_construction_error("no construction known for this parameter class");
    CirculantGraph g = build_circulant(n, {1, a});
    std::vector<int> values(n, 0);
    if (n <= 5) {
        values[0] = 1;
    } else if (a == 2) {
        values = chord2_values(n);
    } else if (n == 2 * a) {
        values = two_a_values(n, a);
    } else if (n == 2 * a + 1) {
        // multiply indices by a+1, which maps the step set {1,2} to {1,a}
        std::vector<int> base = chord2_values(n);
        for (int i = 0; i < n; ++i) values[(a + 1) * i % n] = base[i];
    } else if (n == 3 * a) {
        if (a % 2 == 1) {
            for (int i = 0; i < 2 * a; i += 2) values[i] = 1;
        } else {
            for (int i = 0; i <= 2 * a; ++i)
                if (i % (a + 1) % 2 == 1) values[i] = 1;
        }
    } else if (a == 3) {
        int limit = n % 2 == 0 ? n - 1 : n - 5;
        for (int i = 0; i <= limit; i += 2) values[i] = 1;
    } else if (a == 4) {
        values = chord4_values(n);
    } else if (n % 2 == 0 && a % 2 == 1) {
        for (int i = 0; i < n; i += 2) values[i] = 1;
    } else if (n % (a + 1) == 0) {
        for (int i = 0; i < n; ++i)
            if (i % (a + 1) % 2 == 1) values[i] = 1;
    } else if (n % a == 0) {
        int q = n / a;
        if (a % 2 == 1) {  // q odd, since even q would make n even
            for (int i = 0; i <= (q - 1) * a - 2; i += 2) values[i] = 1;
        } else if (q % 2 == 1 && q <= a - 1) {
            values = staircase_values(n, a);
        } else {
            values = segment_values(n, a);
        }
    } else {
        values = segment_values(n, a);
    }
    Broadcast witness(g, std::move(values));
    if (!is_independent(witness))
        throw std::logic_error("construction defect: witness is not independent");
    if (pred.kind == PredictionKind::exact && cost(witness) != *pred.value)
        throw std::logic_error("construction defect: witness cost differs from prediction");
    return witness;
}

namespace {

// Replacement pattern used at and just above n = 3a, where the generic
// three-arm pattern would put v_{i+a+s} and v_{i-a+s'} at chord distance.
// Emits exactly f ones.
std::vector<int> near_triple_offsets(int a, int f) {
    if (f == 3) return {-1, 1, a};
    std::vector<int> out;
    int p = f % 2 == 1 ? f - 3 : f - 4;
    for (int t = 1; t <= p + 1; t += 2) out.push_back(t);
    for (int t = 0; t <= p; t += 2) out.push_back(a + t);
    out.push_back(-a - 1);
    if (f % 2 == 0) out.push_back(-2);
    return out;
}

}  // namespace

std::vector<int> replacement_offsets(int n, int a, int f) {
    if (f < 3) throw std::invalid_argument("replacement applies to values above 2");
    std::vector<int> out;
    int p = f % 2 == 1 ? f - 3 : f - 4;
    if (n < 3 * a) {
        int r = n - 2 * a;
        if (f <= r) {
            out.push_back(-a);
            for (int t = -1; t <= p + 1; t += 2) out.push_back(t);
            for (int t = 0; t <= p; t += 2) out.push_back(a + t);
        } else if (r % 2 == 0) {
            for (int t = -1; t <= p + 1; t += 2) out.push_back(t);
            for (int t = 0; t <= r + p; t += 2) out.push_back(a + t);
        } else {
            int d = f - (r + 1);
            int hi1 = (d + 2) / 2 * r + d % 2;
            for (int t = -2; t <= hi1; ++t)
                if (mod(t + 2, r + 2) % 2 == 1) out.push_back(t);
            int hi2 = (d + 3) / 2 * r + 1 - d % 2;
            for (int t = 0; t <= hi2; ++t)
                if (mod(t + 3, r + 2) % 2 == 1) out.push_back(a + t);
        }
    } else if (f <= a) {
        int g = n - 3 * a;
        if (g == 0 || (g % 2 == 0 && g <= p)) return near_triple_offsets(a, f);
        for (int t = -1; t <= p + 1; t += 2) out.push_back(t);
        for (int t = 0; t <= p; t += 2) out.push_back(-a + t);
        for (int t = 0; t <= p; t += 2) out.push_back(a + t);
    } else if (a % 2 == 1) {
        int d = f - (a + 1);
        for (int t = -a; t <= (1 + d) * a; ++t)
            if ((t + a) % 2 == 0) out.push_back(t);
    } else {
        int d = f - (a + 1);
        for (int t = -a - 1; t <= (2 + d) * a; ++t)
            if (mod(t + a + 1, a + 1) % 2 == 1) out.push_back(t);
    }
    return out;
}

Broadcast reduce_to_2bounded(const Broadcast& b) {
    const CirculantGraph& g = b.graph;
    if (!g.is_ring_with_chord())
        throw std::invalid_argument("reduction needs generator set {1, a}");
    int n = g.n();
    int a = g.chord();
    if (a < 3) throw std::invalid_argument("reduction needs a >= 3");
    if (n < 2 * a + 2)
        throw std::invalid_argument("reduction not applicable when n <= 2a+1");
    DistanceOracle oracle(g);
    if (!is_independent(b, oracle))
        throw std::invalid_argument("broadcast is not independent");
    std::vector<int> out = b.values;
    for (int i = 0; i < n; ++i) {
        int f = b.values[i];
        if (f <= 2) continue;
        out[i] = 0;
        for (int off : replacement_offsets(n, a, f)) {
            int j = mod(i + off, n);
            if (out[j] != 0)
                throw std::logic_error("reduction produced overlapping replacements");
            if (oracle.distance(i, j) > f - 2)
                throw std::logic_error("replacement vertex violates the distance claim");
            out[j] = 1;
        }
    }
    Broadcast result(g, std::move(out));
    if (!is_ell_bounded(result, 2) || !is_independent(result, oracle))
        throw std::logic_error("reduction produced a non-independent broadcast");
    if (cost(result) < cost(b))
        throw std::logic_error("reduction lowered the broadcast cost");
    return result;
}

std::vector<int> segment_starts(int a, int k1, int k2) {
    std::vector<int> starts;
    int pos = 0;
    for (int s = 0; s < k1 + k2; ++s) {
        starts.push_back(pos);
        pos += s < k1 ? a + 1 : a - 1;
    }
    return starts;
}

Broadcast segment_pattern(int n, int a, int k1, int k2) {
    if (a < 6 || a % 2 != 0) throw std::invalid_argument("need even a >= 6");
    if (k1 < 0 || k2 < 0 || k1 * (a + 1) + k2 * (a - 1) != n)
        throw std::invalid_argument("segment lengths do not add up to n");
    CirculantGraph g = build_circulant(n, {1, a});
    std::vector<int> values(n, 0);
    for (int start : segment_starts(a, k1, k2)) {
        int len = start < k1 * (a + 1) ? a + 1 : a - 1;
        for (int off = 0; off + 3 <= len; off += 2) values[start + off] = 1;
    }
    Broadcast result(g, std::move(values));
    if (!is_independent(result))
        throw std::logic_error("segment pattern is not independent");
    if (cost(result) != k1 * (a / 2) + k2 * (a / 2 - 1))
        throw std::logic_error("segment pattern cost mismatch");
    return result;
}

std::string segment_order_policy() {
    return "segments are laid out from vertex 0: all k1 segments of length a+1 "
           "first, then all k2 segments of length a-1; each segment holds the "
           "alternating pattern 1010...100 ending in two zeros";
}

}  // namespace bcast
