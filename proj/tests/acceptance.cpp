#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include "bcast/constructions.hpp"
#include "bcast/formulas.hpp"
#include "bcast/solver.hpp"

using namespace bcast;

namespace {

int failures = 0;

void report(int id, bool pass, const std::string& what) {
    std::printf("criterion %2d: %s - %s\n", id, pass ? "pass" : "FAIL", what.c_str());
    if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// 1: step-2 formula vs exact solver for n in [6,22], each instance under 60 s
void criterion1() {
    bool ok = true;
    for (int n = 6; n <= 22; ++n) {
        auto t0 = std::chrono::steady_clock::now();
        int beta = broadcast_independence(build_circulant(n, {1, 2})).value;
        double secs = seconds_since(t0);
        int formula = n % 12 == 9 ? (n - 3) / 2 : 2 * (closed_form_diameter_1_2(n) - 1);
        if (beta != formula || secs >= 60.0) ok = false;
    }
    report(1, ok, "step-2 chord formula matches the solver for n in [6,22]");
}

// 2: C(21;1,2) unbounded 9, 2-bounded 8
void criterion2() {
    CirculantGraph g = build_circulant(21, {1, 2});
    int beta = broadcast_independence(g).value;
    int beta2 = broadcast_independence(g, 2).value;
    report(2, beta == 9 && beta2 == 8, "C(21;1,2): unbounded 9, 2-bounded 8");
}

// 3: n = 2a table for a in {3..8}
void criterion3() {
    std::vector<int> want_alpha = {3, 3, 5, 5, 7, 7};
    std::vector<int> want_beta = {3, 3, 5, 6, 7, 7};
    bool ok = true;
    for (int a = 3; a <= 8; ++a) {
        CirculantGraph g = build_circulant(2 * a, {1, a});
        if (max_independent_set(g).value != want_alpha[a - 3]) ok = false;
        if (broadcast_independence(g).value != want_beta[a - 3]) ok = false;
    }
    report(3, ok, "n=2a table: alpha {3,3,5,5,7,7}, beta {3,3,5,6,7,7}");
}

// 4: n = 3a for a in {3..6}: beta = alpha = a, witness cost a
void criterion4() {
    bool ok = true;
    for (int a = 3; a <= 6; ++a) {
        CirculantGraph g = build_circulant(3 * a, {1, a});
        if (max_independent_set(g).value != a) ok = false;
        if (broadcast_independence(g).value != a) ok = false;
        Broadcast w = construct_witness(3 * a, a);
        if (cost(w) != a || !is_independent(w)) ok = false;
    }
    report(4, ok, "n=3a: beta = alpha = a with validated witness, a in {3..6}");
}

// 5: four solved families, all in-range n <= 22: formula = oracle = witness
void criterion5() {
    bool ok = true;
    int covered = 0;
    for (int n = 6; n <= 22; ++n)
        for (int a = 2; a <= n / 2; ++a) {
            Prediction p = predict_beta(n, a);
            if (p.rule != rules::even_n_odd_a && p.rule != rules::chord_three &&
                p.rule != rules::chord_four && p.rule != rules::multiple_of_a_plus_1)
                continue;
            ++covered;
            int beta = broadcast_independence(build_circulant(n, {1, a})).value;
            int witness = cost(construct_witness(n, a));
            if (*p.value != beta || witness != beta) {
                ok = false;
                std::printf("  mismatch at n=%d a=%d: formula %d oracle %d witness %d\n",
                            n, a, *p.value, beta, witness);
            }
        }
    report(5, ok && covered > 0,
           "even-n/odd-a, step-3, step-4 and (a+1)k families match oracle and witness");
}

// 6: multiples of a: (25,5) -> 10, (20,5) -> 10, (18,6) -> 6
void criterion6() {
    SolverLimits wide{64, 26, 40};
    bool ok = true;
    ok &= broadcast_independence(build_circulant(25, {1, 5}), std::nullopt, wide).value == 10 &&
          *predict_beta(25, 5).value == 10;
    ok &= broadcast_independence(build_circulant(20, {1, 5}), std::nullopt, wide).value == 10 &&
          *predict_beta(20, 5).value == 10;
    ok &= broadcast_independence(build_circulant(18, {1, 6}), std::nullopt, wide).value == 6 &&
          *predict_beta(18, 6).value == 6;
    report(6, ok, "multiples of a: (25,5)=10, (20,5)=10, (18,6)=6");
}

// 7: 500 seeded random reductions
void criterion7() {
    std::mt19937 rng(424242);
    int cases = 0;
    bool ok = true;
    while (cases < 500 && ok) {
        int a = 3 + (int)(rng() % 10);
        int n = 2 * a + 2 + (int)(rng() % (40 - 2 * a - 1));
        if (n > 40) continue;
        CirculantGraph g = build_circulant(n, {1, a});
        DistanceOracle oracle(g);
        std::vector<int> order(n), values(n, 0), placed;
        for (int i = 0; i < n; ++i) order[i] = i;
        std::shuffle(order.begin(), order.end(), rng);
        for (int i : order) {
            int v = 1 + (int)(rng() % oracle.diameter());
            bool indep = true;
            for (int p : placed)
                if (oracle.distance(p, i) <= std::max(values[p], v)) {
                    indep = false;
                    break;
                }
            if (!indep) continue;
            values[i] = v;
            placed.push_back(i);
        }
        if (placed.empty()) continue;
        Broadcast b(g, values);
        try {
            // reduce_to_2bounded revalidates the distance claim internally
            Broadcast r = reduce_to_2bounded(b);
            if (!is_valid_broadcast(r) || !is_independent(r) || !is_ell_bounded(r, 2) ||
                cost(r) < cost(b))
                ok = false;
        } catch (const std::exception& e) {
            std::printf("  reduction failed at n=%d a=%d: %s\n", n, a, e.what());
            ok = false;
        }
        ++cases;
    }
    report(7, ok && cases == 500, "500 seeded reductions valid, 2-bounded, cost-preserving");
}

// 8: exhaustive 2-bounded enumeration for n <= 14 against the counting bounds
void criterion8() {
    bool ok = true;
    for (int n = 6; n <= 14 && ok; ++n)
        for (int a = 2; a <= n / 2 && ok; ++a) {
            CirculantGraph g = build_circulant(n, {1, a});
            bool counting = a >= 3 && 3 * a <= n;
            bool density = a % 2 == 0 && n > 2 * a;
            for_each_bounded_independent_broadcast(g, 2, [&](const std::vector<int>& values) {
                if (!counting && !density) return;
                int sigma = 0, v2 = 0;
                for (int v : values) {
                    sigma += v;
                    if (v == 2) ++v2;
                }
                if (sigma > two_bounded_upper(n, a, v2)) {
                    std::printf("  bound violated at n=%d a=%d sigma=%d v2=%d\n", n, a,
                                sigma, v2);
                    ok = false;
                }
            });
            int beta = broadcast_independence(g).value;
            int mu = antipodal_number(g);
            int diam = diameter(g);
            if (beta < mu * (diam - 1)) {
                std::printf("  antipodal lower bound violated at n=%d a=%d\n", n, a);
                ok = false;
            }
        }
    report(8, ok, "counting bounds and antipodal lower bound hold exhaustively, n <= 14");
}

// 9: interval formula for dominated sets equals the metric ball, n <= 30
void criterion9() {
    bool ok = true;
    for (int n = 7; n <= 30; ++n)
        for (int a = 2; a <= n / 2; ++a) {
            CirculantGraph g = build_circulant(n, {1, a});
            DistanceOracle oracle(g);
            for (int f = 1; f <= oracle.diameter(); ++f) {
                std::vector<int> values(n, 0);
                values[0] = f;
                std::vector<int> ball;
                for (int j = 0; j < n; ++j)
                    if (oracle.distance(0, j) <= f) ball.push_back(j);
                if (dominated_set(Broadcast(g, values), 0) != ball) ok = false;
            }
        }
    report(9, ok, "dominated-set interval formula equals the metric ball, n <= 30");
}

// 10: errata probe, reported but never failing
void criterion10() {
    for (int n = 6; n <= 22; ++n)
        for (int a = 2; a <= n / 2; ++a) {
            Prediction p = predict_beta(n, a);
            if (p.rule != rules::general_even_a) continue;
            int q = n / a, r = n % a;
            int statement = a * n / (2 * (a + 1));
            double proof_case = a * q / 2.0 - (q - r + 1) / 2.0;
            int oracle = broadcast_independence(build_circulant(n, {1, a})).value;
            std::printf("  probe n=%d a=%d: statement %d, proof case %.1f, oracle %d%s\n",
                        n, a, statement, proof_case, oracle,
                        statement == oracle && proof_case == oracle
                            ? ""
                            : " <- proof-internal formula differs from the statement");
        }
    for (int a = 4; a <= 10; a += 2) {
        int n = 3 * a;
        CirculantGraph g = build_circulant(n, {1, a});
        std::vector<int> values(n, 0);
        for (int i = 0; i <= 2 * a; ++i)
            if (i % (a + 1) % 2 == 1) values[i] = 1;
        Broadcast b(g, values);
        std::printf("  even-a triple pattern a=%d: cost %d (target %d), %s\n", a, cost(b),
                    a, is_independent(b) ? "independent" : "NOT independent");
    }
    report(10, true, "errata probe completed (informational)");
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    std::printf("%s\n", failures == 0 ? "ALL ACCEPTANCE CRITERIA PASS"
                                      : "ACCEPTANCE FAILURES PRESENT");
    return failures == 0 ? 0 : 1;
}
