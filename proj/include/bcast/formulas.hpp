#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bcast/graph.hpp"

namespace bcast {

enum class PredictionKind { exact, lower_bound, upper_bound, unknown };

struct Prediction {
    std::optional<int> value;
    PredictionKind kind = PredictionKind::unknown;
    std::string rule;  // which closed-form case produced the value
    std::string note;
};

// Rule identifiers used by the dispatcher, most specific first.
namespace rules {
inline constexpr const char* complete_graph = "complete-graph";
inline constexpr const char* chord_two = "chord-2";
inline constexpr const char* n_eq_2a = "n=2a";
inline constexpr const char* n_eq_2a_plus_1 = "n=2a+1";
inline constexpr const char* n_eq_3a = "n=3a";
inline constexpr const char* chord_three = "chord-3";
inline constexpr const char* chord_four = "chord-4";
inline constexpr const char* even_n_odd_a = "even-n-odd-a";
inline constexpr const char* multiple_of_a_plus_1 = "n=(a+1)k";
inline constexpr const char* multiple_of_a = "n=qa";
inline constexpr const char* general_even_a = "n=qa+r";
inline constexpr const char* open_case = "open";
}  // namespace rules

Prediction predict_alpha(int n, int a);
Prediction predict_beta(int n, int a);

// Upper bound on the cost of a 2-bounded independent broadcast whose
// 2-valued vertex count is v2; minimum of the applicable counting bounds.
int two_bounded_upper(int n, int a, int v2);

// n = k1 (a+1) + k2 (a-1) with k1 maximal; empty when no such split exists.
std::optional<std::pair<int, int>> decompose_segments(int n, int a);

// 2 (diam - 1), the always-valid weak form of the antipodal lower bound.
int lower_bound_mu(int n, int a);

struct CoverageRow {
    int n, a;
    std::string rule;
    PredictionKind kind;
};

// One row per (n, a) pair in the sweep range: which rule covers it.
std::vector<CoverageRow> coverage_matrix(int n_max);

const char* kind_name(PredictionKind kind);

}  // namespace bcast
