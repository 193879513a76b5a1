#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "bcast/broadcast.hpp"

namespace bcast {

struct no_construction_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Optimal (or best-known lower bound) independent broadcast for C(n;1,a).
// Throws no_construction_error on classes without a known construction and
// std::logic_error if an emitted pattern fails validation against the
// predicted value.
Broadcast construct_witness(int n, int a);

// Transform an independent broadcast on C(n;1,a), 3 <= a, n >= 2a+2, into a
// 2-bounded independent broadcast of no smaller cost.  Values <= 2 are kept;
// every replacement 1-vertex lies within distance f(v_i) - 2 of its source.
Broadcast reduce_to_2bounded(const Broadcast& b);

// Replacement offsets (relative vertex indices) used when a vertex of value
// f is rewritten by reduce_to_2bounded; exposed for the property tests.
std::vector<int> replacement_offsets(int n, int a, int f);

// Concatenated alternating segments: k1 of length a+1 then k2 of length a-1,
// each "1010...10100"; requires a even, a >= 6, n = k1(a+1) + k2(a-1).
Broadcast segment_pattern(int n, int a, int k1, int k2);

// Start index of each segment under the fixed ordering (all long segments
// first, then all short ones, beginning at vertex 0).
std::vector<int> segment_starts(int a, int k1, int k2);

// Human-readable statement of the fixed segment ordering.
std::string segment_order_policy();

}  // namespace bcast
