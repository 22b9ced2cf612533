// enumerate.hpp - exact evaluation of small binary Bayesian networks by enumeration
//
// Two kernels compute the same sums: a recursive serial reference and a flat
// OpenMP loop over hidden-variable bitmasks. The parallel kernel is the one the
// engine uses; the serial one is kept for testing and benchmarking.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace mprec {

struct BinaryNode {
  std::vector<int> parents;
  /// P(node = 1 | parents); entry index has bit i set iff parents[i] = 1.
  std::vector<double> p_true;
};

struct BinaryNetwork {
  std::vector<BinaryNode> nodes;
};

/// Per-node value: 0 or 1 for observed nodes, -1 for nodes summed out.
using Assignment = std::vector<std::int8_t>;

/// Sums of the joint over all completions of the hidden nodes.
/// `without_leaf` omits the factor of `leaf` (a childless node, so this is the
/// probability of the other fixed values); `with_leaf` includes it with leaf = 1.
struct EnumerationSums {
  double without_leaf = 0.0;
  double with_leaf = 0.0;
};

constexpr int kMaxHiddenNodes = 24;

/// Probability of a complete assignment (every entry 0 or 1).
double joint_probability(const BinaryNetwork& net, std::span<const std::int8_t> values);

EnumerationSums enumerate_serial(const BinaryNetwork& net, const Assignment& fixed, int leaf);
EnumerationSums enumerate_parallel(const BinaryNetwork& net, const Assignment& fixed, int leaf);

void set_num_threads(int n);

}  // namespace mprec
