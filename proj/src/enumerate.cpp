// enumerate.cpp - serial reference and OpenMP enumeration kernels

#include "mprec/enumerate.hpp"

#include <stdexcept>

#include <omp.h>

namespace mprec {

namespace {

inline double factor(const BinaryNode& node, std::int8_t value, const std::int8_t* values) {
  std::size_t config = 0;
  for (std::size_t i = 0; i < node.parents.size(); ++i) {
    if (values[node.parents[i]]) config |= std::size_t{1} << i;
  }
  double p = node.p_true[config];
  return value ? p : 1.0 - p;
}

std::vector<int> hidden_nodes(const BinaryNetwork& net, const Assignment& fixed, int leaf) {
  if (fixed.size() != net.nodes.size()) throw std::invalid_argument("assignment size does not match network");
  if (leaf < 0 || static_cast<std::size_t>(leaf) >= net.nodes.size()) throw std::invalid_argument("bad leaf index");
  std::vector<int> hidden;
  for (std::size_t i = 0; i < fixed.size(); ++i) {
    if (static_cast<int>(i) == leaf) continue;
    if (fixed[i] < 0) hidden.push_back(static_cast<int>(i));
  }
  if (hidden.size() > static_cast<std::size_t>(kMaxHiddenNodes)) throw std::length_error("too many hidden nodes to enumerate");
  return hidden;
}

// Product over all nodes but the leaf, and the leaf's P(leaf = 1 | parents).
inline void accumulate(const BinaryNetwork& net, const std::int8_t* values, int leaf, double& without, double& with) {
  double p = 1.0;
  for (std::size_t i = 0; i < net.nodes.size(); ++i) {
    if (static_cast<int>(i) == leaf) continue;
    p *= factor(net.nodes[i], values[i], values);
  }
  without += p;
  with += p * factor(net.nodes[leaf], 1, values);
}

void recurse(const BinaryNetwork& net, const std::vector<int>& hidden, std::size_t depth, Assignment& values, int leaf,
             EnumerationSums& sums) {
  if (depth == hidden.size()) {
    accumulate(net, values.data(), leaf, sums.without_leaf, sums.with_leaf);
    return;
  }
  for (std::int8_t v : {std::int8_t{0}, std::int8_t{1}}) {
    values[hidden[depth]] = v;
    recurse(net, hidden, depth + 1, values, leaf, sums);
  }
}

}  // namespace

double joint_probability(const BinaryNetwork& net, std::span<const std::int8_t> values) {
  if (values.size() != net.nodes.size()) throw std::invalid_argument("assignment size does not match network");
  double p = 1.0;
  for (std::size_t i = 0; i < net.nodes.size(); ++i) {
    if (values[i] != 0 && values[i] != 1) throw std::invalid_argument("joint_probability needs a complete assignment");
    p *= factor(net.nodes[i], values[i], values.data());
  }
  return p;
}

EnumerationSums enumerate_serial(const BinaryNetwork& net, const Assignment& fixed, int leaf) {
  std::vector<int> hidden = hidden_nodes(net, fixed, leaf);
  Assignment values = fixed;
  EnumerationSums sums;
  recurse(net, hidden, 0, values, leaf, sums);
  return sums;
}

EnumerationSums enumerate_parallel(const BinaryNetwork& net, const Assignment& fixed, int leaf) {
  const std::vector<int> hidden = hidden_nodes(net, fixed, leaf);
  const std::int64_t count = std::int64_t{1} << hidden.size();
  const int h = static_cast<int>(hidden.size());
  double without = 0.0;
  double with = 0.0;

  #pragma omp parallel reduction(+ : without, with)
  {
    Assignment values = fixed;
    #pragma omp for schedule(static)
    for (std::int64_t mask = 0; mask < count; ++mask) {
      for (int b = 0; b < h; ++b) values[hidden[b]] = static_cast<std::int8_t>((mask >> b) & 1);
      accumulate(net, values.data(), leaf, without, with);
    }
  }
  return EnumerationSums{without, with};
}

void set_num_threads(int n) {
  if (n > 0) omp_set_num_threads(n);
}

}  // namespace mprec
