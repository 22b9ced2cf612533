// bayes_support.hpp - evaluators for vertebrate networks written independently of the library kernels
#pragma once

#include <cmath>

#include "mprec/bayes.hpp"

namespace support {

using namespace mprec;

// Product form: inst nodes are independent, an equality can only hold when both
// of its instances exist, so "every eq true" forces every inst true.
struct ClosedForm {
  double all_true = 0.0;      // P(every hidden node true, e1, e2)
  double ends = 0.0;          // P(e1, e2)
  double interior_given_ends = 0.0;
  double joint = 0.0;         // P(every hidden node true | e1, e2, E^I)
};

inline ClosedForm closed_form(const VertebrateNetwork& net, const Cpts& c) {
  ClosedForm f;
  f.all_true = 1.0;
  f.ends = 1.0;
  for (std::size_t i = 0; i < net.insts.size(); ++i) {
    double q = c.inst_true[i];
    double lik_true = 1.0, lik_false = 1.0;
    for (std::size_t end = 0; end < 2; ++end) {
      if (net.evidence[end].inst != static_cast<int>(i)) continue;
      lik_true *= c.evidence[end].first;
      lik_false *= c.evidence[end].second;
    }
    f.all_true *= q * lik_true;
    f.ends *= q * lik_true + (1 - q) * lik_false;
  }
  for (double p : c.eq_true) f.all_true *= p;
  double interior = c.interior_all_true * f.all_true + c.interior_otherwise * (f.ends - f.all_true);
  f.interior_given_ends = interior / f.ends;
  f.joint = c.interior_all_true * f.all_true / interior;
  return f;
}

// Brute force straight from the CPT definitions, visiting hidden nodes in
// reverse order and never touching the edge list.
inline double brute_force_joint(const VertebrateNetwork& net, const Cpts& c) {
  const std::size_t ni = net.insts.size(), ne = net.eqs.size(), h = ni + ne;
  double num = 0.0, den = 0.0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << h); ++mask) {
    auto bit = [&](std::size_t k) { return ((mask >> (h - 1 - k)) & 1) != 0; };
    double p = 1.0;
    for (std::size_t i = 0; i < ni; ++i) p *= bit(i) ? c.inst_true[i] : 1 - c.inst_true[i];
    bool all_eq = true;
    for (std::size_t j = 0; j < ne; ++j) {
      bool both = bit(net.eqs[j].owner) && bit(net.eqs[j].filler);
      double pt = both ? c.eq_true[j] : 0.0;
      p *= bit(ni + j) ? pt : 1 - pt;
      all_eq = all_eq && bit(ni + j);
    }
    for (std::size_t end = 0; end < 2; ++end) {
      p *= bit(net.evidence[end].inst) ? c.evidence[end].first : c.evidence[end].second;
    }
    p *= all_eq ? c.interior_all_true : c.interior_otherwise;
    den += p;
    if (mask == (std::uint64_t{1} << h) - 1) num = p;
  }
  return num / den;
}

}  // namespace support
