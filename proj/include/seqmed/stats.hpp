// Small weighted-statistics helpers shared across modules.
#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace seqmed {

inline double weighted_mean(const Eigen::VectorXd& v, const Eigen::VectorXd& w) {
  double sw = w.sum();
  if (sw <= 0.0) throw std::invalid_argument("weighted_mean: nonpositive total weight");
  return v.dot(w) / sw;
}

inline double weighted_var(const Eigen::VectorXd& v, const Eigen::VectorXd& w) {
  double m = weighted_mean(v, w);
  double sw = w.sum();
  return (v.array() - m).square().matrix().dot(w) / sw;
}

// Type-7 quantile (linear interpolation between order statistics), the
// default in most statistical software. `p` in [0,1].
inline double quantile_type7(std::vector<double> v, double p) {
  if (v.empty()) throw std::invalid_argument("quantile_type7: empty input");
  if (p <= 0.0) return *std::min_element(v.begin(), v.end());
  if (p >= 1.0) return *std::max_element(v.begin(), v.end());
  std::sort(v.begin(), v.end());
  double h = p * (static_cast<double>(v.size()) - 1.0);
  auto lo = static_cast<std::size_t>(std::floor(h));
  auto hi = static_cast<std::size_t>(std::ceil(h));
  double frac = h - static_cast<double>(lo);
  return v[lo] * (1.0 - frac) + v[hi] * frac;
}

inline double expit(double x) { return 1.0 / (1.0 + std::exp(-x)); }

inline double clamp_prob(double p, double eps) {
  return p < eps ? eps : (p > 1.0 - eps ? 1.0 - eps : p);
}

// Probability floor for every logit-link prediction in the library.
inline constexpr double kProbFloor = 1e-3;

}  // namespace seqmed
