#pragma once

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "trm/geometry.hpp"

namespace trm::test {

inline Complex random_disk(std::mt19937_64& rng, double rmax = 0.98) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return std::polar(rmax * std::sqrt(u(rng)), 2.0 * std::numbers::pi * u(rng));
}

inline Point random_ball(std::mt19937_64& rng, std::size_t dim, double rmax = 0.98) {
  std::normal_distribution<double> g;
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> v(dim);
  double n2 = 0.0;
  for (double& c : v) {
    c = g(rng);
    n2 += c * c;
  }
  const double r = rmax * std::pow(u(rng), 1.0 / static_cast<double>(dim)) / std::sqrt(n2);
  for (double& c : v) c *= r;
  return Point::interior(std::move(v));
}

}  // namespace trm::test
