#pragma once

#include <vector>

#include "qinfo/qinfo.hpp"

namespace qtest {

using namespace qinfo;

// random matrix with complex Gaussian entries (not unitary)
inline Matrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  RandomStream rng(seed);
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = cplx(rng.next_gaussian(), rng.next_gaussian());
  return m;
}

// random probability vector over n outcomes: normalized squared Gaussians
inline ProbabilityVector random_probabilities(std::size_t n, std::uint64_t seed) {
  RandomStream rng(seed);
  std::vector<double> p(n);
  double sum = 0.0;
  for (auto &x : p) {
    const double g = rng.next_gaussian();
    x = g * g;
    sum += x;
  }
  for (auto &x : p)
    x /= sum;
  return ProbabilityVector(p);
}

// direct evaluation of the total over a set: sum of per-basis bits. This is
// the brute-force route used as the oracle for the closed form.
inline double brute_force_total(const DensityMatrix &rho, const MubSet &set) {
  const auto cfg = InformationMeasureConfig::for_qubits(set.k());
  double total = 0.0;
  for (const auto &basis : set.bases())
    total += information(measurement_probabilities(rho, basis), cfg);
  return total;
}

} // namespace qtest
