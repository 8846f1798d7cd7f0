#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qinfo/linalg.hpp"
#include "qinfo/mub.hpp"
#include "qinfo/states.hpp"

namespace qinfo {

//------------------------------------------------------------------------------
// ProbabilityVector: outcome distribution of one measurement, n = 2^k
//------------------------------------------------------------------------------

class ProbabilityVector {
public:
  explicit ProbabilityVector(std::vector<double> p) : p_(std::move(p)) {
    if (p_.size() < 2 || (p_.size() & (p_.size() - 1)) != 0)
      throw std::invalid_argument(
          "ProbabilityVector: outcome count must be 2^k with k >= 1");
    double sum = 0.0;
    for (auto &x : p_) {
      if (!std::isfinite(x) || x < -kPhysicsTol || x > 1.0 + kPhysicsTol)
        throw std::invalid_argument("ProbabilityVector: entry outside [0, 1]");
      // small negative values from floating-point projections are clamped
      if (x < 0.0)
        x = 0.0;
      if (x > 1.0)
        x = 1.0;
      sum += x;
    }
    if (std::abs(sum - 1.0) > kPhysicsTol)
      throw std::invalid_argument("ProbabilityVector: probabilities sum to " +
                                  std::to_string(sum) + ", not 1");
    for (auto &x : p_)
      x /= sum;
  }

  std::size_t size() const { return p_.size(); }
  double operator[](std::size_t i) const { return p_[i]; }
  const std::vector<double> &values() const { return p_; }

private:
  std::vector<double> p_;
};

//------------------------------------------------------------------------------
// InformationMeasureConfig: normalization for n = 2^k outcomes
//------------------------------------------------------------------------------

struct InformationMeasureConfig {
  int k = 1;
  double normalization = 2.0; // 2^k * k / (2^k - 1)

  static InformationMeasureConfig for_qubits(int k) {
    if (k < 1 || k > kMaxQubits)
      throw std::invalid_argument("InformationMeasureConfig: unsupported k");
    const double n = static_cast<double>(std::size_t{1} << k);
    return {k, n * static_cast<double>(k) / (n - 1.0)};
  }
};

//------------------------------------------------------------------------------
// Per-measurement quantities
//------------------------------------------------------------------------------

// mean-square deviation of the occurrence count of one outcome over N trials
inline double trial_uncertainty(double p_j, long long trials) {
  if (!(p_j >= 0.0 && p_j <= 1.0))
    throw std::invalid_argument("trial_uncertainty: probability outside [0, 1]");
  if (trials < 1)
    throw std::invalid_argument("trial_uncertainty: trials must be >= 1");
  return p_j * (1.0 - p_j) * static_cast<double>(trials);
}

// 68% confidence interval (p N - sigma, p N + sigma) for the occurrence count
inline std::pair<double, double> confidence_interval(double p_j, long long trials) {
  const double sigma = std::sqrt(trial_uncertainty(p_j, trials));
  const double center = p_j * static_cast<double>(trials);
  return {center - sigma, center + sigma};
}

// U(p) = 1 - sum p_j^2, the total single-trial lack of information
inline double lack_of_information(const ProbabilityVector &p) {
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i)
    s += p[i] * p[i];
  return 1.0 - s;
}

// I(p) = N * sum (p_i - 1/n)^2 in bits; k bits when one p_i = 1, 0 when uniform
inline double information(const ProbabilityVector &p,
                          const InformationMeasureConfig &cfg) {
  const std::size_t n = std::size_t{1} << cfg.k;
  if (p.size() != n)
    throw std::invalid_argument("information: outcome count does not match config");
  const double inv_n = 1.0 / static_cast<double>(n);
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double d = p[i] - inv_n;
    s += d * d;
  }
  // evaluate as (k * 2^k * s) / (2^k - 1); the extremes then land on exact
  // integers (k bits / 0 bits) without rounding through the normalization
  return static_cast<double>(cfg.k) * static_cast<double>(n) * s /
         (static_cast<double>(n) - 1.0);
}

// Shannon entropy complement comparator, in bits (0 log 0 := 0).
// Numerically different from information(); provided for comparison only.
inline double shannon_bits(const ProbabilityVector &p) {
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] > 0.0)
      s -= p[i] * std::log2(p[i]);
  return s;
}

//------------------------------------------------------------------------------
// Born-rule outcome probabilities
//------------------------------------------------------------------------------

inline ProbabilityVector measurement_probabilities(const DensityMatrix &rho,
                                                   const MeasurementBasis &basis) {
  if (basis.dim() != rho.dim())
    throw std::invalid_argument(
        "measurement_probabilities: basis dimension does not match state");
  std::vector<double> p(basis.dim());
  for (std::size_t i = 0; i < basis.dim(); ++i)
    p[i] = std::real(inner(basis.vector(i), mat_vec(rho.mat(), basis.vector(i))));
  return ProbabilityVector(std::move(p)); // clamps & renormalizes <= 1e-9 drift
}

} // namespace qinfo
