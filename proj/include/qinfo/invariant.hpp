#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qinfo/format.hpp"
#include "qinfo/measure.hpp"
#include "qinfo/mub.hpp"
#include "qinfo/random.hpp"
#include "qinfo/states.hpp"

namespace qinfo {

//------------------------------------------------------------------------------
// Closed form: total information as a function of purity alone
//------------------------------------------------------------------------------

// k (2^k Tr rho^2 - 1) / (2^k - 1) bits; reduces to 2 Tr rho^2 - 1 for one
// qubit and (2/3)(4 Tr rho^2 - 1) for two qubits.
inline double closed_form_total(const DensityMatrix &rho) {
  const double n = static_cast<double>(rho.dim());
  const double k = static_cast<double>(rho.num_qubits());
  return k * (n * rho.purity() - 1.0) / (n - 1.0);
}

//------------------------------------------------------------------------------
// InformationReport
//------------------------------------------------------------------------------

struct InformationReport {
  int k = 0;
  std::vector<double> phi_params;
  std::vector<std::pair<std::string, double>> per_basis; // (label, I_j bits)
  double total_sum = 0.0;
  double closed_form = 0.0;
  double purity = 0.0;
  // two-qubit only: invariants of the reduced states and the joint residual;
  // the residual is clamped to 0 when within tolerance below it, otherwise
  // reported as computed
  std::optional<std::array<double, 2>> individual;
  std::optional<double> joint;

  double deviation() const { return std::abs(total_sum - closed_form); }
};

//------------------------------------------------------------------------------
// Individual vs joint information (two qubits)
//------------------------------------------------------------------------------

struct DistributionResult {
  double individual_1 = 0.0;
  double individual_2 = 0.0;
  double joint = 0.0;
};

namespace detail {

// raw residual decomposition, shared by the strict op and the report
inline DistributionResult distribution_raw(const DensityMatrix &rho) {
  if (rho.num_qubits() != 2)
    throw std::invalid_argument(
        "information_distribution: only two-qubit states are supported");
  DistributionResult r;
  r.individual_1 = closed_form_total(partial_trace(rho, 1));
  r.individual_2 = closed_form_total(partial_trace(rho, 2));
  r.joint = closed_form_total(rho) - r.individual_1 - r.individual_2;
  return r;
}

} // namespace detail

// Splits the two-qubit total into the invariants of the two reduced states
// plus a joint residual. The residual is negative for some partially mixed
// states (e.g. a pure qubit next to a maximally mixed one); values within
// tolerance below zero are clamped, anything worse is rejected.
inline DistributionResult information_distribution(const DensityMatrix &rho) {
  DistributionResult r = detail::distribution_raw(rho);
  if (r.joint < -kPhysicsTol)
    throw std::domain_error(
        "information_distribution: joint residual is negative (" +
        std::to_string(r.joint) +
        "); the individual/joint split is not defined for this state");
  if (r.joint < 0.0)
    r.joint = 0.0;
  return r;
}

//------------------------------------------------------------------------------
// Total information over a complete complementary set
//------------------------------------------------------------------------------

inline InformationReport total_information(const DensityMatrix &rho,
                                           const MubSet &set) {
  if (set.dim() != rho.dim())
    throw std::invalid_argument("total_information: set dimension does not match state");
  const auto validation = validate_mub(set);
  if (!validation.pass)
    throw std::invalid_argument("total_information: " + validation.summary());

  InformationReport rep;
  rep.k = set.k();
  rep.phi_params = set.phi_params();
  rep.purity = rho.purity();
  rep.closed_form = closed_form_total(rho);

  const auto cfg = InformationMeasureConfig::for_qubits(set.k());
  for (const auto &basis : set.bases()) {
    const double bits = information(measurement_probabilities(rho, basis), cfg);
    rep.per_basis.emplace_back(basis.label(), bits);
    rep.total_sum += bits;
  }

  if (rho.num_qubits() == 2) {
    const auto d = detail::distribution_raw(rho);
    rep.individual = {d.individual_1, d.individual_2};
    rep.joint = (d.joint < 0.0 && d.joint >= -kPhysicsTol) ? 0.0 : d.joint;
  }
  return rep;
}

//------------------------------------------------------------------------------
// Invariance under the choice of complementary set
//------------------------------------------------------------------------------

struct SweepTrial {
  int trial = 0;
  std::uint64_t subseed = 0;
  std::vector<double> phis; // sampled angles (k <= 2)
  std::vector<std::pair<std::string, double>> per_basis;
  double total = 0.0;
  double deviation = 0.0;
};

struct SweepReport {
  int k = 0;
  std::uint64_t seed = 0;
  double purity = 0.0;
  double closed_form = 0.0;
  std::vector<SweepTrial> trials;
  double max_deviation = 0.0;

  bool passed(double tol = kPhysicsTol) const { return max_deviation < tol; }
};

// For each trial: build a fresh complementary set (random phi parameters for
// k <= 2, the fixed Pauli partition for k = 3), rotate it by a seeded random
// unitary, and recompute the total. Every trial derives its randomness from
// an independent sub-seed, so results do not depend on evaluation order.
inline SweepReport invariance_sweep(const DensityMatrix &rho, int k, int trials,
                                    std::uint64_t seed) {
  if (k != rho.num_qubits())
    throw std::invalid_argument("invariance_sweep: k does not match the state");
  if (k > 3)
    throw std::invalid_argument("invariance_sweep: k must be 1, 2 or 3");
  if (trials < 1)
    throw std::invalid_argument("invariance_sweep: trials must be >= 1");

  SweepReport rep;
  rep.k = k;
  rep.seed = seed;
  rep.purity = rho.purity();
  rep.closed_form = closed_form_total(rho);

  const auto cfg = InformationMeasureConfig::for_qubits(k);
  for (int t = 0; t < trials; ++t) {
    SweepTrial row;
    row.trial = t;
    row.subseed = derive_subseed(seed, static_cast<std::uint64_t>(t));
    RandomStream rng(row.subseed);

    MubSet base = [&] {
      switch (k) {
      case 1: {
        const double phi = rng.next_uniform(0.0, 2.0 * std::numbers::pi);
        row.phis = {phi};
        return spin_triple(phi);
      }
      case 2: {
        const double p1 = rng.next_uniform(0.0, 2.0 * std::numbers::pi);
        const double p2 = rng.next_uniform(0.0, 2.0 * std::numbers::pi);
        row.phis = {p1, p2};
        return two_qubit_set(p1, p2);
      }
      default:
        return pauli_partition_mubs(3);
      }
    }();
    const MubSet rotated = rotate_set(base, random_unitary(rho.dim(), rng.next_u64()));

    for (const auto &basis : rotated.bases()) {
      const double bits = information(measurement_probabilities(rho, basis), cfg);
      row.per_basis.emplace_back(basis.label(), bits);
      row.total += bits;
    }
    row.deviation = std::abs(row.total - rep.closed_form);
    rep.max_deviation = std::max(rep.max_deviation, row.deviation);
    rep.trials.push_back(std::move(row));
  }
  return rep;
}

//------------------------------------------------------------------------------
// Conservation under unitary evolution
//------------------------------------------------------------------------------

struct ConservationStep {
  int step = 0; // 0 = initial state, before any unitary
  std::vector<std::pair<std::string, double>> per_basis;
  double total = 0.0;
  double drift = 0.0;
};

struct ConservationReport {
  double initial_total = 0.0;
  double closed_form = 0.0;
  std::vector<ConservationStep> steps;
  double max_drift = 0.0;

  bool passed(double tol = kPhysicsTol) const { return max_drift < tol; }
};

// Applies the unitaries in sequence (piecewise-constant evolution) and
// recomputes the total after each step against the fixed set.
inline ConservationReport conservation_check(const DensityMatrix &rho,
                                             const std::vector<Matrix> &unitaries,
                                             const MubSet &set) {
  const auto cfg = InformationMeasureConfig::for_qubits(set.k());
  auto evaluate = [&](const DensityMatrix &state, int step_index) {
    ConservationStep s;
    s.step = step_index;
    for (const auto &basis : set.bases()) {
      const double bits = information(measurement_probabilities(state, basis), cfg);
      s.per_basis.emplace_back(basis.label(), bits);
      s.total += bits;
    }
    return s;
  };

  ConservationReport rep;
  rep.closed_form = closed_form_total(rho);
  ConservationStep first = evaluate(rho, 0);
  rep.initial_total = first.total;
  rep.steps.push_back(std::move(first));

  DensityMatrix state = rho;
  int index = 1;
  for (const auto &u : unitaries) {
    state = evolve(state, u); // rejects non-unitary steps
    ConservationStep s = evaluate(state, index++);
    s.drift = std::abs(s.total - rep.initial_total);
    rep.max_drift = std::max(rep.max_drift, s.drift);
    rep.steps.push_back(std::move(s));
  }
  return rep;
}

//------------------------------------------------------------------------------
// Mixing scaling: closed_form_total(mix(rho, lambda)) = lambda^2 * total
//------------------------------------------------------------------------------

struct MixingScalingRow {
  double lambda = 0.0;
  double value = 0.0;    // closed_form_total of the mixed state
  double expected = 0.0; // lambda^2 * closed_form_total(rho)
  double deviation = 0.0;
};

struct MixingScalingReport {
  std::vector<MixingScalingRow> rows;
  double max_deviation = 0.0;

  bool passed(double tol = kPhysicsTol) const { return max_deviation < tol; }
};

inline MixingScalingReport mixing_scaling_check(const DensityMatrix &rho,
                                                const std::vector<double> &lambdas) {
  MixingScalingReport rep;
  const double base = closed_form_total(rho);
  for (double lambda : lambdas) {
    MixingScalingRow row;
    row.lambda = lambda;
    row.value = closed_form_total(mix(rho, lambda)); // mix validates the range
    row.expected = lambda * lambda * base;
    row.deviation = std::abs(row.value - row.expected);
    rep.max_deviation = std::max(rep.max_deviation, row.deviation);
    rep.rows.push_back(row);
  }
  return rep;
}

//------------------------------------------------------------------------------
// CSV serialization: (trial, phi_or_seed, basis_label, I_j_bits, total_bits,
// closed_form_bits, deviation), one row per basis per trial
//------------------------------------------------------------------------------

inline const char *kReportCsvHeader =
    "trial,phi_or_seed,basis_label,I_j_bits,total_bits,closed_form_bits,deviation";

inline void append_report_rows(std::ostream &os, int trial,
                               const std::string &phi_or_seed,
                               const std::vector<std::pair<std::string, double>> &per_basis,
                               double total, double closed_form, double deviation) {
  for (const auto &[label, bits] : per_basis)
    os << trial << ',' << phi_or_seed << ',' << label << ',' << fmt_num(bits)
       << ',' << fmt_num(total) << ',' << fmt_num(closed_form) << ','
       << fmt_num(deviation) << "\n";
}

inline std::string sweep_to_csv(const SweepReport &rep) {
  std::ostringstream os;
  os << kReportCsvHeader << "\n";
  for (const auto &t : rep.trials) {
    // k = 1 trials are labelled by the sampled angle, larger k by the sub-seed
    const std::string tag =
        (rep.k == 1 && !t.phis.empty()) ? fmt_phi(t.phis[0]) : std::to_string(t.subseed);
    append_report_rows(os, t.trial, tag, t.per_basis, t.total, rep.closed_form,
                       t.deviation);
  }
  return os.str();
}

} // namespace qinfo
