#pragma once

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qinfo/format.hpp"
#include "qinfo/invariant.hpp"
#include "qinfo/measure.hpp"
#include "qinfo/mub.hpp"
#include "qinfo/states.hpp"

// Mach-Zehnder model. Path basis: index 0 = upper path, index 1 = lower path.
// The phase shifter sits on the upper arm, diag(e^{i phi}, 1); the 50:50 beam
// splitter is fixed to (1/sqrt(2)) [[1, i], [i, 1]]; "upper detector" is
// output index 0. Under this convention the output arrangement at phase phi
// measures spin along direction phi - pi/2 in the x-y plane (upper output =
// spin-up, upper path = |z+>), so the three arrangements at phase phi realize
// the complementary triple spin_triple(phi - pi/2).

namespace qinfo {

enum class MziMode {
  output_at_phi,              // arrangement (a): detectors behind the beam splitter
  which_path,                 // arrangement (b): nondestructive path detectors
  output_at_phi_plus_half_pi, // arrangement (c): extra pi/2 phase shift
};

struct MziArrangement {
  double phase = 0.0;
  MziMode mode = MziMode::output_at_phi;

  MziArrangement(double phase_, MziMode mode_) : phase(phase_), mode(mode_) {
    if (!std::isfinite(phase))
      throw std::invalid_argument("MziArrangement: phase must be finite");
  }
};

// single qubit in the path basis
struct MziState {
  PureState qubit;

  explicit MziState(PureState s) : qubit(std::move(s)) {
    if (qubit.num_qubits() != 1)
      throw std::invalid_argument("MziState: expected a single qubit");
  }
};

inline const Matrix &beam_splitter() {
  static const Matrix b{{cplx(1.0 / std::sqrt(2.0)), cplx(0.0, 1.0 / std::sqrt(2.0))},
                        {cplx(0.0, 1.0 / std::sqrt(2.0)), cplx(1.0 / std::sqrt(2.0))}};
  return b;
}

inline Matrix phase_shifter(double phi) {
  Matrix m(2, 2);
  m(0, 0) = std::exp(cplx(0.0, phi));
  m(1, 1) = 1.0;
  return m;
}

namespace detail {

// measurement basis of the output detectors at phase phi: row i of B * PS(phi)
// conjugated, i.e. the kets (B * PS(phi))^dagger |i>
inline MeasurementBasis output_basis(double phi, std::string label) {
  const Matrix u = adjoint(mat_mul(beam_splitter(), phase_shifter(phi)));
  std::vector<Vector> vecs;
  for (std::size_t i = 0; i < 2; ++i)
    vecs.push_back(mat_vec(u, Vector::basis(2, i)));
  return MeasurementBasis(std::move(label), std::move(vecs));
}

inline MeasurementBasis path_basis() {
  return MeasurementBasis("path", {Vector::basis(2, 0), Vector::basis(2, 1)});
}

} // namespace detail

// The three mutually complementary arrangements as one complete set:
// output basis at phi, path basis, output basis at phi + pi/2.
inline MubSet mzi_propositions(double phi) {
  std::vector<MeasurementBasis> bases;
  bases.push_back(detail::output_basis(phi, "out(phi)"));
  bases.push_back(detail::path_basis());
  bases.push_back(detail::output_basis(phi + std::numbers::pi / 2.0, "out(phi+pi/2)"));
  return MubSet(1, std::move(bases), {phi});
}

inline ProbabilityVector run_mzi(const DensityMatrix &rho,
                                 const MziArrangement &arr) {
  if (rho.num_qubits() != 1)
    throw std::invalid_argument("run_mzi: expected a single qubit");
  switch (arr.mode) {
  case MziMode::output_at_phi:
    return measurement_probabilities(rho, detail::output_basis(arr.phase, "out"));
  case MziMode::which_path:
    return measurement_probabilities(rho, detail::path_basis());
  case MziMode::output_at_phi_plus_half_pi:
    return measurement_probabilities(
        rho, detail::output_basis(arr.phase + std::numbers::pi / 2.0, "out"));
  }
  throw std::logic_error("run_mzi: unknown mode");
}

inline ProbabilityVector run_mzi(const MziState &state, const MziArrangement &arr) {
  return run_mzi(pure_to_density(state.qubit), arr);
}

//------------------------------------------------------------------------------
// Phase sweep
//------------------------------------------------------------------------------

struct MziSweepRow {
  double phi = 0.0;
  double p_upper_a = 0.0;
  double p_upper_b = 0.0;
  double p_upper_c = 0.0;
  double i_a = 0.0;
  double i_b = 0.0;
  double i_c = 0.0;
  double i_total = 0.0;
};

struct MziSweepTable {
  std::vector<MziSweepRow> rows;
  double max_total_spread = 0.0; // max |i_total - first row's i_total|
};

// samples evenly spaced phi over [0, 2pi); i_total is phi-independent
inline MziSweepTable phi_sweep(const DensityMatrix &rho, int samples) {
  if (rho.num_qubits() != 1)
    throw std::invalid_argument("phi_sweep: expected a single qubit");
  if (samples < 2)
    throw std::invalid_argument("phi_sweep: need at least 2 samples");
  const auto cfg = InformationMeasureConfig::for_qubits(1);
  MziSweepTable table;
  for (int s = 0; s < samples; ++s) {
    const double phi = 2.0 * std::numbers::pi * static_cast<double>(s) /
                       static_cast<double>(samples);
    MziSweepRow row;
    row.phi = phi;
    const auto pa = run_mzi(rho, {phi, MziMode::output_at_phi});
    const auto pb = run_mzi(rho, {phi, MziMode::which_path});
    const auto pc = run_mzi(rho, {phi, MziMode::output_at_phi_plus_half_pi});
    row.p_upper_a = pa[0];
    row.p_upper_b = pb[0];
    row.p_upper_c = pc[0];
    row.i_a = information(pa, cfg);
    row.i_b = information(pb, cfg);
    row.i_c = information(pc, cfg);
    row.i_total = row.i_a + row.i_b + row.i_c;
    if (!table.rows.empty())
      table.max_total_spread = std::max(
          table.max_total_spread, std::abs(row.i_total - table.rows[0].i_total));
    table.rows.push_back(row);
  }
  return table;
}

inline MziSweepTable phi_sweep(const MziState &state, int samples) {
  return phi_sweep(pure_to_density(state.qubit), samples);
}

inline const char *kMziCsvHeader =
    "phi,p_upper_a,p_upper_b,p_upper_c,I_a,I_b,I_c,I_total";

inline std::string sweep_to_csv(const MziSweepTable &table) {
  std::ostringstream os;
  os << kMziCsvHeader << "\n";
  for (const auto &r : table.rows)
    os << fmt_phi(r.phi) << ',' << fmt_num(r.p_upper_a) << ','
       << fmt_num(r.p_upper_b) << ',' << fmt_num(r.p_upper_c) << ','
       << fmt_num(r.i_a) << ',' << fmt_num(r.i_b) << ',' << fmt_num(r.i_c)
       << ',' << fmt_num(r.i_total) << "\n";
  return os.str();
}

} // namespace qinfo
