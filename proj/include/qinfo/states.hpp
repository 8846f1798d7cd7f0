#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "qinfo/linalg.hpp"
#include "qinfo/random.hpp"

// Conventions used throughout:
//   |z+> = (1, 0), |z-> = (0, 1).
//   Spin-up along direction phi in the x-y plane (angle measured from the
//   x axis) is (|z+> + e^{i phi} |z->)/sqrt(2); spin-down flips the sign.
//   In tensor products qubit 1 is the left (most significant) factor.
//   Global phase is never normalized away; pure states compare equal when
//   |<psi|chi>|^2 = 1 within tolerance.

namespace qinfo {

inline constexpr int kMaxQubits = 4;

inline std::size_t dim_for_qubits(int k) {
  if (k < 1 || k > kMaxQubits)
    throw std::invalid_argument("qubit count must be in [1, " +
                                std::to_string(kMaxQubits) + "]");
  return std::size_t{1} << k;
}

//------------------------------------------------------------------------------
// PureState
//------------------------------------------------------------------------------

class PureState {
public:
  PureState(int num_qubits, Vector ket)
      : num_qubits_(num_qubits), ket_(std::move(ket)) {
    if (ket_.dim() != dim_for_qubits(num_qubits))
      throw std::invalid_argument("PureState: ket dimension does not match qubit count");
    if (std::abs(ket_.norm() - 1.0) > kPhysicsTol)
      throw std::invalid_argument("PureState: ket is not normalized");
  }

  int num_qubits() const { return num_qubits_; }
  const Vector &ket() const { return ket_; }

private:
  int num_qubits_;
  Vector ket_;
};

// |<a|b>|^2 = 1 up to tolerance: equal as physical states
inline bool same_state(const PureState &a, const PureState &b,
                       double tol = kPhysicsTol) {
  if (a.num_qubits() != b.num_qubits())
    return false;
  return std::abs(std::norm(inner(a.ket(), b.ket())) - 1.0) <= tol;
}

//------------------------------------------------------------------------------
// DensityMatrix
//------------------------------------------------------------------------------

class DensityMatrix {
public:
  // Validating factory for untrusted input (file parser, user matrices):
  // checks Hermiticity, unit trace, purity range, and positive
  // semidefiniteness by sampling 1000 seeded random unit vectors.
  static DensityMatrix from_matrix(int num_qubits, Matrix mat) {
    const std::size_t n = dim_for_qubits(num_qubits);
    if (mat.rows() != n || mat.cols() != n)
      throw std::invalid_argument("DensityMatrix: matrix dimension does not match qubit count");
    if (!is_hermitian(mat, kPhysicsTol))
      throw std::invalid_argument("DensityMatrix: matrix is not Hermitian");
    if (std::abs(trace(mat) - cplx(1.0)) > kPhysicsTol)
      throw std::invalid_argument("DensityMatrix: trace is not 1");
    DensityMatrix rho(num_qubits, std::move(mat), Trusted{});
    const double p = rho.purity();
    if (p < 1.0 / static_cast<double>(n) - kPhysicsTol || p > 1.0 + kPhysicsTol)
      throw std::invalid_argument("DensityMatrix: purity outside [1/2^k, 1]");
    rho.check_positive_sampled();
    return rho;
  }

  int num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return mat_.rows(); }
  const Matrix &mat() const { return mat_; }

  // real(Tr rho^2), clamped to [1/2^k, 1] when within tolerance of the bounds
  double purity() const {
    double s = 0.0;
    for (std::size_t i = 0; i < mat_.rows(); ++i)
      for (std::size_t j = 0; j < mat_.cols(); ++j)
        s += std::norm(mat_(i, j)); // Tr rho^2 = sum |rho_ij|^2 for Hermitian rho
    const double lo = 1.0 / static_cast<double>(dim());
    if (s < lo && s > lo - kPhysicsTol)
      return lo;
    if (s > 1.0 && s < 1.0 + kPhysicsTol)
      return 1.0;
    return s;
  }

  struct Trusted {}; // tag for constructions that preserve validity structurally

  DensityMatrix(int num_qubits, Matrix mat, Trusted)
      : num_qubits_(num_qubits), mat_(std::move(mat)) {}

private:
  void check_positive_sampled() const {
    RandomStream rng(0x9D5DFE1CB6C0FF35ULL);
    const std::size_t n = dim();
    for (int s = 0; s < 1000; ++s) {
      Vector v(n);
      double norm2 = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        v[i] = cplx(rng.next_gaussian(), rng.next_gaussian());
        norm2 += std::norm(v[i]);
      }
      const double inv = 1.0 / std::sqrt(norm2);
      for (std::size_t i = 0; i < n; ++i)
        v[i] *= inv;
      if (std::real(inner(v, mat_vec(mat_, v))) < -kPhysicsTol)
        throw std::invalid_argument("DensityMatrix: matrix is not positive semidefinite");
    }
  }

  int num_qubits_;
  Matrix mat_;
};

//------------------------------------------------------------------------------
// Construction
//------------------------------------------------------------------------------

inline DensityMatrix pure_to_density(const PureState &s) {
  return DensityMatrix(s.num_qubits(), outer(s.ket(), s.ket()),
                       DensityMatrix::Trusted{});
}

inline double purity(const DensityMatrix &rho) { return rho.purity(); }

namespace detail {

inline Vector ket_z_plus() { return Vector::basis(2, 0); }
inline Vector ket_z_minus() { return Vector::basis(2, 1); }

// spin-up/down along angle phi in the x-y plane
inline Vector ket_xy(double phi, bool up) {
  const double inv = 1.0 / std::sqrt(2.0);
  Vector v(2);
  v[0] = inv;
  v[1] = (up ? inv : -inv) * std::exp(cplx(0.0, phi));
  return v;
}

} // namespace detail

// Named states:
//   z+, z-                  one qubit, no parameters
//   x+(phi), y+(phi)        spin-up along phi resp. phi+pi/2, one angle
//   prod(z-,z+)             |z->|z+>, no parameters
//   bell(phi1, phi2)        (i|z+>|x(phi2)+> + |z->|x(phi2)->)/sqrt(2)
//   ghz(k)                  (|0...0> + |1...1>)/sqrt(2), k in [1,4]
inline PureState named_state(const std::string &name,
                             const std::vector<double> &params = {}) {
  auto expect_params = [&](std::size_t n) {
    if (params.size() != n)
      throw std::invalid_argument("named_state: '" + name + "' expects " +
                                  std::to_string(n) + " parameter(s), got " +
                                  std::to_string(params.size()));
  };
  if (name == "z+") {
    expect_params(0);
    return PureState(1, detail::ket_z_plus());
  }
  if (name == "z-") {
    expect_params(0);
    return PureState(1, detail::ket_z_minus());
  }
  if (name == "x+") {
    expect_params(1);
    return PureState(1, detail::ket_xy(params[0], true));
  }
  if (name == "y+") {
    expect_params(1);
    return PureState(1, detail::ket_xy(params[0] + std::numbers::pi / 2.0, true));
  }
  if (name == "prod") {
    expect_params(0);
    return PureState(2, kron(detail::ket_z_minus(), detail::ket_z_plus()));
  }
  if (name == "bell") {
    expect_params(2);
    const double phi2 = params[1]; // the ket does not involve phi1
    const cplx i_unit(0.0, 1.0);
    Vector v = (1.0 / std::sqrt(2.0)) *
               (i_unit * kron(detail::ket_z_plus(), detail::ket_xy(phi2, true)) +
                kron(detail::ket_z_minus(), detail::ket_xy(phi2, false)));
    return PureState(2, std::move(v));
  }
  if (name == "ghz") {
    expect_params(1);
    const int k = static_cast<int>(params[0]);
    const std::size_t n = dim_for_qubits(k);
    Vector v(n);
    v[0] = 1.0 / std::sqrt(2.0);
    v[n - 1] = 1.0 / std::sqrt(2.0);
    return PureState(k, std::move(v));
  }
  throw std::invalid_argument("named_state: unknown state '" + name + "'");
}

//------------------------------------------------------------------------------
// Transformations
//------------------------------------------------------------------------------

// reduced state of one qubit of a two-qubit system; keep is 1 or 2
inline DensityMatrix partial_trace(const DensityMatrix &rho, int keep) {
  if (rho.num_qubits() != 2)
    throw std::invalid_argument("partial_trace: only two-qubit states are supported");
  if (keep != 1 && keep != 2)
    throw std::invalid_argument("partial_trace: keep must be 1 or 2");
  const Matrix &m = rho.mat();
  Matrix out(2, 2);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) {
      cplx s = 0.0;
      for (std::size_t t = 0; t < 2; ++t)
        s += (keep == 1) ? m(2 * a + t, 2 * b + t) : m(2 * t + a, 2 * t + b);
      out(a, b) = s;
    }
  return DensityMatrix(1, std::move(out), DensityMatrix::Trusted{});
}

// lambda * rho + (1 - lambda) * I / 2^k
inline DensityMatrix mix(const DensityMatrix &rho, double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0))
    throw std::invalid_argument("mix: lambda must be in [0, 1]");
  const std::size_t n = rho.dim();
  Matrix out(n, n);
  const double off = (1.0 - lambda) / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out(i, j) = lambda * rho.mat()(i, j) + (i == j ? off : 0.0);
  return DensityMatrix(rho.num_qubits(), std::move(out), DensityMatrix::Trusted{});
}

// U rho U^dagger
inline DensityMatrix evolve(const DensityMatrix &rho, const Matrix &u) {
  if (u.rows() != rho.dim() || u.cols() != rho.dim())
    throw std::invalid_argument("evolve: unitary dimension does not match state");
  if (!is_unitary(u, kPhysicsTol))
    throw std::invalid_argument("evolve: matrix is not unitary");
  return DensityMatrix(rho.num_qubits(), mat_mul(mat_mul(u, rho.mat()), adjoint(u)),
                       DensityMatrix::Trusted{});
}

//------------------------------------------------------------------------------
// Seeded random unitaries (Gram-Schmidt on a complex Gaussian matrix)
//------------------------------------------------------------------------------

inline Matrix random_unitary(std::size_t dim, std::uint64_t seed) {
  if (dim != 2 && dim != 4 && dim != 8 && dim != 16)
    throw std::invalid_argument("random_unitary: dim must be one of {2, 4, 8, 16}");
  RandomStream rng(seed);
  Matrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      m(i, j) = cplx(rng.next_gaussian(), rng.next_gaussian());
  // modified Gram-Schmidt on the columns
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t p = 0; p < j; ++p) {
      cplx proj = 0.0;
      for (std::size_t i = 0; i < dim; ++i)
        proj += std::conj(m(i, p)) * m(i, j);
      for (std::size_t i = 0; i < dim; ++i)
        m(i, j) -= proj * m(i, p);
    }
    double norm2 = 0.0;
    for (std::size_t i = 0; i < dim; ++i)
      norm2 += std::norm(m(i, j));
    const double inv = 1.0 / std::sqrt(norm2);
    for (std::size_t i = 0; i < dim; ++i)
      m(i, j) *= inv;
  }
  return m;
}

// random pure state: normalized complex Gaussian ket
inline PureState random_pure_state(int num_qubits, std::uint64_t seed) {
  const std::size_t n = dim_for_qubits(num_qubits);
  RandomStream rng(seed);
  Vector v(n);
  double norm2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = cplx(rng.next_gaussian(), rng.next_gaussian());
    norm2 += std::norm(v[i]);
  }
  const double inv = 1.0 / std::sqrt(norm2);
  for (std::size_t i = 0; i < n; ++i)
    v[i] *= inv;
  return PureState(num_qubits, std::move(v));
}

// random mixed state: mix(random pure, lambda) with seeded lambda, which is
// positive semidefinite by construction (no eigensolver needed)
inline DensityMatrix random_mixed_state(int num_qubits, std::uint64_t seed) {
  RandomStream rng(seed ^ 0x517CC1B727220A95ULL);
  const double lambda = rng.next_double();
  return mix(pure_to_density(random_pure_state(num_qubits, seed)), lambda);
}

} // namespace qinfo
