#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qinfo/linalg.hpp"
#include "qinfo/states.hpp"

namespace qinfo {

//------------------------------------------------------------------------------
// MeasurementBasis: one orthonormal basis = one complementary observation
//------------------------------------------------------------------------------

class MeasurementBasis {
public:
  MeasurementBasis(std::string label, std::vector<Vector> vectors)
      : label_(std::move(label)), vectors_(std::move(vectors)) {
    if (vectors_.empty())
      throw std::invalid_argument("MeasurementBasis: no vectors");
    const std::size_t d = vectors_[0].dim();
    if (vectors_.size() != d)
      throw std::invalid_argument("MeasurementBasis: vector count must equal dimension");
    for (std::size_t i = 0; i < d; ++i) {
      if (vectors_[i].dim() != d)
        throw std::invalid_argument("MeasurementBasis: inconsistent vector dimension");
      for (std::size_t j = 0; j <= i; ++j) {
        const double target = (i == j) ? 1.0 : 0.0;
        if (std::abs(std::abs(inner(vectors_[i], vectors_[j])) - target) > kPhysicsTol)
          throw std::invalid_argument("MeasurementBasis: vectors are not orthonormal");
      }
    }
  }

  const std::string &label() const { return label_; }
  std::size_t dim() const { return vectors_.size(); }
  const std::vector<Vector> &vectors() const { return vectors_; }
  const Vector &vector(std::size_t i) const { return vectors_[i]; }

private:
  std::string label_;
  std::vector<Vector> vectors_;
};

//------------------------------------------------------------------------------
// MubSet: complete set of 2^k + 1 mutually unbiased bases
//------------------------------------------------------------------------------

class MubSet {
public:
  MubSet(int k, std::vector<MeasurementBasis> bases, std::vector<double> phi_params)
      : k_(k), bases_(std::move(bases)), phi_params_(std::move(phi_params)) {
    const std::size_t d = dim_for_qubits(k);
    if (bases_.size() != d + 1)
      throw std::invalid_argument("MubSet: expected 2^k + 1 bases");
    for (const auto &b : bases_)
      if (b.dim() != d)
        throw std::invalid_argument("MubSet: basis dimension does not match k");
  }

  int k() const { return k_; }
  std::size_t m() const { return bases_.size(); }
  std::size_t dim() const { return std::size_t{1} << k_; }
  const std::vector<MeasurementBasis> &bases() const { return bases_; }
  const MeasurementBasis &basis(std::size_t j) const { return bases_[j]; }
  const std::vector<double> &phi_params() const { return phi_params_; }

private:
  int k_;
  std::vector<MeasurementBasis> bases_;
  std::vector<double> phi_params_;
};

//------------------------------------------------------------------------------
// Validation
//------------------------------------------------------------------------------

struct MubValidationReport {
  int k = 0;
  std::size_t m = 0;
  double max_orthonormality_violation = 0.0;
  // worst deviation of |<u|v>|^2 from 1/2^k across distinct bases
  double max_unbiasedness_violation = 0.0;
  double tol = kPhysicsTol;
  bool pass = false;

  std::string summary() const {
    std::ostringstream os;
    os << "mub validation: k=" << k << " m=" << m
       << " max_orthonormality_violation=" << max_orthonormality_violation
       << " max_unbiasedness_violation=" << max_unbiasedness_violation
       << " tol=" << tol << " -> " << (pass ? "PASS" : "FAIL");
    return os.str();
  }
};

inline MubValidationReport validate_mub(const MubSet &set,
                                        double tol = kPhysicsTol) {
  MubValidationReport rep;
  rep.k = set.k();
  rep.m = set.m();
  rep.tol = tol;
  const double target = 1.0 / static_cast<double>(set.dim());
  for (std::size_t a = 0; a < set.m(); ++a) {
    const auto &va = set.basis(a).vectors();
    for (std::size_t i = 0; i < va.size(); ++i)
      for (std::size_t j = 0; j <= i; ++j) {
        const double want = (i == j) ? 1.0 : 0.0;
        const double dev = std::abs(std::abs(inner(va[i], va[j])) - want);
        rep.max_orthonormality_violation =
            std::max(rep.max_orthonormality_violation, dev);
      }
    for (std::size_t b = 0; b < a; ++b) {
      const auto &vb = set.basis(b).vectors();
      for (const auto &u : va)
        for (const auto &v : vb) {
          const double dev = std::abs(std::norm(inner(u, v)) - target);
          rep.max_unbiasedness_violation =
              std::max(rep.max_unbiasedness_violation, dev);
        }
    }
  }
  rep.pass = rep.max_orthonormality_violation < tol &&
             rep.max_unbiasedness_violation < tol;
  return rep;
}

//------------------------------------------------------------------------------
// Stabilizer-projector eigenbases
//------------------------------------------------------------------------------

namespace detail {

// Joint eigenbasis of commuting involutions via products of (I +/- G)/2.
// Outcome order: sign patterns enumerated with the first generator as the
// most significant bit and +1 mapped to bit 0, so for two generators the
// order is (++, +-, -+, --) = (true-true, true-false, false-true, false-false).
inline std::vector<Vector> joint_eigenbasis(const std::vector<Matrix> &generators) {
  const std::size_t g = generators.size();
  const std::size_t n = generators[0].rows();
  if ((std::size_t{1} << g) != n)
    throw std::invalid_argument("joint_eigenbasis: need log2(dim) generators");
  std::vector<Vector> out;
  out.reserve(n);
  for (std::size_t o = 0; o < n; ++o) {
    Matrix proj = Matrix::identity(n);
    for (std::size_t i = 0; i < g; ++i) {
      const double sign = ((o >> (g - 1 - i)) & 1) ? -1.0 : 1.0;
      Matrix term = Matrix::identity(n) + sign * generators[i];
      proj = mat_mul(proj, cplx(0.5) * term);
    }
    // the projector is rank 1; take its largest column as the eigenvector
    std::size_t best = 0;
    double best_norm2 = -1.0;
    for (std::size_t c = 0; c < n; ++c) {
      double s = 0.0;
      for (std::size_t r = 0; r < n; ++r)
        s += std::norm(proj(r, c));
      if (s > best_norm2) {
        best_norm2 = s;
        best = c;
      }
    }
    if (best_norm2 < 1e-16)
      throw std::logic_error("joint_eigenbasis: projector has no support");
    Vector v(n);
    const double inv = 1.0 / std::sqrt(best_norm2);
    for (std::size_t r = 0; r < n; ++r)
      v[r] = proj(r, best) * inv;
    out.push_back(std::move(v));
  }
  return out;
}

inline const Matrix &pauli_from_char(char c) {
  switch (c) {
  case 'I': {
    static const Matrix eye = Matrix::identity(2);
    return eye;
  }
  case 'X':
    return pauli_x();
  case 'Y':
    return pauli_y();
  case 'Z':
    return pauli_z();
  default:
    throw std::invalid_argument(std::string("unknown Pauli letter '") + c + "'");
  }
}

// "XZY" -> X (x) Z (x) Y, leftmost letter acting on qubit 1
inline Matrix pauli_string(const std::string &s) {
  Matrix m = pauli_from_char(s[0]);
  for (std::size_t i = 1; i < s.size(); ++i)
    m = kron(m, pauli_from_char(s[i]));
  return m;
}

// symplectic (x|z) bit representation, used to pick independent generators
inline std::uint32_t symplectic_bits(const std::string &s) {
  std::uint32_t x = 0, z = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c == 'X' || c == 'Y')
      x |= 1u << i;
    if (c == 'Z' || c == 'Y')
      z |= 1u << i;
  }
  return x | (z << 16);
}

inline std::vector<std::string> pick_generators(const std::vector<std::string> &cls,
                                                std::size_t count) {
  std::vector<std::string> gens;
  std::vector<std::uint32_t> span{0};
  for (const auto &p : cls) {
    const std::uint32_t bits = symplectic_bits(p);
    bool inside = false;
    for (std::uint32_t s : span)
      if (s == bits) {
        inside = true;
        break;
      }
    if (inside)
      continue;
    const std::size_t old = span.size();
    for (std::size_t i = 0; i < old; ++i)
      span.push_back(span[i] ^ bits);
    gens.push_back(p);
    if (gens.size() == count)
      break;
  }
  if (gens.size() != count)
    throw std::logic_error("pick_generators: class does not span the group");
  return gens;
}

} // namespace detail

//------------------------------------------------------------------------------
// Pauli partition tables
//------------------------------------------------------------------------------

// Disjoint classes of mutually commuting Pauli operators, 2^k + 1 classes of
// 2^k - 1 operators covering every nontrivial k-qubit Pauli exactly once.
// The k = 3 table comes from the field-multiplication lines of GF(8) mapped
// through a trace-dual basis; the test suite re-verifies commutation,
// disjointness and coverage for every table.
inline const std::vector<std::vector<std::string>> &pauli_partition_table(int k) {
  static const std::vector<std::vector<std::string>> table1 = {
      {"Z"}, {"X"}, {"Y"}};
  static const std::vector<std::vector<std::string>> table2 = {
      {"ZI", "IZ", "ZZ"},
      {"XI", "IX", "XX"},
      {"YI", "IY", "YY"},
      {"ZX", "XY", "YZ"},
      {"ZY", "XZ", "YX"}};
  static const std::vector<std::vector<std::string>> table3 = {
      {"ZII", "IZI", "ZZI", "IIZ", "ZIZ", "IZZ", "ZZZ"},
      {"XII", "IXI", "XXI", "IIX", "XIX", "IXX", "XXX"},
      {"YII", "IXZ", "YXZ", "IZX", "YZX", "IYY", "YYY"},
      {"XIZ", "IYI", "XYZ", "ZIY", "YIX", "ZYY", "YYX"},
      {"YIZ", "IYZ", "YYI", "ZZY", "XZX", "ZXX", "XXY"},
      {"XZI", "ZXZ", "YYZ", "IZY", "XIY", "ZYX", "YXX"},
      {"YZI", "ZXI", "XYI", "IIY", "YZY", "ZXY", "XYY"},
      {"XZZ", "ZYZ", "YXI", "ZZX", "YIY", "IXY", "XYX"},
      {"YZZ", "ZYI", "XXZ", "ZIX", "XZY", "IYX", "YXY"}};
  switch (k) {
  case 1:
    return table1;
  case 2:
    return table2;
  case 3:
    return table3;
  default:
    throw std::invalid_argument("pauli_partition_table: k must be 1, 2 or 3");
  }
}

//------------------------------------------------------------------------------
// Constructions
//------------------------------------------------------------------------------

// Single-qubit complementary triple: directions phi, z, phi + pi/2.
// At phi = 0 this is the x / z / y triple.
inline MubSet spin_triple(double phi) {
  auto dir_basis = [](double theta, std::string label) {
    return MeasurementBasis(std::move(label),
                            {detail::ket_xy(theta, true), detail::ket_xy(theta, false)});
  };
  std::vector<MeasurementBasis> bases;
  bases.push_back(dir_basis(phi, "dir(phi)"));
  bases.emplace_back("z", std::vector<Vector>{detail::ket_z_plus(), detail::ket_z_minus()});
  bases.push_back(dir_basis(phi + std::numbers::pi / 2.0, "dir(phi+pi/2)"));
  return MubSet(1, std::move(bases), {phi});
}

// Complete set of five complementary proposition pairs for two qubits.
// Bases 1-3 are product bases (z/z, phi1/phi2, phi1+pi/2 / phi2+pi/2) with
// outcomes ordered (true-true, true-false, false-true, false-false), where
// "true" means spin-up for the corresponding particle. Bases 4 and 5 are the
// joint eigenbases of the two commuting spin-correlation observables of each
// pair, with the same truth-value outcome order ("true" = the spins agree).
inline MubSet two_qubit_set(double phi1, double phi2) {
  const double half_pi = std::numbers::pi / 2.0;

  auto product_basis = [](const Vector &u_up, const Vector &u_dn,
                          const Vector &v_up, const Vector &v_dn,
                          std::string label) {
    std::vector<Vector> vecs;
    vecs.push_back(kron(u_up, v_up));
    vecs.push_back(kron(u_up, v_dn));
    vecs.push_back(kron(u_dn, v_up));
    vecs.push_back(kron(u_dn, v_dn));
    return MeasurementBasis(std::move(label), std::move(vecs));
  };

  std::vector<MeasurementBasis> bases;
  bases.push_back(product_basis(detail::ket_z_plus(), detail::ket_z_minus(),
                                detail::ket_z_plus(), detail::ket_z_minus(), "pair1"));
  bases.push_back(product_basis(detail::ket_xy(phi1, true), detail::ket_xy(phi1, false),
                                detail::ket_xy(phi2, true), detail::ket_xy(phi2, false),
                                "pair2"));
  bases.push_back(product_basis(detail::ket_xy(phi1 + half_pi, true),
                                detail::ket_xy(phi1 + half_pi, false),
                                detail::ket_xy(phi2 + half_pi, true),
                                detail::ket_xy(phi2 + half_pi, false), "pair3"));

  // pair 4: "spin 1 along z and spin 2 along phi2 agree",
  //         "spin 1 along phi1 and spin 2 along phi2+pi/2 agree"
  const Matrix corr4a = kron(pauli_z(), pauli_xy(phi2));
  const Matrix corr4b = kron(pauli_xy(phi1), pauli_xy(phi2 + half_pi));
  bases.emplace_back("pair4", detail::joint_eigenbasis({corr4a, corr4b}));

  // pair 5: "spin 1 along z and spin 2 along phi2+pi/2 agree",
  //         "spin 1 along phi1 and spin 2 along z agree"
  const Matrix corr5a = kron(pauli_z(), pauli_xy(phi2 + half_pi));
  const Matrix corr5b = kron(pauli_xy(phi1), pauli_z());
  bases.emplace_back("pair5", detail::joint_eigenbasis({corr5a, corr5b}));

  return MubSet(2, std::move(bases), {phi1, phi2});
}

// Complete MUB set from the fixed Pauli partition: each class's common
// eigenbasis, built by multiplying stabilizer projectors (I +/- S)/2.
inline MubSet pauli_partition_mubs(int k) {
  const auto &table = pauli_partition_table(k);
  std::vector<MeasurementBasis> bases;
  bases.reserve(table.size());
  for (std::size_t c = 0; c < table.size(); ++c) {
    const auto gen_strings =
        detail::pick_generators(table[c], static_cast<std::size_t>(k));
    std::vector<Matrix> gens;
    gens.reserve(gen_strings.size());
    for (const auto &s : gen_strings)
      gens.push_back(detail::pauli_string(s));
    bases.emplace_back("class" + std::to_string(c + 1),
                       detail::joint_eigenbasis(gens));
  }
  return MubSet(k, std::move(bases), {});
}

// Apply a unitary to every basis vector; overlaps are preserved, so the
// result is again a complete MUB set.
inline MubSet rotate_set(const MubSet &set, const Matrix &u) {
  if (u.rows() != set.dim() || u.cols() != set.dim())
    throw std::invalid_argument("rotate_set: unitary dimension does not match set");
  if (!is_unitary(u, kPhysicsTol))
    throw std::invalid_argument("rotate_set: matrix is not unitary");
  std::vector<MeasurementBasis> bases;
  bases.reserve(set.m());
  for (const auto &b : set.bases()) {
    std::vector<Vector> vecs;
    vecs.reserve(b.dim());
    for (const auto &v : b.vectors())
      vecs.push_back(mat_vec(u, v));
    bases.emplace_back(b.label(), std::move(vecs));
  }
  return MubSet(set.k(), std::move(bases), set.phi_params());
}

//------------------------------------------------------------------------------
// Text export (consumed by the CLI `mub` subcommand)
//------------------------------------------------------------------------------

inline std::string to_text(const MubSet &set) {
  std::ostringstream os;
  os.precision(15);
  os << "mubset k=" << set.k() << " m=" << set.m();
  if (!set.phi_params().empty()) {
    os << " phi=";
    for (std::size_t i = 0; i < set.phi_params().size(); ++i)
      os << (i ? "," : "") << set.phi_params()[i];
  }
  os << "\n";
  for (std::size_t j = 0; j < set.m(); ++j) {
    const auto &b = set.basis(j);
    os << "basis " << j + 1 << " label=" << b.label() << "\n";
    for (const auto &v : b.vectors()) {
      for (std::size_t i = 0; i < v.dim(); ++i)
        os << (i ? " " : "") << v[i].real() << " " << v[i].imag();
      os << "\n";
    }
  }
  return os.str();
}

} // namespace qinfo
