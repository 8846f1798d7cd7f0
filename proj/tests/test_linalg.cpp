#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace qinfo;
using qtest::random_matrix;

namespace {
const cplx I{0.0, 1.0};
}

TEST_CASE("mat_mul basic products") {
  const Matrix eye = Matrix::identity(2);
  CHECK(approx_equal(mat_mul(eye, eye), eye, 0.0));
  CHECK(approx_equal(mat_mul(pauli_x(), pauli_x()), eye, 0.0));

  // X * Y = i Z, multiplied out by hand
  const Matrix expected{{I, 0.0}, {0.0, -I}};
  CHECK(approx_equal(mat_mul(pauli_x(), pauli_y()), expected, 0.0));
}

TEST_CASE("mat_mul rejects dimension mismatch") {
  Matrix a(2, 3), b(2, 2);
  CHECK_THROWS_AS(mat_mul(a, b), std::invalid_argument);
}

TEST_CASE("adjoint") {
  const Matrix eye = Matrix::identity(2);
  CHECK(approx_equal(adjoint(eye), eye, 0.0));

  const double phi = 0.83;
  const Matrix d{{std::exp(I * phi), 0.0}, {0.0, 1.0}};
  const Matrix d_adj{{std::exp(-I * phi), 0.0}, {0.0, 1.0}};
  CHECK(approx_equal(adjoint(d), d_adj, 0.0));

  // Y is Hermitian, element by element
  CHECK(approx_equal(adjoint(pauli_y()), pauli_y(), 0.0));
}

TEST_CASE("adjoint is an involution (exact)") {
  const Matrix a = random_matrix(4, 4, 11);
  const Matrix back = adjoint(adjoint(a));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      CHECK(back(i, j) == a(i, j));
}

TEST_CASE("kron") {
  CHECK(approx_equal(kron(Matrix::identity(2), Matrix::identity(2)),
                     Matrix::identity(4), 0.0));

  // |0> (x) |1> = (0, 1, 0, 0)
  const Vector v = kron(Vector::basis(2, 0), Vector::basis(2, 1));
  REQUIRE(v.dim() == 4);
  CHECK(v[0] == cplx(0.0));
  CHECK(v[1] == cplx(1.0));
  CHECK(v[2] == cplx(0.0));
  CHECK(v[3] == cplx(0.0));

  // Z (x) X expanded by hand
  const Matrix zx{{0.0, 1.0, 0.0, 0.0},
                  {1.0, 0.0, 0.0, 0.0},
                  {0.0, 0.0, 0.0, -1.0},
                  {0.0, 0.0, -1.0, 0.0}};
  CHECK(approx_equal(kron(pauli_z(), pauli_x()), zx, 0.0));
}

TEST_CASE("trace") {
  CHECK(trace(Matrix::identity(4)) == cplx(4.0));
  CHECK(trace(pauli_z()) == cplx(0.0));

  // rho = I/2: trace(rho^2) = 1/2
  const Matrix rho{{0.5, 0.0}, {0.0, 0.5}};
  CHECK(std::abs(trace(mat_mul(rho, rho)) - cplx(0.5)) < kAlgebraTol);

  CHECK_THROWS_AS(trace(Matrix(2, 3)), std::invalid_argument);
}

TEST_CASE("inner products") {
  const Vector zero = Vector::basis(2, 0);
  const Vector one = Vector::basis(2, 1);
  CHECK(inner(zero, zero) == cplx(1.0));
  CHECK(inner(zero, one) == cplx(0.0));

  const double s = 1.0 / std::sqrt(2.0);
  const Vector plus{s, s};
  CHECK(std::abs(inner(zero, plus) - cplx(s)) < kAlgebraTol);

  // conjugate-linear in the first argument
  const Vector u{I, 0.0};
  CHECK(std::abs(inner(u, zero) - (-I)) < kAlgebraTol);

  CHECK_THROWS_AS(inner(zero, Vector::basis(4, 0)), std::invalid_argument);
}

TEST_CASE("constructors reject non-finite entries") {
  std::vector<cplx> bad{cplx(1.0), cplx(std::nan(""), 0.0)};
  CHECK_THROWS_AS(Vector::from_entries(bad), std::invalid_argument);
  std::vector<cplx> inf{cplx(1.0), cplx(0.0, INFINITY), cplx(0.0), cplx(0.0)};
  CHECK_THROWS_AS(Matrix::from_entries(2, 2, inf), std::invalid_argument);
}

TEST_CASE("mat_mul associativity on random 4x4 triples") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const Matrix a = random_matrix(4, 4, 100 + s);
    const Matrix b = random_matrix(4, 4, 200 + s);
    const Matrix c = random_matrix(4, 4, 300 + s);
    CHECK(max_abs_diff(mat_mul(mat_mul(a, b), c), mat_mul(a, mat_mul(b, c))) <
          kAlgebraTol);
  }
}

TEST_CASE("trace cyclicity on random square pairs") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const Matrix a = random_matrix(4, 4, 400 + s);
    const Matrix b = random_matrix(4, 4, 500 + s);
    CHECK(std::abs(trace(mat_mul(a, b)) - trace(mat_mul(b, a))) < kAlgebraTol);
  }
}

TEST_CASE("kron mixed-product identity") {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const Matrix a = random_matrix(2, 2, 600 + s);
    const Matrix b = random_matrix(2, 2, 700 + s);
    const Matrix c = random_matrix(2, 2, 800 + s);
    const Matrix d = random_matrix(2, 2, 900 + s);
    CHECK(max_abs_diff(mat_mul(kron(a, b), kron(c, d)),
                       kron(mat_mul(a, c), mat_mul(b, d))) < kAlgebraTol);
  }
}
