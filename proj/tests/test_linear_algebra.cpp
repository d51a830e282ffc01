#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <tuple>

#include "quatstat/errors.hpp"
#include "quatstat/expm.hpp"
#include "quatstat/models.hpp"
#include "quatstat/qmatrix.hpp"
#include "quatstat/two_level.hpp"
#include "support.hpp"

using namespace quatstat;
using namespace quatstat::testing;

namespace {

QMatrix spin_h(double omega, double v, double x) {
  return {{Quaternion(0, omega / 2, 0, 0), Quaternion(0, 0, v / x, 0)},
          {Quaternion(0, 0, v * x, 0), Quaternion(0, -omega / 2, 0, 0)}};
}

// Independent exponential for diagonalizable input: V e^D V^{-1}.
ComplexMatrix eigen_exponential(const ComplexMatrix& a) {
  Eigen::ComplexEigenSolver<ComplexMatrix> es(a);
  const ComplexMatrix v = es.eigenvectors();
  const Eigen::VectorXcd d = es.eigenvalues().array().exp();
  return v * d.asDiagonal() * v.inverse();
}

}  // namespace

TEST_CASE("matrix construction") {
  CHECK_THROWS_AS((QMatrix{{1.0, 2.0}, {3.0}}), DimensionMismatch);
  const QMatrix m{{1.0, 2.0}, {3.0, 4.0}};
  CHECK(m.size() == 2);
  CHECK(m(1, 0) == Quaternion(3.0));
  CHECK(QMatrix::identity(3)(2, 2) == Quaternion(1.0));
  CHECK(QMatrix::zero(2).frobenius_norm() == 0.0);
}

TEST_CASE("products") {
  const QMatrix m = random_matrix(3);
  CHECK(max_abs_diff(QMatrix::identity(3) * m, m) == 0.0);
  const QMatrix a = QMatrix::diagonal({Quaternion::i(), -Quaternion::i()});
  const QMatrix b = QMatrix::diagonal({Quaternion::j(), Quaternion::j()});
  CHECK(max_abs_diff(a * b, QMatrix::diagonal({Quaternion::k(), -Quaternion::k()})) == 0.0);
  CHECK_THROWS_AS(mat_mul(QMatrix(2), QMatrix(3)), DimensionMismatch);
}

TEST_CASE("squared spin perturbation is -v^2 times identity") {
  for (double x : {1.0, 2.0, -0.3}) {
    const double v = 0.5;
    const QMatrix hp{{0.0, Quaternion(0, 0, v / x, 0)}, {Quaternion(0, 0, v * x, 0), 0.0}};
    CHECK(max_abs_diff(hp * hp, QMatrix::identity(2) * (-v * v)) <= 1e-15);
  }
}

TEST_CASE("dagger") {
  const double w = 2.0;
  const QMatrix h0 = QMatrix::diagonal({Quaternion(0, w / 2, 0, 0), Quaternion(0, -w / 2, 0, 0)});
  CHECK(max_abs_diff(dagger(h0), QMatrix::diagonal({Quaternion(0, -w / 2, 0, 0),
                                                    Quaternion(0, w / 2, 0, 0)})) == 0.0);
  CHECK(dagger(QMatrix::identity(2)) == QMatrix::identity(2));
  const double phi = 0.4;
  const QMatrix q = QMatrix::diagonal({qubit_entry(phi), 0.0});
  CHECK(max_abs_diff(dagger(q), QMatrix::diagonal({-qubit_entry(phi), 0.0})) == 0.0);
  for (int n = 0; n < 50; ++n) {
    const QMatrix m = random_matrix(3);
    CHECK(dagger(dagger(m)) == m);
    const QMatrix p = random_matrix(3);
    CHECK(max_abs_diff(dagger(m * p), dagger(p) * dagger(m)) <= 1e-14);
  }
}

TEST_CASE("embedding is a homomorphism compatible with the adjoint") {
  CHECK((embed(QMatrix::identity(3)) - ComplexMatrix::Identity(6, 6)).norm() == 0.0);
  for (int n = 0; n < 200; ++n) {
    const std::size_t dim = 2 + n % 2;
    const QMatrix a = random_matrix(dim), b = random_matrix(dim);
    CHECK((embed(a * b) - embed(a) * embed(b)).norm() <=
          1e-12 * a.frobenius_norm() * b.frobenius_norm());
    CHECK((embed(dagger(a)) - embed(a).adjoint()).norm() == 0.0);
    CHECK(unembed(embed(a)) == a);
  }
}

TEST_CASE("unembed rejects broken block symmetry") {
  ComplexMatrix x = embed(random_matrix(2));
  x(3, 3) += Complex(1e-3, 0);
  CHECK_THROWS_AS(unembed(x), NotSymplectic);
  CHECK_THROWS_AS(unembed(ComplexMatrix::Identity(3, 3)), DimensionMismatch);
}

TEST_CASE("re_trace") {
  CHECK(re_trace(QMatrix::identity(2)) == 2.0);
  CHECK(re_trace(QMatrix::diagonal({Quaternion::i(), -Quaternion::i()})) == 0.0);
  for (int n = 0; n < 100; ++n) {
    const QMatrix m = random_matrix(3);
    CHECK(re_trace(m) == doctest::Approx(embed(m).trace().real() / 2.0).epsilon(1e-14));
  }
}

TEST_CASE("inverse through the embedding") {
  for (int n = 0; n < 50; ++n) {
    const QMatrix m = random_matrix(3) + QMatrix::identity(3) * 2.0;
    CHECK(max_abs_diff(m * inverse(m), QMatrix::identity(3)) <= 1e-12);
    CHECK(max_abs_diff(inverse(m) * m, QMatrix::identity(3)) <= 1e-12);
  }
  CHECK_THROWS_AS(inverse(QMatrix(2)), ZeroDivision);
}

TEST_CASE("exponential of special matrices") {
  CHECK(max_abs_diff(mat_exp(QMatrix(3), 1.7), QMatrix::identity(3)) == 0.0);
  const Complex a{0.3, 1.1}, b{-0.2, -0.7};
  const double t = 0.8;
  const QMatrix d = QMatrix::diagonal({Quaternion::from_complex(a), Quaternion::from_complex(b)});
  const QMatrix e = mat_exp(d, t);
  CHECK(approx_equal(e(0, 0), Quaternion::from_complex(std::exp(a * t)), 1e-14));
  CHECK(approx_equal(e(1, 1), Quaternion::from_complex(std::exp(b * t)), 1e-14));
  CHECK(e(0, 1).norm() == 0.0);
}

TEST_CASE("spin propagator re-trace is 2 cos(w t/2) cos(v t)") {
  for (double x : {1.0, 2.0}) {
    for (double t : {0.0, 0.3, 1.0, 2.5, 7.0}) {
      const double w = 2.0, v = 0.5;
      const double got = re_trace(mat_exp(spin_h(w, v, x), -t));
      CHECK(got == doctest::Approx(2 * std::cos(w * t / 2) * std::cos(v * t)).epsilon(1e-12));
    }
  }
}

TEST_CASE("exponential matches eigendecomposition across Pade regimes") {
  for (double norm : {1e-3, 0.1, 0.5, 1.5, 4.0, 30.0, 200.0}) {
    for (int n = 0; n < 10; ++n) {
      const QMatrix h = random_anti_hermitian(2);
      const QMatrix scaled = h * (norm / embed(h).cwiseAbs().colwise().sum().maxCoeff());
      const ComplexMatrix got = expm(embed(scaled));
      const ComplexMatrix want = eigen_exponential(embed(scaled));
      CHECK((got - want).norm() <= 1e-12 * std::max(1.0, norm));
    }
  }
}

TEST_CASE("exponential semigroup and RK4 oracle") {
  for (int n = 0; n < 30; ++n) {
    QMatrix m = random_matrix(2);
    m = m * (2.0 / m.frobenius_norm());
    const double s = 0.4, t = 0.7;
    CHECK(max_abs_diff(mat_exp(m, s + t), mat_exp(m, s) * mat_exp(m, t)) <= 1e-10);
    const ComplexMatrix oracle = rk4_exponential(embed(m), 1.0, 2000);
    CHECK((embed(mat_exp(m, 1.0)) - oracle).cwiseAbs().maxCoeff() <= 1e-8);
  }
}

TEST_CASE("exponential overflow and shape errors") {
  CHECK_THROWS_AS(mat_exp(QMatrix::identity(2) * 1000.0, 1.0), Overflow);
  ComplexMatrix bad = ComplexMatrix::Identity(2, 2);
  bad(0, 1) = Complex(std::numeric_limits<double>::infinity(), 0);
  CHECK_THROWS_AS(expm(bad), Overflow);
  CHECK_THROWS_AS(expm(ComplexMatrix::Zero(2, 3)), DimensionMismatch);
}

TEST_CASE("standard spectrum of the spin Hamiltonian") {
  const auto s = standard_spectrum(spin_h(2.0, 0.5, 1.0));
  REQUIRE(s.size() == 2);
  CHECK(std::abs(s[0].value - Complex(0, 1.5)) <= 1e-12);
  CHECK(std::abs(s[1].value - Complex(0, 0.5)) <= 1e-12);
  CHECK(s[0].multiplicity == 1);
  CHECK_THROWS_AS(standard_spectrum(spin_h(2.0, 0.5, 2.0)), NotNormal);
}

TEST_CASE("standard spectrum of zero and of the qubit matrix") {
  const auto z = standard_spectrum(QMatrix(3));
  REQUIRE(z.size() == 1);
  CHECK(z[0].multiplicity == 3);
  CHECK(std::abs(z[0].value) <= 1e-15);
  for (double phi : {0.0, 0.9, 2.2, -1.3}) {
    const auto q = standard_spectrum(QMatrix::diagonal({qubit_entry(phi), 0.0}));
    REQUIRE(q.size() == 2);
    CHECK(std::abs(q[0].value - Complex(0, 2)) <= 1e-12);
    CHECK(std::abs(q[1].value) <= 1e-12);
  }
}

TEST_CASE("embedding eigenvalues pair under conjugation") {
  for (int n = 0; n < 50; ++n) {
    const auto ev = embedding_eigenvalues(random_matrix(3));
    for (const Complex& l : ev) {
      const double gap = std::transform_reduce(
          ev.begin(), ev.end(), 1e300, [](double a, double b) { return std::min(a, b); },
          [&](const Complex& m) { return std::abs(m - std::conj(l)); });
      CHECK(gap <= 1e-9);
    }
  }
}

TEST_CASE("anti-Hermitian spectra are imaginary") {
  for (int n = 0; n < 50; ++n) {
    for (const SpectralClass& c : standard_spectrum(random_anti_hermitian(3))) {
      CHECK(std::abs(c.value.real()) <= 1e-10);
    }
  }
}

TEST_CASE("continued energies keep the sign of each branch") {
  const auto split = [](double w, double v, double x) {
    const QMatrix h = spin_h(w, v, x);
    return std::pair{QMatrix::diagonal({h(0, 0), h(1, 1)}),
                     QMatrix{{0.0, h(0, 1)}, {h(1, 0), 0.0}}};
  };
  for (double x : {1.0, 2.0, 0.5}) {
    auto [h0, hp] = split(2.0, 0.5, x);
    auto e = continued_energies(h0, hp);
    CHECK(e[0] == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(e[1] == doctest::Approx(1.5).epsilon(1e-10));
    std::tie(h0, hp) = split(2.0, 1.5, x);
    e = continued_energies(h0, hp);
    CHECK(e[0] == doctest::Approx(-0.5).epsilon(1e-10));
    CHECK(e[1] == doctest::Approx(2.5).epsilon(1e-10));
  }
  // a real diagonal entry is not of the form iE
  CHECK_THROWS_AS(continued_energies(QMatrix::identity(2), QMatrix(2)), ConstraintViolation);
}

TEST_CASE("right eigenvector check is blind to right rescaling") {
  const SpinModelParams p{2.0, 0.5, 2.0};
  const QMatrix h = spin_h(p.omega, p.v, p.x);
  const auto psi = spin_eigenvectors(p);
  const EigenCheck plus = check_right_eigenvector(h, psi[0]);
  CHECK(plus.residual <= 1e-12);
  CHECK(are_similar(plus.eigenvalue, Quaternion(0, 1.5, 0, 0), 1e-12));
  const EigenCheck scaled = check_right_eigenvector(h, scale_right(psi[1], {0.3, -1, 2, 0.5}));
  CHECK(scaled.residual <= 1e-12);
  CHECK(are_similar(scaled.eigenvalue, Quaternion(0, 0.5, 0, 0), 1e-12));
  CHECK(check_right_eigenvector(h, {1.0, 0.0}).residual > 0.1);
}

TEST_CASE("matrix JSON schema") {
  const QMatrix m = random_matrix(2);
  CHECK(qmatrix_from_json(to_json(m)) == m);
  const auto ragged = nlohmann::json::parse(
      R"({"n": 2, "entries": [[[0,0,0,0],[1,0,0,0]], [[0,0,0,0]]]})");
  CHECK_THROWS_AS(qmatrix_from_json(ragged), ParseError);
  const auto short_q = nlohmann::json::parse(R"({"n": 1, "entries": [[[0,0,0]]]})");
  CHECK_THROWS_AS(qmatrix_from_json(short_q), ParseError);
  CHECK_THROWS_AS(qmatrix_from_json(nlohmann::json::parse(R"({"entries": []})")), ParseError);
}
