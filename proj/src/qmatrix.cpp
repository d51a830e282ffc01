#include "quatstat/qmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>

#include "quatstat/errors.hpp"
#include "quatstat/expm.hpp"

namespace quatstat {

QMatrix::QMatrix(std::size_t n) : n_(n), data_(n * n) {}

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Quaternion>> rows)
    : n_(rows.size()) {
  data_.reserve(n_ * n_);
  for (const auto& row : rows) {
    if (row.size() != n_) {
      throw DimensionMismatch("QMatrix rows must all have length n");
    }
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n);
  for (std::size_t r = 0; r < n; ++r) m(r, r) = 1.0;
  return m;
}

QMatrix QMatrix::diagonal(const std::vector<Quaternion>& diag) {
  QMatrix m(diag.size());
  for (std::size_t r = 0; r < diag.size(); ++r) m(r, r) = diag[r];
  return m;
}

bool QMatrix::is_finite() const {
  return std::all_of(data_.begin(), data_.end(), [](const Quaternion& q) { return q.is_finite(); });
}

bool QMatrix::is_diagonal(double tol) const {
  for (std::size_t r = 0; r < n_; ++r) {
    for (std::size_t c = 0; c < n_; ++c) {
      if (r != c && (*this)(r, c).norm() > tol) return false;
    }
  }
  return true;
}

bool QMatrix::is_complex(double tol) const {
  return std::all_of(data_.begin(), data_.end(), [tol](const Quaternion& q) {
    return std::abs(q.q2) <= tol && std::abs(q.q3) <= tol;
  });
}

double QMatrix::frobenius_norm() const {
  double sum = 0.0;
  for (const auto& q : data_) sum += q.norm_squared();
  return std::sqrt(sum);
}

QMatrix& QMatrix::operator+=(const QMatrix& o) {
  if (o.n_ != n_) throw DimensionMismatch("matrix sum of different sizes");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

QMatrix& QMatrix::operator-=(const QMatrix& o) {
  if (o.n_ != n_) throw DimensionMismatch("matrix difference of different sizes");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

QMatrix& QMatrix::operator*=(double s) {
  for (auto& q : data_) q *= s;
  return *this;
}

QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
QMatrix operator-(QMatrix a, const QMatrix& b) { return a -= b; }
QMatrix operator-(QMatrix a) { return a *= -1.0; }
QMatrix operator*(QMatrix a, double s) { return a *= s; }
QMatrix operator*(double s, QMatrix a) { return a *= s; }
QMatrix operator*(const QMatrix& a, const QMatrix& b) { return mat_mul(a, b); }

QMatrix mat_mul(const QMatrix& a, const QMatrix& b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw DimensionMismatch("mat_mul of different sizes");
  QMatrix out(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      Quaternion acc;
      // Order matters: left factor from a, right factor from b.
      for (std::size_t k = 0; k < n; ++k) acc += qmul(a(r, k), b(k, c));
      out(r, c) = acc;
    }
  }
  return out;
}

QVector mat_vec(const QMatrix& a, const QVector& v) {
  const std::size_t n = a.size();
  if (v.size() != n) throw DimensionMismatch("mat_vec size mismatch");
  QVector out(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) out[r] += qmul(a(r, k), v[k]);
  }
  return out;
}

QVector scale_right(const QVector& v, const Quaternion& q) {
  QVector out(v.size());
  std::transform(v.begin(), v.end(), out.begin(), [&q](const Quaternion& x) { return qmul(x, q); });
  return out;
}

QMatrix outer(const QVector& v, const QVector& w) {
  if (v.size() != w.size()) throw DimensionMismatch("outer product size mismatch");
  QMatrix out(v.size());
  for (std::size_t r = 0; r < v.size(); ++r) {
    for (std::size_t c = 0; c < w.size(); ++c) out(r, c) = qmul(v[r], qconj(w[c]));
  }
  return out;
}

Quaternion inner(const QVector& v, const QVector& w) {
  if (v.size() != w.size()) throw DimensionMismatch("inner product size mismatch");
  Quaternion acc;
  for (std::size_t r = 0; r < v.size(); ++r) acc += qmul(qconj(v[r]), w[r]);
  return acc;
}

QMatrix dagger(const QMatrix& m) {
  const std::size_t n = m.size();
  QMatrix out(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out(c, r) = qconj(m(r, c));
  }
  return out;
}

double re_trace(const QMatrix& m) {
  double sum = 0.0;
  for (std::size_t r = 0; r < m.size(); ++r) sum += m(r, r).q0;
  return sum;
}

double max_abs_diff(const QMatrix& a, const QMatrix& b) {
  if (a.size() != b.size()) throw DimensionMismatch("max_abs_diff size mismatch");
  double worst = 0.0;
  for (std::size_t r = 0; r < a.size(); ++r) {
    for (std::size_t c = 0; c < a.size(); ++c) {
      const auto d = (a(r, c) - b(r, c)).components();
      for (double x : d) worst = std::max(worst, std::abs(x));
    }
  }
  return worst;
}

ComplexMatrix embed(const QMatrix& m) {
  const auto n = static_cast<Eigen::Index>(m.size());
  ComplexMatrix x(2 * n, 2 * n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      const Quaternion& q = m(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
      const Complex z1 = q.z1();
      const Complex z2 = q.z2();
      x(r, c) = z1;
      x(r, c + n) = z2;
      x(r + n, c) = -std::conj(z2);
      x(r + n, c + n) = std::conj(z1);
    }
  }
  return x;
}

QMatrix unembed(const ComplexMatrix& x, double tol) {
  if (x.rows() != x.cols() || x.rows() % 2 != 0) {
    throw DimensionMismatch("embedding must be square with even dimension");
  }
  const Eigen::Index n = x.rows() / 2;
  const auto m1 = x.topLeftCorner(n, n);
  const auto m2 = x.topRightCorner(n, n);
  const double defect = (x.bottomLeftCorner(n, n) + m2.conjugate()).norm() +
                        (x.bottomRightCorner(n, n) - m1.conjugate()).norm();
  if (!(defect <= tol * std::max(1.0, x.norm()))) {
    throw NotSymplectic("lower blocks are not the conjugated upper blocks");
  }
  QMatrix out(static_cast<std::size_t>(n));
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      out(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) =
          Quaternion::from_pair(m1(r, c), m2(r, c));
    }
  }
  return out;
}

QMatrix inverse(const QMatrix& m) {
  const ComplexMatrix x = embed(m);
  Eigen::FullPivLU<ComplexMatrix> lu(x);
  if (!lu.isInvertible()) throw ZeroDivision("matrix is singular");
  return unembed(lu.inverse(), 1e-8);
}

QMatrix mat_exp(const QMatrix& m, double t) {
  if (!m.is_finite() || !std::isfinite(t)) throw Overflow("mat_exp input not finite");
  // Symmetry of the exact result is preserved by expm up to rounding that
  // grows with the norm; the loose unembed tolerance reflects that.
  return unembed(expm(embed(m) * t), 1e-8);
}

std::vector<Complex> embedding_eigenvalues(const QMatrix& m) {
  const ComplexMatrix x = embed(m);
  if (x.size() == 0) return {};
  Eigen::ComplexEigenSolver<ComplexMatrix> solver(x, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) throw NotNormal("eigenvalue iteration did not converge");
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

std::vector<SpectralClass> standard_spectrum(const QMatrix& m, double tol) {
  const ComplexMatrix x = embed(m);
  const double scale = std::max(1.0, x.norm());
  const double departure = (x * x.adjoint() - x.adjoint() * x).norm();
  if (departure > tol * scale * scale) {
    throw NotNormal("embedding departs from normality by " + std::to_string(departure));
  }

  std::vector<Complex> reps;
  for (const Complex& z : embedding_eigenvalues(m)) {
    reps.emplace_back(z.real(), std::abs(z.imag()));
  }
  std::sort(reps.begin(), reps.end(), [](const Complex& a, const Complex& b) {
    return a.imag() != b.imag() ? a.imag() > b.imag() : a.real() > b.real();
  });

  const double group_tol = 1e-8 * scale;
  std::vector<SpectralClass> out;
  std::vector<int> counts;
  std::vector<Complex> sums;
  for (const Complex& z : reps) {
    bool placed = false;
    for (std::size_t g = 0; g < sums.size(); ++g) {
      if (std::abs(sums[g] / static_cast<double>(counts[g]) - z) <= group_tol) {
        sums[g] += z;
        ++counts[g];
        placed = true;
        break;
      }
    }
    if (!placed) {
      sums.push_back(z);
      counts.push_back(1);
    }
  }
  for (std::size_t g = 0; g < sums.size(); ++g) {
    // Each quaternionic class contributes a conjugate pair to the embedding.
    out.push_back({sums[g] / static_cast<double>(counts[g]), (counts[g] + 1) / 2});
  }
  return out;
}

std::vector<double> continued_energies(const QMatrix& h0, const QMatrix& hp, int steps, double tol) {
  const std::size_t n = h0.size();
  if (hp.size() != n) throw DimensionMismatch("continued_energies: H0 and H' differ in size");
  if (steps < 1) throw DomainError("continued_energies needs at least one step");

  std::vector<Complex> start = embedding_eigenvalues(h0);
  std::stable_sort(start.begin(), start.end(),
                   [](const Complex& a, const Complex& b) { return a.imag() > b.imag(); });
  std::vector<Complex> tracked(start.begin(), start.begin() + static_cast<std::ptrdiff_t>(n));
  std::vector<Complex> previous = tracked;

  const bool unperturbed = hp.frobenius_norm() == 0.0;
  for (int k = 1; k <= steps && !unperturbed; ++k) {
    const double s = static_cast<double>(k) / steps;
    const std::vector<Complex> eig = embedding_eigenvalues(h0 + s * hp);

    std::vector<Complex> predicted(n);
    for (std::size_t b = 0; b < n; ++b) {
      predicted[b] = k == 1 ? tracked[b] : 2.0 * tracked[b] - previous[b];
    }

    // Greedy global nearest-pair assignment of branches to eigenvalues.
    std::vector<bool> branch_done(n, false);
    std::vector<bool> eig_used(eig.size(), false);
    std::vector<Complex> next(n);
    for (std::size_t assigned = 0; assigned < n; ++assigned) {
      double best = std::numeric_limits<double>::infinity();
      std::size_t best_b = 0;
      std::size_t best_e = 0;
      for (std::size_t b = 0; b < n; ++b) {
        if (branch_done[b]) continue;
        for (std::size_t e = 0; e < eig.size(); ++e) {
          if (eig_used[e]) continue;
          const double d = std::abs(eig[e] - predicted[b]);
          if (d < best) {
            best = d;
            best_b = b;
            best_e = e;
          }
        }
      }
      branch_done[best_b] = true;
      eig_used[best_e] = true;
      next[best_b] = eig[best_e];
    }
    previous = tracked;
    tracked = next;
  }

  const double scale = std::max(1.0, (h0 + hp).frobenius_norm());
  std::vector<double> energies;
  for (const Complex& z : tracked) {
    if (std::abs(z.real()) > tol * scale) {
      throw ConstraintViolation("eigenvalue " + std::to_string(z.real()) + "+" +
                                std::to_string(z.imag()) + "i is not on the imaginary axis");
    }
    energies.push_back(z.imag());
  }
  std::sort(energies.begin(), energies.end());
  return energies;
}

EigenCheck check_right_eigenvector(const QMatrix& h, const QVector& psi) {
  const double norm2 = inner(psi, psi).q0;
  if (norm2 <= 0.0) throw ZeroDivision("zero vector is not an eigenvector");
  const QVector h_psi = mat_vec(h, psi);
  const Quaternion mu = inner(psi, h_psi) / norm2;
  const QVector psi_mu = scale_right(psi, mu);
  double res2 = 0.0;
  for (std::size_t r = 0; r < psi.size(); ++r) res2 += (h_psi[r] - psi_mu[r]).norm_squared();
  return {mu, std::sqrt(res2 / norm2)};
}

}  // namespace quatstat
