#pragma once

// Dense complex linear algebra at small dimension: Hermitian eigensolver
// (cyclic Jacobi), trace identities, Schur/Jensen checks and random matrix
// generators.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <span>
#include <vector>

#include <Eigen/Eigenvalues>

#include "qmem/error.hpp"
#include "qmem/random.hpp"

namespace qmem {

using cplx = std::complex<double>;

/// Square complex matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

  Matrix(std::initializer_list<std::initializer_list<cplx>> rows) : Matrix(rows.size()) {
    std::size_t i = 0;
    for (const auto& row : rows) {
      detail::require(row.size() == dim_, "Matrix: rows must form a square matrix");
      std::copy(row.begin(), row.end(), data_.begin() + static_cast<std::ptrdiff_t>(i * dim_));
      ++i;
    }
  }

  static Matrix identity(std::size_t dim) {
    Matrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }

  static Matrix diagonal(std::span<const double> values) {
    Matrix m(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m;
  }

  /// |a><b|
  static Matrix outer(std::span<const cplx> a, std::span<const cplx> b) {
    detail::require(a.size() == b.size(), "Matrix::outer: size mismatch");
    Matrix m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) m(i, j) = a[i] * std::conj(b[j]);
    return m;
  }

  std::size_t dim() const { return dim_; }

  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

  std::span<const cplx> data() const { return data_; }

  std::vector<cplx> column(std::size_t j) const {
    std::vector<cplx> c(dim_);
    for (std::size_t i = 0; i < dim_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  Matrix adjoint() const {
    Matrix m(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) m(j, i) = std::conj((*this)(i, j));
    return m;
  }

  cplx trace() const {
    cplx t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (const auto& z : data_) s += std::norm(z);
    return std::sqrt(s);
  }

  double max_abs_diff(const Matrix& other) const {
    detail::require(other.dim_ == dim_, "Matrix: dimension mismatch");
    double worst = 0.0;
    for (std::size_t k = 0; k < data_.size(); ++k)
      worst = std::max(worst, std::abs(data_[k] - other.data_[k]));
    return worst;
  }

  /// Largest |m(i,j) - conj(m(j,i))|.
  double hermiticity_defect() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i; j < dim_; ++j)
        worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return worst;
  }

  Matrix& operator+=(const Matrix& o) {
    detail::require(o.dim_ == dim_, "Matrix: dimension mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    detail::require(o.dim_ == dim_, "Matrix: dimension mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(cplx s) {
    for (auto& z : data_) z *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, cplx s) { return a *= s; }
  friend Matrix operator*(cplx s, Matrix a) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    detail::require(a.dim_ == b.dim_, "Matrix: dimension mismatch");
    const std::size_t n = a.dim_;
    Matrix c(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const cplx aik = a(i, k);
        if (aik == cplx{}) continue;
        for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend std::vector<cplx> operator*(const Matrix& a, std::span<const cplx> v) {
    detail::require(a.dim_ == v.size(), "Matrix: dimension mismatch");
    std::vector<cplx> out(a.dim_);
    for (std::size_t i = 0; i < a.dim_; ++i)
      for (std::size_t j = 0; j < a.dim_; ++j) out[i] += a(i, j) * v[j];
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<cplx> data_;
};

/// Hermitian matrix. Construction rejects entry mismatches above
/// kTolerance and then symmetrizes to (m + m^dagger) / 2.
class HermitianMatrix {
 public:
  static constexpr double kTolerance = 1e-10;

  explicit HermitianMatrix(const Matrix& m) : m_(m) {
    detail::require(m.dim() >= 1, "HermitianMatrix: dimension must be positive");
    detail::require(m.hermiticity_defect() <= kTolerance,
                    "HermitianMatrix: input is not Hermitian within tolerance");
    for (std::size_t i = 0; i < m_.dim(); ++i) {
      m_(i, i) = m_(i, i).real();
      for (std::size_t j = i + 1; j < m_.dim(); ++j) {
        const cplx avg = 0.5 * (m_(i, j) + std::conj(m_(j, i)));
        m_(i, j) = avg;
        m_(j, i) = std::conj(avg);
      }
    }
  }

  static HermitianMatrix zero(std::size_t dim) { return HermitianMatrix(Matrix(dim)); }
  static HermitianMatrix identity(std::size_t dim) { return HermitianMatrix(Matrix::identity(dim)); }
  static HermitianMatrix diagonal(std::span<const double> v) {
    return HermitianMatrix(Matrix::diagonal(v));
  }
  /// |psi><psi|, no normalization.
  static HermitianMatrix projector(std::span<const cplx> psi) {
    return HermitianMatrix(Matrix::outer(psi, psi));
  }

  const Matrix& matrix() const { return m_; }
  std::size_t dim() const { return m_.dim(); }
  const cplx& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  double trace() const { return m_.trace().real(); }

  HermitianMatrix& operator+=(const HermitianMatrix& o) {
    m_ += o.m_;
    return *this;
  }
  HermitianMatrix& operator-=(const HermitianMatrix& o) {
    m_ -= o.m_;
    return *this;
  }
  HermitianMatrix& operator*=(double s) {
    m_ *= s;
    return *this;
  }
  friend HermitianMatrix operator+(HermitianMatrix a, const HermitianMatrix& b) { return a += b; }
  friend HermitianMatrix operator-(HermitianMatrix a, const HermitianMatrix& b) { return a -= b; }
  friend HermitianMatrix operator*(HermitianMatrix a, double s) { return a *= s; }
  friend HermitianMatrix operator*(double s, HermitianMatrix a) { return a *= s; }

 private:
  // Sums and real multiples of Hermitian matrices stay exactly Hermitian.
  Matrix m_;
};

/// Eigenvalues in ascending order; column k of `vectors` belongs to values[k].
struct EigenSystem {
  std::vector<double> values;
  Matrix vectors;
};

namespace detail {

inline double off_diagonal_norm(const Matrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

}  // namespace detail

/// Cyclic complex Jacobi. Each rotation first removes the phase of the
/// pivot a(p,q), then applies a real Givens rotation. Stops when the
/// off-diagonal Frobenius norm is at most 1e-12 * ||m||_F.
inline EigenSystem hermitian_eigensystem(const HermitianMatrix& h) {
  constexpr int kMaxSweeps = 100;
  const std::size_t n = h.dim();
  Matrix a = h.matrix();
  Matrix v = Matrix::identity(n);
  const double target = 1e-12 * a.frobenius_norm();

  bool converged = false;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (detail::off_diagonal_norm(a) <= target) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx apq = a(p, q);
        const double r = std::abs(apq);
        if (r == 0.0) continue;
        const cplx phase = apq / r;
        const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * r);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // Rotation block [[c, s], [-s e^{-i phi}, c e^{-i phi}]] on (p, q).
        const cplx rpp = c;
        const cplx rpq = s;
        const cplx rqp = -s * std::conj(phase);
        const cplx rqq = c * std::conj(phase);

        for (std::size_t k = 0; k < n; ++k) {
          const cplx akp = a(k, p);
          const cplx akq = a(k, q);
          a(k, p) = akp * rpp + akq * rqp;
          a(k, q) = akp * rpq + akq * rqq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const cplx apk = a(p, k);
          const cplx aqk = a(q, k);
          a(p, k) = std::conj(rpp) * apk + std::conj(rqp) * aqk;
          a(q, k) = std::conj(rpq) * apk + std::conj(rqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();

        for (std::size_t k = 0; k < n; ++k) {
          const cplx vkp = v(k, p);
          const cplx vkq = v(k, q);
          v(k, p) = vkp * rpp + vkq * rqp;
          v(k, q) = vkp * rpq + vkq * rqq;
        }
      }
    }
  }
  if (!converged && detail::off_diagonal_norm(a) > target)
    throw numeric_error("hermitian_eigensystem: Jacobi iteration did not converge");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  EigenSystem out{std::vector<double>(n), Matrix(n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

inline std::vector<double> hermitian_eigenvalues(const HermitianMatrix& h) {
  return hermitian_eigensystem(h).values;
}

/// Validating overload for raw matrices.
inline std::vector<double> hermitian_eigenvalues(const Matrix& m) {
  return hermitian_eigenvalues(HermitianMatrix(m));
}

/// tr(a b), real for Hermitian arguments.
inline double trace_product(const HermitianMatrix& a, const HermitianMatrix& b) {
  detail::require(a.dim() == b.dim(), "trace_product: dimension mismatch");
  double t = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) t += (a(i, j) * b(j, i)).real();
  return t;
}

/// Sum of |eigenvalue|, i.e. the trace norm.
inline double abs_eigenvalue_sum(const HermitianMatrix& h) {
  double s = 0.0;
  for (double mu : hermitian_eigenvalues(h)) s += std::abs(mu);
  return s;
}

/// Eigenvalues of an arbitrary square matrix. Backed by Eigen's complex
/// Schur-based solver; only used by the non-Hermitian checks below.
inline std::vector<cplx> general_eigenvalues(const Matrix& m) {
  const auto n = static_cast<Eigen::Index>(m.dim());
  Eigen::MatrixXcd e(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      e(i, j) = m(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(e, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) throw numeric_error("general_eigenvalues: no convergence");
  std::vector<cplx> out(m.dim());
  for (Eigen::Index i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
  return out;
}

struct SchurCheck {
  double lhs = 0.0;  // sum |mu_i|^2
  double rhs = 0.0;  // tr(m m^dagger)
  bool normal = false;
};

/// sum |mu_i|^2 <= tr(m m^dagger), with equality iff m is normal.
inline SchurCheck schur_check(const Matrix& m) {
  detail::require(m.dim() >= 1, "schur_check: empty matrix");
  SchurCheck out;
  for (const cplx& mu : general_eigenvalues(m)) out.lhs += std::norm(mu);
  const Matrix adj = m.adjoint();
  out.rhs = (m * adj).trace().real();
  out.normal = (m * adj - adj * m).frobenius_norm() <= 1e-10;
  return out;
}

struct TraceJensenCheck {
  double lhs = 0.0;  // |tr m|^2
  double rhs = 0.0;  // dim * tr(m m^dagger)
};

inline TraceJensenCheck trace_jensen_check(const Matrix& m) {
  TraceJensenCheck out;
  out.lhs = std::norm(m.trace());
  out.rhs = static_cast<double>(m.dim()) * (m * m.adjoint()).trace().real();
  return out;
}

// Random generators used by property tests and sweeps.

inline Matrix random_gaussian_matrix(std::size_t dim, Rng& rng) {
  Matrix m(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = cplx(rng.normal(), rng.normal());
  return m;
}

inline std::vector<cplx> random_unit_vector(std::size_t dim, Rng& rng) {
  std::vector<cplx> v(dim);
  double norm2 = 0.0;
  do {
    norm2 = 0.0;
    for (auto& z : v) {
      z = cplx(rng.normal(), rng.normal());
      norm2 += std::norm(z);
    }
  } while (norm2 == 0.0);
  const double inv = 1.0 / std::sqrt(norm2);
  for (auto& z : v) z *= inv;
  return v;
}

/// Haar-distributed unitary: Gram-Schmidt on a complex Gaussian matrix.
inline Matrix random_unitary(std::size_t dim, Rng& rng) {
  Matrix g = random_gaussian_matrix(dim, rng);
  for (std::size_t j = 0; j < dim; ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t k = 0; k < j; ++k) {
        cplx proj = 0.0;
        for (std::size_t i = 0; i < dim; ++i) proj += std::conj(g(i, k)) * g(i, j);
        for (std::size_t i = 0; i < dim; ++i) g(i, j) -= proj * g(i, k);
      }
    }
    double norm2 = 0.0;
    for (std::size_t i = 0; i < dim; ++i) norm2 += std::norm(g(i, j));
    const double inv = 1.0 / std::sqrt(norm2);
    for (std::size_t i = 0; i < dim; ++i) g(i, j) *= inv;
  }
  return g;
}

inline HermitianMatrix random_hermitian(std::size_t dim, Rng& rng) {
  const Matrix g = random_gaussian_matrix(dim, rng);
  Matrix h = g + g.adjoint();
  h *= 0.5;
  return HermitianMatrix(h);
}

/// U diag(mu) U^dagger with Haar U and complex Gaussian mu.
inline Matrix random_normal_matrix(std::size_t dim, Rng& rng) {
  const Matrix u = random_unitary(dim, rng);
  Matrix d(dim);
  for (std::size_t i = 0; i < dim; ++i) d(i, i) = cplx(rng.normal(), rng.normal());
  return u * d * u.adjoint();
}

}  // namespace qmem
