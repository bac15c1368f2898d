// Copyright 2026 The optowork Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "optowork/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "optowork/errors.hpp"

namespace optowork {

namespace {

Eigen::MatrixXd symmetrized(const Eigen::MatrixXd& m) { return 0.5 * (m + m.transpose()); }

// Eigenvalues of a symmetric matrix; throws unless all are strictly positive.
Eigen::VectorXd positive_spectrum(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    throw NotPositiveDefinite("eigen-decomposition of covariance matrix failed");
  }
  const Eigen::VectorXd& ev = es.eigenvalues();
  if (ev.size() == 0 || !(ev.minCoeff() > 0.0)) {
    throw NotPositiveDefinite("covariance matrix is not positive definite (min eigenvalue " +
                              std::to_string(ev.size() ? ev.minCoeff() : 0.0) + ")");
  }
  return ev;
}

}  // namespace

CovarianceMatrix::CovarianceMatrix(Eigen::MatrixXd entries) : m_(std::move(entries)) {
  if (m_.rows() != m_.cols() || m_.rows() == 0 || m_.rows() % 2 != 0) {
    throw DomainError("covariance matrix must be square with positive even dimension");
  }
  if (!m_.allFinite()) {
    throw DomainError("covariance matrix has non-finite entries");
  }
  const double scale = std::max(1.0, m_.cwiseAbs().maxCoeff());
  if ((m_ - m_.transpose()).cwiseAbs().maxCoeff() >= 1e-12 * scale) {
    throw DomainError("covariance matrix is not symmetric");
  }
  m_ = symmetrized(m_);
}

CovarianceMatrix CovarianceMatrix::vacuum(int n_modes) {
  if (n_modes <= 0) {
    throw DomainError("vacuum needs at least one mode");
  }
  return CovarianceMatrix(0.5 * Eigen::MatrixXd::Identity(2 * n_modes, 2 * n_modes));
}

bool CovarianceMatrix::is_physical(double tol) const {
  try {
    const auto nu = symplectic_eigenvalues(*this);
    return nu.front() >= 0.5 - tol;
  } catch (const NotPositiveDefinite&) {
    return false;
  }
}

CovarianceMatrix TwoModeStandardForm::to_matrix() const {
  Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
  m(0, 0) = m(1, 1) = x;
  m(2, 2) = m(3, 3) = y;
  m(0, 2) = m(2, 0) = z;
  m(1, 3) = m(3, 1) = -z;
  return CovarianceMatrix(m);
}

Eigen::MatrixXd symplectic_form(int n_modes) {
  Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(2 * n_modes, 2 * n_modes);
  for (int k = 0; k < n_modes; ++k) {
    omega(2 * k, 2 * k + 1) = 1.0;
    omega(2 * k + 1, 2 * k) = -1.0;
  }
  return omega;
}

Eigen::MatrixXd solve_lyapunov(const Eigen::MatrixXd& drift, const Eigen::MatrixXd& noise) {
  const Eigen::Index n = drift.rows();
  if (n == 0 || drift.cols() != n || noise.rows() != n || noise.cols() != n) {
    throw DomainError("solve_lyapunov: drift and noise must be square of equal size");
  }
  // Column-major vec: vec(A V) = (I (x) A) vec V, vec(V A^T) = (A (x) I) vec V.
  const Eigen::Index nn = n * n;
  Eigen::MatrixXd k = Eigen::MatrixXd::Zero(nn, nn);
  for (Eigen::Index i = 0; i < n; ++i) {
    k.block(i * n, i * n, n, n) += drift;
    for (Eigen::Index j = 0; j < n; ++j) {
      k.block(i * n, j * n, n, n).diagonal().array() += drift(i, j);
    }
  }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(k);
  if (!lu.isInvertible()) {
    throw SingularSystem("Lyapunov system is rank-deficient (rank " + std::to_string(lu.rank()) +
                         " of " + std::to_string(nn) + "); drift matrix is not stable");
  }
  const Eigen::VectorXd rhs = -Eigen::Map<const Eigen::VectorXd>(noise.data(), nn);
  Eigen::VectorXd vec_v = lu.solve(rhs);
  Eigen::MatrixXd v = Eigen::Map<Eigen::MatrixXd>(vec_v.data(), n, n);
  return symmetrized(v);
}

std::vector<double> symplectic_eigenvalues(const CovarianceMatrix& v) {
  const Eigen::MatrixXd& m = v.matrix();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
  if (es.info() != Eigen::Success || !(es.eigenvalues().minCoeff() > 0.0)) {
    throw NotPositiveDefinite("symplectic_eigenvalues: covariance matrix is not positive definite");
  }
  // sqrt(V) Omega sqrt(V) is antisymmetric; its singular values are the
  // symplectic eigenvalues, each appearing twice.
  const Eigen::MatrixXd root = es.operatorSqrt();
  const Eigen::MatrixXd m_anti = root * symplectic_form(v.n_modes()) * root;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m_anti);
  std::vector<double> sv(svd.singularValues().data(),
                         svd.singularValues().data() + svd.singularValues().size());
  std::sort(sv.begin(), sv.end());
  std::vector<double> nu;
  nu.reserve(sv.size() / 2);
  for (std::size_t i = 0; i + 1 < sv.size(); i += 2) {
    nu.push_back(0.5 * (sv[i] + sv[i + 1]));
  }
  return nu;
}

double min_pt_symplectic_eigenvalue(const TwoModeStandardForm& f) {
  const double det_v_root = f.x * f.y - f.z * f.z;
  if (!(f.x > 0.0) || !(f.y > 0.0) || !(det_v_root > 0.0)) {
    throw DomainError("min_pt_symplectic_eigenvalue: unphysical standard form");
  }
  const double lambda = f.x * f.x + f.y * f.y + 2.0 * f.z * f.z;
  const double det_v = det_v_root * det_v_root;
  // Lambda^2 - 4 det V factors as ((x-y)^2 + 4z^2)(x+y)^2, nonnegative.
  const double dxy = f.x - f.y;
  const double sxy = f.x + f.y;
  const double disc = (dxy * dxy + 4.0 * f.z * f.z) * sxy * sxy;
  // (Lambda - sqrt(disc)) / 2 rewritten to avoid cancellation near pure states.
  return std::sqrt(2.0 * det_v / (lambda + std::sqrt(disc)));
}

double logarithmic_negativity(const TwoModeStandardForm& f) {
  return std::max(0.0, -std::log(2.0 * min_pt_symplectic_eigenvalue(f)));
}

double renyi2_entropy(const CovarianceMatrix& v) {
  const Eigen::VectorXd ev = positive_spectrum(v.matrix());
  return 0.5 * ev.array().log().sum();
}

CovarianceMatrix reduce(const CovarianceMatrix& v, std::span<const int> modes) {
  const int n = v.n_modes();
  if (modes.empty()) {
    throw IndexOutOfRange("reduce: empty mode list");
  }
  std::vector<bool> seen(n, false);
  std::vector<Eigen::Index> rows;
  for (int mode : modes) {
    if (mode < 0 || mode >= n) {
      throw IndexOutOfRange("reduce: mode " + std::to_string(mode) + " out of range [0, " +
                            std::to_string(n) + ")");
    }
    if (seen[mode]) {
      throw IndexOutOfRange("reduce: mode " + std::to_string(mode) + " listed twice");
    }
    seen[mode] = true;
    rows.push_back(2 * mode);
    rows.push_back(2 * mode + 1);
  }
  const auto k = static_cast<Eigen::Index>(rows.size());
  Eigen::MatrixXd sub(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) {
      sub(i, j) = v(rows[i], rows[j]);
    }
  }
  return CovarianceMatrix(std::move(sub));
}

CovarianceMatrix direct_sum(const CovarianceMatrix& a, const CovarianceMatrix& b) {
  const Eigen::Index na = a.matrix().rows();
  const Eigen::Index nb = b.matrix().rows();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(na + nb, na + nb);
  m.topLeftCorner(na, na) = a.matrix();
  m.bottomRightCorner(nb, nb) = b.matrix();
  return CovarianceMatrix(std::move(m));
}

TwoModeStandardForm standard_form(const CovarianceMatrix& v4, double tol) {
  if (v4.n_modes() != 2) {
    throw PatternMismatch("standard_form needs a two-mode covariance matrix");
  }
  const TwoModeStandardForm f{v4(0, 0), v4(2, 2), v4(0, 2)};
  const Eigen::MatrixXd residual = v4.matrix() - f.to_matrix().matrix();
  const double worst = residual.cwiseAbs().maxCoeff();
  if (worst > tol) {
    throw PatternMismatch("two-mode CM deviates from the (x, y, z, -z) pattern by " +
                          std::to_string(worst));
  }
  return f;
}

}  // namespace optowork
