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

#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

namespace optowork {

// Symmetric 2n x 2n quadrature covariance matrix, ordered
// (X1, Y1, ..., Xn, Yn), with vacuum variance 1/2.
class CovarianceMatrix {
 public:
  // Throws DomainError if `entries` is not square, of even dimension, or
  // symmetric within 1e-12 (relative to its largest entry when that exceeds
  // one). The stored matrix is exactly symmetric.
  explicit CovarianceMatrix(Eigen::MatrixXd entries);

  static CovarianceMatrix vacuum(int n_modes);

  int n_modes() const { return static_cast<int>(m_.rows() / 2); }
  const Eigen::MatrixXd& matrix() const { return m_; }
  double operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }

  // Every symplectic eigenvalue >= 1/2 - tol.
  bool is_physical(double tol = 1e-9) const;

 private:
  Eigen::MatrixXd m_;
};

// Sparse two-mode pattern
//   [[x, 0, z, 0], [0, x, 0, -z], [z, 0, y, 0], [0, -z, 0, y]].
struct TwoModeStandardForm {
  double x = 0.5;
  double y = 0.5;
  double z = 0.0;

  bool is_physical(double tol = 1e-9) const {
    return x >= 0.5 - tol && y >= 0.5 - tol && x * y - z * z > 0.0;
  }

  CovarianceMatrix to_matrix() const;
};

// Direct sum of the symplectic unit [[0, 1], [-1, 0]] over n modes.
Eigen::MatrixXd symplectic_form(int n_modes);

// Solves A V + V A^T = -D by dense Kronecker vectorisation. A must be Hurwitz;
// a rank-deficient vectorised system raises SingularSystem. Output is
// symmetrised.
Eigen::MatrixXd solve_lyapunov(const Eigen::MatrixXd& drift, const Eigen::MatrixXd& noise);

// Moduli of the eigenvalues of i*Omega*V, one per mode, ascending.
std::vector<double> symplectic_eigenvalues(const CovarianceMatrix& v);

// Smallest symplectic eigenvalue of the partially transposed state.
double min_pt_symplectic_eigenvalue(const TwoModeStandardForm& f);

// max(0, -ln(2 * min_pt_symplectic_eigenvalue(f))).
double logarithmic_negativity(const TwoModeStandardForm& f);

// (1/2) ln det V. Offset by a constant in the vacuum-1/2 convention; only
// differences are meaningful.
double renyi2_entropy(const CovarianceMatrix& v);

// Principal submatrix over the quadratures of `modes`, in the given order.
CovarianceMatrix reduce(const CovarianceMatrix& v, std::span<const int> modes);

// Block-diagonal embedding of two independent states.
CovarianceMatrix direct_sum(const CovarianceMatrix& a, const CovarianceMatrix& b);

// Reads (x, y, z) off a two-mode CM. Off-pattern deviations above `tol`
// raise PatternMismatch.
TwoModeStandardForm standard_form(const CovarianceMatrix& v4, double tol = 1e-9);

}  // namespace optowork
