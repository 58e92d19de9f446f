// Copyright 2026 The qaclab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QACLAB_LINALG_HPP
#define QACLAB_LINALG_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "qaclab/bits.hpp"

namespace qaclab {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using Matrix2c = Eigen::Matrix2cd;

/// Project-wide zero threshold for amplitudes, singular values and residuals.
inline constexpr double kDefaultTolerance = 1e-9;
/// Unitarity threshold for gates handed to the simulator.
inline constexpr double kUnitarityTolerance = 1e-10;

class QuantumState;

/// An orthonormal basis of a subspace of C^ambient_dim, stored as columns.
class Subspace {
   public:
    /// Validates orthonormality of the columns to 1e-10.
    Subspace(int ambient_dim, ComplexMatrix basis);

    int ambient_dim() const {
        return ambient_dim_;
    }
    int dimension() const {
        return static_cast<int>(basis_.cols());
    }
    const ComplexMatrix &basis() const {
        return basis_;
    }
    ComplexVector vector(int i) const {
        return basis_.col(i);
    }
    /// Norm of the component of v orthogonal to the subspace.
    double distance_to(const ComplexVector &v) const;

   private:
    int ambient_dim_;
    ComplexMatrix basis_;
};

/// max_ij |(U U^dagger - I)_ij|; infinity for non-square input.
double unitarity_residual(const ComplexMatrix &u);
bool is_unitary(const ComplexMatrix &u, double tol = kUnitarityTolerance);

/// Kronecker product a (x) b, with a acting on the more significant bits.
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

/// Singular values in descending order.
std::vector<double> singular_values(const ComplexMatrix &m);

/// Reshapes an n-qubit amplitude vector into the 2^|A| x 2^|B| matrix whose
/// rows are indexed by the qubits of part_a and columns by the complement.
ComplexMatrix bipartition_matrix(const ComplexVector &amplitudes, int n, QubitSet part_a);

/// Schmidt coefficients of the state across (part_a, complement), descending.
std::vector<double> schmidt_singular_values(const QuantumState &state, QubitSet part_a);

/// Orthonormal basis of the right null space of m. A singular value counts as
/// zero when it is below tol times the largest singular value (or tol when m
/// is zero).
Subspace null_space(const ComplexMatrix &m, double tol = kDefaultTolerance);

/// Haar-random dim x dim unitary: QR of a complex Ginibre matrix with the
/// diagonal phases of R moved into Q.
ComplexMatrix random_unitary_haar(int dim, uint64_t seed);
ComplexMatrix random_unitary_haar(int dim, std::mt19937_64 &rng);

/// Haar-random unit vector in C^dim.
ComplexVector random_unit_vector(int dim, std::mt19937_64 &rng);

}  // namespace qaclab

#endif
