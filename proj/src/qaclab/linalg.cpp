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

#include "qaclab/linalg.hpp"

#include <cmath>
#include <limits>

#include "qaclab/errors.hpp"
#include "qaclab/state.hpp"

namespace qaclab {

Subspace::Subspace(int ambient_dim, ComplexMatrix basis) : ambient_dim_(ambient_dim), basis_(std::move(basis)) {
    if (ambient_dim < 1) {
        throw InvalidArgument("subspace ambient dimension must be positive");
    }
    if (basis_.cols() > 0 && basis_.rows() != ambient_dim) {
        throw InvalidArgument("subspace basis vectors have length " + std::to_string(basis_.rows()) +
                              ", expected " + std::to_string(ambient_dim));
    }
    if (basis_.cols() == 0) {
        basis_.resize(ambient_dim, 0);
    }
    if (basis_.cols() > ambient_dim) {
        throw InvalidArgument("subspace has more basis vectors than its ambient dimension");
    }
    ComplexMatrix gram = basis_.adjoint() * basis_;
    double dev = (gram - ComplexMatrix::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
    if (basis_.cols() > 0 && dev >= 1e-10) {
        throw InvalidArgument("subspace basis is not orthonormal (Gram deviation " + std::to_string(dev) + ")");
    }
}

double Subspace::distance_to(const ComplexVector &v) const {
    if (v.size() != ambient_dim_) {
        throw InvalidArgument("vector length does not match subspace ambient dimension");
    }
    if (dimension() == 0) {
        return v.norm();
    }
    ComplexVector proj = basis_ * (basis_.adjoint() * v);
    return (v - proj).norm();
}

double unitarity_residual(const ComplexMatrix &u) {
    if (u.rows() != u.cols() || u.rows() == 0) {
        return std::numeric_limits<double>::infinity();
    }
    return (u * u.adjoint() - ComplexMatrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
}

bool is_unitary(const ComplexMatrix &u, double tol) {
    return unitarity_residual(u) < tol;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); i++) {
        for (Eigen::Index j = 0; j < a.cols(); j++) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

std::vector<double> singular_values(const ComplexMatrix &m) {
    if (m.size() == 0) {
        return {};
    }
    Eigen::JacobiSVD<ComplexMatrix> svd(m);
    const auto &s = svd.singularValues();
    return std::vector<double>(s.data(), s.data() + s.size());
}

ComplexMatrix bipartition_matrix(const ComplexVector &amplitudes, int n, QubitSet part_a) {
    QubitSet all = QubitSet::range(1, n);
    if (part_a.empty() || part_a == all || !part_a.is_subset_of(all)) {
        throw InvalidArgument("invalid bipartition: part " + part_a.str() + " must be a nonempty proper subset of [" +
                              std::to_string(n) + "]");
    }
    QubitSet part_b = all - part_a;
    const uint64_t rows = uint64_t{1} << part_a.size();
    const uint64_t cols = uint64_t{1} << part_b.size();
    ComplexMatrix m(rows, cols);
    for (uint64_t i = 0; i < rows; i++) {
        uint64_t hi = scatter_bits(i, part_a, n);
        for (uint64_t j = 0; j < cols; j++) {
            m(i, j) = amplitudes[hi | scatter_bits(j, part_b, n)];
        }
    }
    return m;
}

std::vector<double> schmidt_singular_values(const QuantumState &state, QubitSet part_a) {
    return singular_values(bipartition_matrix(state.amplitudes(), state.qubits(), part_a));
}

Subspace null_space(const ComplexMatrix &m, double tol) {
    if (!(tol > 0)) {
        throw InvalidArgument("null space tolerance must be positive");
    }
    const int cols = static_cast<int>(m.cols());
    if (cols < 1) {
        throw InvalidArgument("null space of a matrix with no columns");
    }
    if (m.rows() == 0 || m.cwiseAbs().maxCoeff() == 0.0) {
        return Subspace(cols, ComplexMatrix::Identity(cols, cols));
    }
    Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeFullV);
    const auto &s = svd.singularValues();
    const double threshold = tol * s[0];
    int rank = 0;
    while (rank < s.size() && s[rank] >= threshold) {
        rank++;
    }
    return Subspace(cols, svd.matrixV().rightCols(cols - rank));
}

ComplexMatrix random_unitary_haar(int dim, std::mt19937_64 &rng) {
    if (dim < 1) {
        throw InvalidArgument("unitary dimension must be at least 1");
    }
    std::normal_distribution<double> normal(0.0, 1.0);
    ComplexMatrix z(dim, dim);
    for (int i = 0; i < dim; i++) {
        for (int j = 0; j < dim; j++) {
            double re = normal(rng);
            double im = normal(rng);
            z(i, j) = Complex(re, im) / std::sqrt(2.0);
        }
    }
    Eigen::HouseholderQR<ComplexMatrix> qr(z);
    ComplexMatrix q = qr.householderQ();
    ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < dim; j++) {
        double mag = std::abs(r(j, j));
        Complex phase = mag > 0 ? r(j, j) / mag : Complex(1.0, 0.0);
        q.col(j) *= phase;
    }
    return q;
}

ComplexMatrix random_unitary_haar(int dim, uint64_t seed) {
    std::mt19937_64 rng(seed);
    return random_unitary_haar(dim, rng);
}

ComplexVector random_unit_vector(int dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    ComplexVector v(dim);
    for (int i = 0; i < dim; i++) {
        double re = normal(rng);
        double im = normal(rng);
        v[i] = Complex(re, im);
    }
    return v / v.norm();
}

}  // namespace qaclab
