// Copyright 2026 The twistcode Authors
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

#ifndef TWISTCODE_DENSE_H
#define TWISTCODE_DENSE_H

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <complex>
#include <vector>

#include "twistcode/lattice.h"
#include "twistcode/pauli.h"
#include "twistcode/rng.h"

namespace twistcode {

using cdouble = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using SparseOp = Eigen::SparseMatrix<cdouble>;

// Site k is bit k of the basis index; |1> is the Z = -1 state.
Matrix pauli_matrix(const PauliString &p, size_t num_qubits);
SparseOp pauli_sparse(const PauliString &p, size_t num_qubits);

constexpr size_t kMaxDenseQubits = 24;

class StateVector {
   public:
    // |0...0> on n qubits.
    explicit StateVector(size_t n);
    StateVector(size_t n, Vector amplitudes);

    size_t num_qubits() const { return n_; }
    const Vector &amplitudes() const { return v_; }
    Vector &amplitudes() { return v_; }

    // In-place p|v>.
    void apply(const PauliString &p);
    // <v|p|v>; p must be Hermitian.
    double expectation(const PauliString &p) const;

   private:
    size_t n_;
    Vector v_;
};

// Ground state by sequential projection with (1 + A_k)/2 from |0...0>.
StateVector prepare_ground(const TwistLattice &lat);

struct DenseMeasurement {
    int outcome;
    double probability;
    StateVector state;
};

// forced is 0 for a Born-rule sample, otherwise the postselected outcome.
DenseMeasurement measure_projective(const StateVector &v, const PauliString &p, Rng &rng, int forced = 0);
// Probability of the +1 outcome.
double probability_plus(const StateVector &v, const PauliString &p);

double fidelity_up_to_phase(const Vector &u, const Vector &v);
double fidelity_up_to_phase(const StateVector &u, const StateVector &v);

// Fermionic Fock space of m Majorana modes gamma_0 .. gamma_{m-1}.
// Fermion j is c_j = (gamma_{2j} + i gamma_{2j+1}) / 2.
class FockSpace {
   public:
    explicit FockSpace(size_t modes);

    size_t modes() const { return m_; }
    size_t dim() const { return size_t{1} << (m_ / 2); }
    const Matrix &gamma(size_t k) const { return gammas_.at(k); }
    Matrix identity() const { return Matrix::Identity(dim(), dim()); }

    // -i gamma_a gamma_b, eigenvalue (-1)^n.
    Matrix pair_parity(size_t a, size_t b) const;
    // (1 + gamma_q gamma_p) / sqrt(2).
    Matrix braid(size_t p, size_t q) const;
    // c_0^{dag n_0} c_1^{dag n_1} ... |vac> for the pairing (0 1)(2 3)...
    Vector basis_state(const std::vector<int> &labels) const;

    // Born-rule measurement of -i gamma_a gamma_b; returns n in {0, 1}.
    int measure(Vector &state, size_t a, size_t b, Rng &rng, int forced = -1) const;
    double probability_zero(const Vector &state, size_t a, size_t b) const;

   private:
    size_t m_;
    std::vector<Matrix> gammas_;
};

}  // namespace twistcode

#endif
