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

#include "twistcode/dense.h"

#include <algorithm>
#include <bit>
#include <cmath>

#include "twistcode/errors.h"

namespace twistcode {

namespace {

struct PauliMasks {
    uint64_t x = 0;
    uint64_t z = 0;
    cdouble phase;
};

PauliMasks masks_of(const PauliString &p, size_t n) {
    PauliMasks m;
    int ny = 0;
    for (const auto &[s, l] : p.terms()) {
        if (s >= n) {
            throw DomainError("site " + std::to_string(s) + " outside the state");
        }
        if (static_cast<int>(l) & 1) {
            m.x |= uint64_t{1} << s;
        }
        if (static_cast<int>(l) & 2) {
            m.z |= uint64_t{1} << s;
        }
        ny += l == Letter::Y;
    }
    m.phase = Phase::from_exponent(p.phase().exponent() + ny).value();
    return m;
}

inline double zsign(uint64_t j, uint64_t z) {
    return (std::popcount(j & z) & 1) ? -1.0 : 1.0;
}

}  // namespace

Matrix pauli_matrix(const PauliString &p, size_t num_qubits) {
    return Matrix(pauli_sparse(p, num_qubits));
}

SparseOp pauli_sparse(const PauliString &p, size_t num_qubits) {
    PauliMasks m = masks_of(p, num_qubits);
    size_t dim = size_t{1} << num_qubits;
    SparseOp out(dim, dim);
    out.reserve(Eigen::VectorXi::Constant(dim, 1));
    for (uint64_t j = 0; j < dim; j++) {
        out.insert(j ^ m.x, j) = m.phase * zsign(j, m.z);
    }
    out.makeCompressed();
    return out;
}

StateVector::StateVector(size_t n) : n_(n) {
    if (n > kMaxDenseQubits) {
        throw SizeError("dense state limited to " + std::to_string(kMaxDenseQubits) + " qubits");
    }
    v_ = Vector::Zero(size_t{1} << n);
    v_[0] = 1.0;
}

StateVector::StateVector(size_t n, Vector amplitudes) : n_(n), v_(std::move(amplitudes)) {
    if (n > kMaxDenseQubits) {
        throw SizeError("dense state limited to " + std::to_string(kMaxDenseQubits) + " qubits");
    }
    if (static_cast<size_t>(v_.size()) != (size_t{1} << n)) {
        throw DomainError("amplitude vector has the wrong length");
    }
}

void StateVector::apply(const PauliString &p) {
    PauliMasks m = masks_of(p, n_);
    Vector out(v_.size());
    for (uint64_t j = 0; j < static_cast<uint64_t>(v_.size()); j++) {
        out[j ^ m.x] = m.phase * zsign(j, m.z) * v_[j];
    }
    v_ = std::move(out);
}

double StateVector::expectation(const PauliString &p) const {
    if (!p.is_hermitian()) {
        throw DomainError("expectation of a non-Hermitian string");
    }
    PauliMasks m = masks_of(p, n_);
    cdouble acc = 0;
    for (uint64_t j = 0; j < static_cast<uint64_t>(v_.size()); j++) {
        acc += std::conj(v_[j ^ m.x]) * m.phase * zsign(j, m.z) * v_[j];
    }
    return acc.real();
}

StateVector prepare_ground(const TwistLattice &lat) {
    StateVector v(lat.num_sites());
    for (const auto &pl : lat.plaquettes()) {
        StateVector w = v;
        w.apply(lat.stabilizer(pl.id));
        Vector proj = (v.amplitudes() + w.amplitudes()) * 0.5;
        double nrm = proj.norm();
        if (nrm < 1e-12) {
            fail_invariant("plaquette projector annihilated the state");
        }
        v.amplitudes() = proj / nrm;
    }
    return v;
}

double probability_plus(const StateVector &v, const PauliString &p) {
    return std::clamp(0.5 * (1.0 + v.expectation(p)), 0.0, 1.0);
}

DenseMeasurement measure_projective(const StateVector &v, const PauliString &p, Rng &rng, int forced) {
    if (!p.is_hermitian()) {
        throw DomainError("cannot measure a non-Hermitian string");
    }
    StateVector w = v;
    w.apply(p);
    double pp = probability_plus(v, p);
    int outcome = forced != 0 ? (forced > 0 ? +1 : -1) : (uniform01(rng) < pp ? +1 : -1);
    Vector proj = (v.amplitudes() + static_cast<double>(outcome) * w.amplitudes()) * 0.5;
    double nrm = proj.norm();
    if (nrm < 1e-12) {
        throw ZeroProbabilityError("measurement branch has vanishing norm");
    }
    return {outcome, outcome > 0 ? pp : 1.0 - pp, StateVector(v.num_qubits(), proj / nrm)};
}

double fidelity_up_to_phase(const Vector &u, const Vector &v) {
    if (u.size() != v.size()) {
        throw DomainError("dimension mismatch");
    }
    return std::abs(u.dot(v));
}

double fidelity_up_to_phase(const StateVector &u, const StateVector &v) {
    return fidelity_up_to_phase(u.amplitudes(), v.amplitudes());
}

FockSpace::FockSpace(size_t modes) : m_(modes) {
    if (modes == 0 || modes % 2 || modes > 12) {
        throw SizeError("Fock space needs an even number of modes, at most 12");
    }
    size_t nf = modes / 2;
    size_t d = dim();
    for (size_t j = 0; j < nf; j++) {
        Matrix c = Matrix::Zero(d, d);
        for (uint64_t s = 0; s < d; s++) {
            if ((s >> j) & 1) {
                int below = std::popcount(s & ((uint64_t{1} << j) - 1));
                c(s ^ (uint64_t{1} << j), s) = (below & 1) ? -1.0 : 1.0;
            }
        }
        Matrix cd = c.adjoint();
        gammas_.push_back(c + cd);
        gammas_.push_back(cdouble(0, -1) * (c - cd));
    }
}

Matrix FockSpace::pair_parity(size_t a, size_t b) const {
    return cdouble(0, -1) * gamma(a) * gamma(b);
}

Matrix FockSpace::braid(size_t p, size_t q) const {
    return (identity() + gamma(q) * gamma(p)) / std::sqrt(2.0);
}

Vector FockSpace::basis_state(const std::vector<int> &labels) const {
    if (labels.size() != m_ / 2) {
        throw DomainError("one label per fermion expected");
    }
    Vector v = Vector::Zero(dim());
    v[0] = 1.0;
    for (size_t j = labels.size(); j-- > 0;) {
        if (labels[j]) {
            Matrix cd = (gamma(2 * j) + cdouble(0, 1) * gamma(2 * j + 1)).adjoint() * 0.5;
            v = cd * v;
        }
    }
    return v;
}

double FockSpace::probability_zero(const Vector &state, size_t a, size_t b) const {
    Vector w = pair_parity(a, b) * state;
    return std::clamp(0.5 * (1.0 + state.dot(w).real()), 0.0, 1.0);
}

int FockSpace::measure(Vector &state, size_t a, size_t b, Rng &rng, int forced) const {
    double p0 = probability_zero(state, a, b);
    int n = forced >= 0 ? forced : (uniform01(rng) < p0 ? 0 : 1);
    Vector proj = (state + (n == 0 ? 1.0 : -1.0) * (pair_parity(a, b) * state)) * 0.5;
    double nrm = proj.norm();
    if (nrm < 1e-12) {
        throw ZeroProbabilityError("requested parity outcome has zero probability");
    }
    state = proj / nrm;
    return n;
}

}  // namespace twistcode
