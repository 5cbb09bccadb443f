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

#ifndef TWISTCODE_TOPO_STATE_H
#define TWISTCODE_TOPO_STATE_H

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "twistcode/ising.h"
#include "twistcode/rng.h"

namespace twistcode {

// Anyons are numbered from 1. Pairs are stored with first < second.
using AnyonPair = std::pair<int, int>;

enum class Sector : uint8_t { Even, Odd, Mixed };

std::string sector_name(Sector s);

// (-1)^n of pair p equals label_sign * (-i gamma_a gamma_b), a < b. The sign
// is -1 for each pair crossing p that starts before it.
int label_sign(const std::vector<AnyonPair> &pairing, AnyonPair p);

// Validated pairing of anyons 1..n, sorted by first element.
std::vector<AnyonPair> make_pairing(int anyons, std::vector<AnyonPair> pairs);
// (12)(34)(56)...
std::vector<AnyonPair> standard_pairing(int anyons);

// Amplitudes over the fusion labels of a pairing. Entry index bit k is the
// label of pairing()[k]; basis vectors are the ordered fermionic products.
class TopoState {
   public:
    static TopoState basis(int anyons, std::vector<AnyonPair> pairing, const std::vector<int> &labels);
    static TopoState from_amplitudes(int anyons, std::vector<AnyonPair> pairing, Eigen::VectorXcd amplitudes);

    int anyons() const { return n_; }
    const std::vector<AnyonPair> &pairing() const { return pairing_; }
    Sector sector() const { return sector_; }
    const Eigen::VectorXcd &amplitudes() const { return amp_; }
    std::complex<double> amplitude(const std::vector<int> &labels) const;
    // Index of the pair in pairing(), or -1.
    int pair_index(AnyonPair p) const;
    double norm() const { return amp_.norm(); }

   private:
    TopoState(int anyons, std::vector<AnyonPair> pairing, Eigen::VectorXcd amplitudes);
    int n_ = 0;
    std::vector<AnyonPair> pairing_;
    Eigen::VectorXcd amp_;
    Sector sector_ = Sector::Even;
};

TopoState transform_state(const TopoState &s, const std::vector<AnyonPair> &to);
// Smallest change of pairing that puts a and b in one pair.
std::vector<AnyonPair> pairing_with(const TopoState &s, AnyonPair p);
std::vector<AnyonPair> pairing_with(int anyons, const std::vector<AnyonPair> &pairing, AnyonPair p);

struct PairOutcome {
    int n;
    double probability;
    TopoState state;
};

// pair must belong to the current pairing. forced in {0, 1} postselects.
PairOutcome measure_pair(const TopoState &s, AnyonPair pair, Rng &rng, int forced = -1);
// Probability of label n for any pair; transforms internally if needed.
double pair_probability(const TopoState &s, AnyonPair pair, int n);

// i gamma_a gamma_b.
TopoState apply_bilinear(const TopoState &s, int a, int b);
// (1 + gamma_b gamma_a) / sqrt(2).
TopoState apply_braid(const TopoState &s, int a, int b);

std::complex<double> inner(const TopoState &u, const TopoState &v);
double fidelity_up_to_phase(const TopoState &u, const TopoState &v);

// Amplitudes in the standard pairing, laid out like FockSpace::basis_state.
Eigen::VectorXcd to_fock(const TopoState &s);

}  // namespace twistcode

#endif
