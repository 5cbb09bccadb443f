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

#ifndef TWISTCODE_ISING_H
#define TWISTCODE_ISING_H

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <utility>
#include <vector>

namespace twistcode {

enum class Charge : uint8_t { I, Sigma, Psi };

std::string charge_name(Charge c);
// Outcomes of a x b, in the order I, sigma, psi.
std::vector<Charge> fuse(Charge a, Charge b);
bool fusion_allowed(Charge a, Charge b, Charge c);

using Matrix2 = Eigen::Matrix2cd;
using MatrixX = Eigen::MatrixXcd;

// [F^d_{abc}]_{ef}: e runs over intermediates of (a b) -> e, (e c) -> d and f
// over (b c) -> f, (a f) -> d. Empty when d is not reachable.
struct FMatrix {
    std::vector<Charge> left;
    std::vector<Charge> right;
    MatrixX m;
};
FMatrix f_matrix(Charge d, Charge a, Charge b, Charge c);
// R^c_{ab}; zero when c is not in a x b.
std::complex<double> r_symbol(Charge c, Charge a, Charge b);
// diag(R^I_{ss}, R^psi_{ss}) in the {I, psi} basis.
Matrix2 r_sigma_sigma();
// F^{-1} R F for the sigma sigma sigma -> sigma block.
Matrix2 b_sigma();

enum class Parity : uint8_t { Even, Odd };

// Four-anyon pairings. The first pair always holds anyon 1.
enum class Pairing4 : uint8_t { P12_34, P13_24, P14_23 };

std::string pairing_name(Pairing4 p);
Pairing4 parse_pairing4(const std::string &s);

// Basis change |i>_to = sum_k U_ik |k>_from inside one parity sector. Sector
// bases are ordered by the label of the first pair: even {|00>, |11>},
// odd {|01>, |10>}.
Matrix2 pair_transform(Parity parity, Pairing4 from, Pairing4 to);

}  // namespace twistcode

#endif
