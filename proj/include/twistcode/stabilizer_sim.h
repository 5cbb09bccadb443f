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

#ifndef TWISTCODE_STABILIZER_SIM_H
#define TWISTCODE_STABILIZER_SIM_H

#include <memory>
#include <optional>
#include <vector>

#include "twistcode/lattice.h"
#include "twistcode/logicals.h"
#include "twistcode/rng.h"
#include "twistcode/tableau.h"

namespace twistcode {

struct ParityReadout {
    int outcome;
    // No stabilizer disagreed with its recorded sign.
    bool syndrome_clean;
    // Non-disabled plaquettes that disagreed.
    std::vector<PlaquetteId> flagged;
    // Products of disabled plaquettes that disagreed.
    size_t failed_checks = 0;
};

struct HolePair {
    PlaquetteId first;
    PlaquetteId second;
    // Where the moving hole sits now.
    PlaquetteId moving_at;
    PauliString z_l;
    PauliString x_l;
};

struct HoleLoopResult {
    int outcome;
    int z_before;
    int z_after;
    // Sign c in (loop string) = c * (enclosed plaquettes) * (pair parity)^enclosed.
    int loop_sign;
    bool encloses_pair;
    HolePair holes;
};

struct DirectOptions {
    bool check_syndrome = true;
};

class LatticeSimulator {
   public:
    // Ground state: |0...0> with every plaquette postselected to +1, then
    // registers the twist logicals of every pair.
    static LatticeSimulator init_ground(std::shared_ptr<const TwistLattice> lat, uint64_t seed);

    const TwistLattice &lattice() const { return *lat_; }
    const Tableau &tableau() const { return tab_; }
    Rng &rng() { return rng_; }

    // forced is 0 for a random outcome, otherwise the postselected sign.
    int measure_pauli(const PauliString &p, int forced = 0);
    std::optional<int> peek(const PauliString &p) const { return tab_.peek(p); }
    void apply_pauli(const PauliString &p) { tab_.apply_pauli(p); }

    void register_logical(const PauliString &p);
    const std::vector<PauliString> &logicals() const { return logicals_; }
    const TwistLogicals &pair_logicals(size_t pair) const;

    bool active(PlaquetteId id) const { return active_.at(id); }

    ParityReadout measure_parity_direct(size_t pair, DirectOptions opt = {});
    // Any string commuting with every plaquette.
    ParityReadout measure_parity_direct(const PauliString &parity, DirectOptions opt = {});

    // Loop of plaquettes, first == last, each step a same-colour diagonal
    // neighbour. The loop must enclose no twist or exactly one pair; a pair
    // given explicitly must be the enclosed one.
    HoleLoopResult measure_parity_hole(std::optional<size_t> pair, const std::vector<PlaquetteId> &loop);

   private:
    LatticeSimulator(std::shared_ptr<const TwistLattice> lat, uint64_t seed);
    // Products of registered logicals and plaquettes that commute with every op,
    // spanning everything the logicals can still say about the state.
    std::vector<PauliString> protected_representatives(const std::vector<PauliString> &ops) const;
    // Pauli that flips exactly `flip` among the plaquettes and commutes with `keep`.
    void correct(const std::vector<PlaquetteId> &flip, const std::vector<PauliString> &keep);

    std::shared_ptr<const TwistLattice> lat_;
    Tableau tab_;
    Rng rng_;
    std::vector<bool> active_;
    std::vector<PauliString> logicals_;
    std::vector<TwistLogicals> pairs_;
};

// Plaquettes visited by walking (+1,+1) a times, (+1,-1) b times, (-1,-1) a
// times and (-1,+1) b times from the anchor (row, col); closed.
std::vector<PlaquetteId> rotated_rectangle_loop(const TwistLattice &lat, int row, int col, int a, int b);

}  // namespace twistcode

#endif
