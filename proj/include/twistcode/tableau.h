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

#ifndef TWISTCODE_TABLEAU_H
#define TWISTCODE_TABLEAU_H

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twistcode/gf2.h"
#include "twistcode/pauli.h"
#include "twistcode/rng.h"

namespace twistcode {

// i^k X^x Z^z.
struct PauliRow {
    BitVec x;
    BitVec z;
    uint8_t k = 0;

    static PauliRow from(const PauliString &p, size_t n);
    PauliString to_string() const;
    bool anticommutes(const PauliRow &o) const;
    // this <- this * o
    void times(const PauliRow &o);
    bool operator==(const PauliRow &) const = default;
};

// Stabilizer state with destabilizers, Aaronson-Gottesman style.
class Tableau {
   public:
    Tableau() = default;
    // |0...0>.
    explicit Tableau(size_t n);

    struct Measurement {
        int outcome;
        bool deterministic;
    };

    size_t num_qubits() const { return n_; }
    // forced is 0 for a random outcome, otherwise +1 or -1 (postselection);
    // forcing an impossible deterministic outcome throws ZeroProbabilityError.
    Measurement measure(const PauliString &p, Rng &rng, int forced = 0);
    std::optional<int> peek(const PauliString &p) const;
    void apply_pauli(const PauliString &p);

    PauliString stabilizer(size_t i) const { return rows_[n_ + i].to_string(); }
    PauliString destabilizer(size_t i) const { return rows_[i].to_string(); }

    bool check_invariants() const;

    std::string serialize() const;
    static Tableau deserialize(std::string_view text);

    bool operator==(const Tableau &) const = default;

   private:
    size_t n_ = 0;
    // Destabilizers in [0, n), stabilizers in [n, 2n).
    std::vector<PauliRow> rows_;
};

}  // namespace twistcode

#endif
