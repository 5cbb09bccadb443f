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

#ifndef TWISTCODE_JORDAN_WIGNER_H
#define TWISTCODE_JORDAN_WIGNER_H

#include <optional>
#include <string>
#include <vector>

#include "twistcode/lattice.h"
#include "twistcode/pauli.h"

namespace twistcode {

enum class Substitution : uint8_t { None, SwapXY, SwapZY };
enum class MajoranaKind : uint8_t { A = 0, B = 1 };

struct MajoranaMode {
    SiteId site;
    MajoranaKind kind;
    bool operator==(const MajoranaMode &) const = default;
    std::string str() const;
};

class JWPath {
   public:
    // Boustrophedon: row 0 left to right, row 1 right to left, and so on.
    static JWPath serpentine(const TwistLattice &lat);
    static JWPath from_order(const TwistLattice &lat, std::vector<SiteId> order);
    // Path over sites 0..n-1 with no lattice attached; substitutions are refused.
    static JWPath bare(std::vector<SiteId> order);

    // Only boundary sites may carry a substitution.
    JWPath &substitute(SiteId s, Substitution sub);

    size_t size() const { return order_.size(); }
    const std::vector<SiteId> &order() const { return order_; }
    uint32_t position(SiteId s) const;
    Substitution substitution(SiteId s) const { return subs_[s]; }

    // Letter represented as U_j * gamma^b_j.
    Letter b_letter(SiteId s) const;
    // Letter represented as U_j * gamma^a_j.
    Letter a_letter(SiteId s) const;
    // Letter that is the local factor of the disorder string; equals
    // string_phase(s) * gamma^b_s gamma^a_s.
    Letter string_letter(SiteId s) const;
    Phase string_phase(SiteId s) const;

    // Canonical sort key (position, kind).
    uint32_t key(const MajoranaMode &m) const { return 2 * position(m.site) + static_cast<uint32_t>(m.kind); }
    MajoranaMode mode_of_key(uint32_t k) const {
        return {order_[k / 2], static_cast<MajoranaKind>(k & 1)};
    }

   private:
    std::vector<SiteId> order_;
    std::vector<uint32_t> pos_;
    std::vector<Substitution> subs_;
    std::vector<bool> boundary_;
};

// Serpentine path with the boundary swaps applied at every row turn whose two
// sites lie strictly between path positions lo and hi.
JWPath turn_substituted_path(const TwistLattice &lat, uint32_t lo, uint32_t hi);
// Serpentine path with every row turn substituted.
JWPath fully_substituted_path(const TwistLattice &lat);
// Default path for the parity of one twist pair.
JWPath pair_path(const TwistLattice &lat, size_t pair);

class MajoranaMonomial {
   public:
    MajoranaMonomial() = default;
    // Puts arbitrary factors in canonical order, cancelling squares.
    static MajoranaMonomial canonical(const std::vector<MajoranaMode> &factors, Phase phase, const JWPath &path);

    const std::vector<MajoranaMode> &factors() const { return factors_; }
    Phase phase() const { return phase_; }
    bool operator==(const MajoranaMonomial &) const = default;
    std::string str() const;

    MajoranaMonomial times(const MajoranaMonomial &o, const JWPath &path) const;

   private:
    std::vector<MajoranaMode> factors_;
    Phase phase_;
};

MajoranaMonomial jw_map(const PauliString &p, const JWPath &path);
// Inverse map: spin form of a Majorana monomial.
PauliString majorana_to_spin(const MajoranaMonomial &m, const JWPath &path);

struct ModeClassification {
    std::vector<MajoranaMode> paired;
    std::vector<MajoranaMode> unpaired;
    // Modes on the outer boundary absent from every plaquette image.
    std::vector<MajoranaMode> edge;
};

ModeClassification classify_modes(const TwistLattice &lat, const JWPath &path);
// The unpaired mode at a twist site.
MajoranaMode twist_mode(const TwistLattice &lat, const JWPath &path, TwistId t);
// i * gamma(first) * gamma(second) for two modes, ordered by the path.
PauliString mode_parity(const MajoranaMode &m1, const MajoranaMode &m2, const JWPath &path);
PauliString parity_operator(const TwistLattice &lat, const JWPath &path, size_t pair);

// True iff the image is a product of two bilinears i*g*g all of one kind.
bool is_pair_product(const MajoranaMonomial &m);

PauliString reduce_by_stabilizers(const PauliString &p, const TwistLattice &lat);

}  // namespace twistcode

#endif
