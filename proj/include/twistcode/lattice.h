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

#ifndef TWISTCODE_LATTICE_H
#define TWISTCODE_LATTICE_H

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "twistcode/gf2.h"
#include "twistcode/pauli.h"

namespace twistcode {

using PlaquetteId = uint32_t;
using TwistId = uint32_t;

enum class PlaquetteKind : uint8_t { Square, Pentagon };
// Clockwise plaquettes map to b-type Majorana pairs, counterclockwise to a-type.
enum class Orientation : uint8_t { Clockwise, Counterclockwise };
enum class Color : uint8_t { Dark, Light, None };

struct Coord {
    int row;
    int col;
    bool operator==(const Coord &) const = default;
};

// Twist pair: dislocation along plaquette row `row`. The left twist sits at
// (row + 1, col_begin + 1), the right one at (row, col_end + 1).
struct DislocationSegment {
    int row;
    int col_begin;
    int col_end;
    bool operator==(const DislocationSegment &) const = default;
};

struct Plaquette {
    PlaquetteId id;
    PlaquetteKind kind;
    // Letters X, Z, X, Z on entries 0..3 and Y on entry 4 (pentagons).
    std::vector<SiteId> sites;
    Orientation orientation;
    // Top-left anchor in the plaquette grid.
    int row;
    int col;
    Color color;
};

struct TwistDefect {
    TwistId id;
    PlaquetteId host;
    SiteId site;
    TwistId partner;
    size_t pair;
};

class TwistLattice {
   public:
    int width() const { return width_; }
    int height() const { return height_; }
    size_t num_sites() const { return static_cast<size_t>(width_) * height_; }
    SiteId site(int row, int col) const { return static_cast<SiteId>(row * width_ + col); }
    Coord coord(SiteId s) const { return {static_cast<int>(s) / width_, static_cast<int>(s) % width_}; }
    bool on_boundary(SiteId s) const;

    const std::vector<Plaquette> &plaquettes() const { return plaquettes_; }
    const Plaquette &plaquette(PlaquetteId id) const;
    const PauliString &stabilizer(PlaquetteId id) const;
    std::optional<PlaquetteId> plaquette_at(int row, int col) const;
    // Plaquettes whose support contains the site.
    const std::vector<PlaquetteId> &plaquettes_on(SiteId s) const { return on_site_[s]; }

    const std::vector<TwistDefect> &twists() const { return twists_; }
    const std::vector<DislocationSegment> &segments() const { return segments_; }
    size_t num_pairs() const { return segments_.size(); }
    // (left twist, right twist) of a pair.
    std::pair<TwistId, TwistId> pair_twists(size_t pair) const;

    // sites minus the GF(2) rank of the plaquette group.
    size_t logical_count() const;

    // Structured text (JSON) with the dimensions and segments.
    std::string describe() const;

   private:
    friend TwistLattice build_lattice(int, int, std::vector<DislocationSegment>);
    int width_ = 0;
    int height_ = 0;
    std::vector<DislocationSegment> segments_;
    std::vector<Plaquette> plaquettes_;
    std::vector<PauliString> ops_;
    std::vector<TwistDefect> twists_;
    std::vector<std::vector<PlaquetteId>> on_site_;
    std::vector<int32_t> anchor_;
};

TwistLattice build_lattice(int width, int height, std::vector<DislocationSegment> segments);
TwistLattice lattice_from_description(std::string_view text);

PauliString plaquette_operator(const TwistLattice &lat, PlaquetteId id);
std::vector<PlaquetteId> excitations_of(const TwistLattice &lat, const PauliString &error);

// x bits in [0, n), z bits in [n, 2n).
BitVec to_symplectic(const PauliString &p, size_t n);
// Letters only; phase is +1 with Y for x=z=1.
PauliString from_symplectic(const BitVec &v, size_t n);
// Symplectic vector with halves swapped, so that dot() gives the commutation bit.
BitVec to_symplectic_dual(const PauliString &p, size_t n);

// Plaquettes whose product equals p up to phase, or nullopt.
std::optional<std::vector<PlaquetteId>> plaquette_decomposition(const TwistLattice &lat, const PauliString &p);
bool in_plaquette_group(const TwistLattice &lat, const PauliString &p);
bool in_commutant(const TwistLattice &lat, const PauliString &p);

}  // namespace twistcode

#endif
