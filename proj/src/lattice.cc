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

#include "twistcode/lattice.h"

#include <algorithm>

#include "json.hpp"
#include "twistcode/errors.h"

namespace twistcode {

namespace {

PauliString make_op(const Plaquette &p) {
    static const Letter pattern[5] = {Letter::X, Letter::Z, Letter::X, Letter::Z, Letter::Y};
    std::vector<PauliString::Term> terms;
    for (size_t k = 0; k < p.sites.size(); k++) {
        terms.emplace_back(p.sites[k], pattern[k]);
    }
    return PauliString(std::move(terms));
}

struct SegmentFootprint {
    int r0, r1, c0, c1;
    bool overlaps(const SegmentFootprint &o) const {
        return r0 <= o.r1 && o.r0 <= r1 && c0 <= o.c1 && o.c0 <= c1;
    }
};

SegmentFootprint footprint(const DislocationSegment &s) {
    return {s.row, s.row + 1, s.col_begin, s.col_end + 2};
}

}  // namespace

bool TwistLattice::on_boundary(SiteId s) const {
    Coord c = coord(s);
    return c.row == 0 || c.col == 0 || c.row == height_ - 1 || c.col == width_ - 1;
}

const Plaquette &TwistLattice::plaquette(PlaquetteId id) const {
    if (id >= plaquettes_.size()) {
        throw DomainError("unknown plaquette id " + std::to_string(id));
    }
    return plaquettes_[id];
}

const PauliString &TwistLattice::stabilizer(PlaquetteId id) const {
    plaquette(id);
    return ops_[id];
}

std::optional<PlaquetteId> TwistLattice::plaquette_at(int row, int col) const {
    if (row < 0 || col < 0 || row >= height_ - 1 || col >= width_ - 1) {
        return std::nullopt;
    }
    int32_t v = anchor_[row * (width_ - 1) + col];
    if (v < 0) {
        return std::nullopt;
    }
    return static_cast<PlaquetteId>(v);
}

std::pair<TwistId, TwistId> TwistLattice::pair_twists(size_t pair) const {
    if (pair >= segments_.size()) {
        throw DomainError("unknown twist pair " + std::to_string(pair));
    }
    return {static_cast<TwistId>(2 * pair), static_cast<TwistId>(2 * pair + 1)};
}

size_t TwistLattice::logical_count() const {
    std::vector<BitVec> rows;
    rows.reserve(ops_.size());
    for (const auto &op : ops_) {
        rows.push_back(to_symplectic(op, num_sites()));
    }
    return num_sites() - gf2_rank(rows);
}

std::string TwistLattice::describe() const {
    nlohmann::ordered_json j;
    j["width"] = width_;
    j["height"] = height_;
    j["segments"] = nlohmann::ordered_json::array();
    for (const auto &s : segments_) {
        j["segments"].push_back({{"row", s.row}, {"col_begin", s.col_begin}, {"col_end", s.col_end}});
    }
    return j.dump(2) + "\n";
}

TwistLattice build_lattice(int width, int height, std::vector<DislocationSegment> segments) {
    if (width < 4 || height < 4) {
        throw SizeError("lattice must be at least 4x4 sites");
    }
    for (size_t k = 0; k < segments.size(); k++) {
        const auto &s = segments[k];
        if (s.col_end < s.col_begin + 1) {
            throw GeometryError("segment " + std::to_string(k) + " needs col_end >= col_begin + 1");
        }
        if (s.row < 1 || s.row + 1 > height - 2 || s.col_begin < 1 || s.col_end + 2 > width - 2) {
            throw GeometryError("segment " + std::to_string(k) + " touches the outer boundary");
        }
        for (size_t j = 0; j < k; j++) {
            if (footprint(segments[j]).overlaps(footprint(s))) {
                throw GeometryError("segments " + std::to_string(j) + " and " + std::to_string(k) + " overlap");
            }
        }
    }

    TwistLattice lat;
    lat.width_ = width;
    lat.height_ = height;
    lat.segments_ = segments;
    lat.anchor_.assign((width - 1) * (height - 1), -1);
    lat.twists_.resize(2 * segments.size());

    auto S = [&](int r, int c) { return lat.site(r, c); };
    for (int r = 0; r + 1 < height; r++) {
        Orientation orient = (r % 2 == 0) ? Orientation::Clockwise : Orientation::Counterclockwise;
        for (int c = 0; c + 1 < width; c++) {
            // Which segment (if any) owns this anchor.
            int owner = -1;
            for (size_t k = 0; k < segments.size(); k++) {
                const auto &s = segments[k];
                if (s.row == r && c >= s.col_begin && c <= s.col_end + 1) {
                    owner = static_cast<int>(k);
                }
            }
            Plaquette p;
            p.id = static_cast<PlaquetteId>(lat.plaquettes_.size());
            p.orientation = orient;
            p.row = r;
            p.col = c;
            p.kind = PlaquetteKind::Square;
            p.color = Color::None;
            if (owner < 0) {
                p.sites = {S(r, c + 1), S(r + 1, c + 1), S(r + 1, c), S(r, c)};
                p.color = ((r + c) % 2 == 0) ? Color::Dark : Color::Light;
            } else {
                const auto &s = segments[owner];
                if (c == s.col_end + 1) {
                    continue;
                }
                if (c == s.col_begin) {
                    p.kind = PlaquetteKind::Pentagon;
                    p.sites = {S(r, c + 1), S(r + 1, c + 2), S(r + 1, c), S(r, c), S(r + 1, c + 1)};
                    lat.twists_[2 * owner] = {static_cast<TwistId>(2 * owner), p.id, p.sites[4],
                                              static_cast<TwistId>(2 * owner + 1), static_cast<size_t>(owner)};
                } else if (c == s.col_end) {
                    p.kind = PlaquetteKind::Pentagon;
                    p.sites = {S(r, c + 2), S(r + 1, c + 2), S(r + 1, c + 1), S(r, c), S(r, c + 1)};
                    lat.twists_[2 * owner + 1] = {static_cast<TwistId>(2 * owner + 1), p.id, p.sites[4],
                                                  static_cast<TwistId>(2 * owner), static_cast<size_t>(owner)};
                } else {
                    p.sites = {S(r, c + 1), S(r + 1, c + 2), S(r + 1, c + 1), S(r, c)};
                }
            }
            lat.anchor_[r * (width - 1) + c] = static_cast<int32_t>(p.id);
            lat.plaquettes_.push_back(std::move(p));
        }
    }

    lat.on_site_.assign(lat.num_sites(), {});
    for (const auto &p : lat.plaquettes_) {
        lat.ops_.push_back(make_op(p));
        for (SiteId s : p.sites) {
            lat.on_site_[s].push_back(p.id);
        }
    }

    // Commutation and independence are part of the construction contract.
    for (size_t a = 0; a < lat.ops_.size(); a++) {
        for (size_t b = a + 1; b < lat.ops_.size(); b++) {
            if (!commutes(lat.ops_[a], lat.ops_[b])) {
                throw GeometryError("plaquettes " + std::to_string(a) + " and " + std::to_string(b) +
                                    " anticommute; segment layout is not supported");
            }
        }
    }
    if (lat.num_sites() - lat.logical_count() != lat.ops_.size()) {
        throw GeometryError("plaquette operators are not independent for this segment layout");
    }
    return lat;
}

TwistLattice lattice_from_description(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception &e) {
        throw DomainError(std::string("malformed lattice description: ") + e.what());
    }
    try {
        if (!j.is_object()) {
            throw DomainError("lattice description must be an object");
        }
        for (const auto &[k, v] : j.items()) {
            if (k != "width" && k != "height" && k != "segments") {
                throw DomainError("unknown lattice field '" + k + "'");
            }
        }
        std::vector<DislocationSegment> segs;
        if (j.contains("segments")) {
            for (const auto &s : j.at("segments")) {
                for (const auto &[k, v] : s.items()) {
                    if (k != "row" && k != "col_begin" && k != "col_end") {
                        throw DomainError("unknown segment field '" + k + "'");
                    }
                }
                segs.push_back({s.at("row").get<int>(), s.at("col_begin").get<int>(), s.at("col_end").get<int>()});
            }
        }
        return build_lattice(j.at("width").get<int>(), j.at("height").get<int>(), std::move(segs));
    } catch (const nlohmann::json::exception &e) {
        throw DomainError(std::string("bad lattice description: ") + e.what());
    }
}

PauliString plaquette_operator(const TwistLattice &lat, PlaquetteId id) {
    return lat.stabilizer(id);
}

std::vector<PlaquetteId> excitations_of(const TwistLattice &lat, const PauliString &error) {
    std::vector<PlaquetteId> out;
    for (const auto &[s, l] : error.terms()) {
        if (s >= lat.num_sites()) {
            throw DomainError("site " + std::to_string(s) + " is not on the lattice");
        }
    }
    for (const auto &p : lat.plaquettes()) {
        if (!commutes(lat.stabilizer(p.id), error)) {
            out.push_back(p.id);
        }
    }
    return out;
}

BitVec to_symplectic(const PauliString &p, size_t n) {
    BitVec v(2 * n);
    for (const auto &[s, l] : p.terms()) {
        if (s >= n) {
            throw DomainError("site " + std::to_string(s) + " out of range");
        }
        v.set(s, static_cast<int>(l) & 1);
        v.set(n + s, static_cast<int>(l) & 2);
    }
    return v;
}

BitVec to_symplectic_dual(const PauliString &p, size_t n) {
    BitVec v(2 * n);
    for (const auto &[s, l] : p.terms()) {
        if (s >= n) {
            throw DomainError("site " + std::to_string(s) + " out of range");
        }
        v.set(n + s, static_cast<int>(l) & 1);
        v.set(s, static_cast<int>(l) & 2);
    }
    return v;
}

PauliString from_symplectic(const BitVec &v, size_t n) {
    std::vector<PauliString::Term> terms;
    for (size_t s = 0; s < n; s++) {
        int l = (v.get(s) ? 1 : 0) | (v.get(n + s) ? 2 : 0);
        if (l) {
            terms.emplace_back(static_cast<SiteId>(s), static_cast<Letter>(l));
        }
    }
    return PauliString(std::move(terms));
}

std::optional<std::vector<PlaquetteId>> plaquette_decomposition(const TwistLattice &lat, const PauliString &p) {
    size_t n = lat.num_sites();
    Gf2Basis b(2 * n, lat.plaquettes().size());
    for (const auto &pl : lat.plaquettes()) {
        b.add(to_symplectic(lat.stabilizer(pl.id), n));
    }
    auto e = b.express(to_symplectic(p, n));
    if (!e) {
        return std::nullopt;
    }
    return std::vector<PlaquetteId>(e->begin(), e->end());
}

bool in_plaquette_group(const TwistLattice &lat, const PauliString &p) {
    return plaquette_decomposition(lat, p).has_value();
}

bool in_commutant(const TwistLattice &lat, const PauliString &p) {
    for (const auto &pl : lat.plaquettes()) {
        if (!commutes(lat.stabilizer(pl.id), p)) {
            return false;
        }
    }
    return true;
}

}  // namespace twistcode
