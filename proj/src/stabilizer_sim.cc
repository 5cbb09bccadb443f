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

#include "twistcode/stabilizer_sim.h"

#include <algorithm>
#include <cmath>

#include "twistcode/errors.h"

namespace twistcode {

namespace {

struct Point {
    double row;
    double col;
};

Point center(const Plaquette &p) {
    return {p.row + 0.5, p.col + 0.5};
}

// Even-odd rule; the caller keeps points off the polygon.
bool inside(const std::vector<Point> &poly, Point q) {
    bool in = false;
    for (size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
        const Point &a = poly[i];
        const Point &b = poly[j];
        if ((a.row > q.row) != (b.row > q.row)) {
            double c = a.col + (q.row - a.row) * (b.col - a.col) / (b.row - a.row);
            if (q.col < c) {
                in = !in;
            }
        }
    }
    return in;
}

std::optional<SiteId> shared_site(const Plaquette &p, const Plaquette &q) {
    std::optional<SiteId> out;
    int count = 0;
    for (SiteId s : p.sites) {
        if (std::find(q.sites.begin(), q.sites.end(), s) != q.sites.end()) {
            out = s;
            count++;
        }
    }
    if (count != 1) {
        return std::nullopt;
    }
    return out;
}

// Single-site operator joining two diagonal neighbours through site s.
PauliString joining_op(const TwistLattice &lat, PlaquetteId p, SiteId s) {
    Letter l = lat.stabilizer(p).at(s);
    return PauliString::single(s, l == Letter::X ? Letter::Z : Letter::X);
}

}  // namespace

LatticeSimulator::LatticeSimulator(std::shared_ptr<const TwistLattice> lat, uint64_t seed)
    : lat_(std::move(lat)), tab_(lat_->num_sites()), rng_(seed), active_(lat_->plaquettes().size(), true) {}

LatticeSimulator LatticeSimulator::init_ground(std::shared_ptr<const TwistLattice> lat, uint64_t seed) {
    LatticeSimulator sim(std::move(lat), seed);
    std::vector<PlaquetteId> flip;
    for (const auto &pl : sim.lat_->plaquettes()) {
        const PauliString &a = sim.lat_->stabilizer(pl.id);
        auto v = sim.tab_.peek(a);
        if (v && *v < 0) {
            flip.push_back(pl.id);
        } else if (!v) {
            sim.tab_.measure(a, sim.rng_, +1);
        }
    }
    if (!flip.empty()) {
        sim.correct(flip, {});
    }
    for (size_t k = 0; k < sim.lat_->num_pairs(); k++) {
        sim.pairs_.push_back(twist_logicals(*sim.lat_, k));
        sim.register_logical(sim.pairs_.back().z);
        sim.register_logical(sim.pairs_.back().x);
    }
    return sim;
}

int LatticeSimulator::measure_pauli(const PauliString &p, int forced) {
    return tab_.measure(p, rng_, forced).outcome;
}

void LatticeSimulator::register_logical(const PauliString &p) {
    if (!in_commutant(*lat_, p)) {
        throw DomainError("logical operators must commute with every plaquette");
    }
    logicals_.push_back(p);
}

const TwistLogicals &LatticeSimulator::pair_logicals(size_t pair) const {
    if (pair >= pairs_.size()) {
        throw DomainError("unknown twist pair " + std::to_string(pair));
    }
    return pairs_[pair];
}

std::vector<PauliString> LatticeSimulator::protected_representatives(const std::vector<PauliString> &ops) const {
    // Unknowns: which registered logicals and which plaquettes enter a product
    // that commutes with every op.
    std::vector<PlaquetteId> rel;
    for (const auto &pl : lat_->plaquettes()) {
        for (const auto &o : ops) {
            if (!commutes(lat_->stabilizer(pl.id), o)) {
                rel.push_back(pl.id);
                break;
            }
        }
    }
    auto row_of = [&](const PauliString &p) {
        BitVec r(ops.size());
        for (size_t i = 0; i < ops.size(); i++) {
            r.set(i, !commutes(p, ops[i]));
        }
        return r;
    };
    std::vector<BitVec> rows;
    for (const auto &l : logicals_) {
        rows.push_back(row_of(l));
    }
    for (PlaquetteId id : rel) {
        rows.push_back(row_of(lat_->stabilizer(id)));
    }
    std::vector<PauliString> out;
    size_t nl = logicals_.size();
    for (const auto &y : gf2_left_nullspace(rows, ops.size())) {
        bool any_logical = false;
        PauliString rep;
        for (size_t k = 0; k < rows.size(); k++) {
            if (!y.get(k)) {
                continue;
            }
            if (k < nl) {
                any_logical = true;
                rep *= logicals_[k];
            } else {
                rep *= lat_->stabilizer(rel[k - nl]);
            }
        }
        if (any_logical) {
            out.push_back(std::move(rep));
        }
    }
    return out;
}

void LatticeSimulator::correct(const std::vector<PlaquetteId> &flip, const std::vector<PauliString> &keep) {
    size_t n = lat_->num_sites();
    std::vector<BitVec> rows;
    const auto &pls = lat_->plaquettes();
    BitVec rhs(pls.size() + keep.size());
    for (const auto &pl : pls) {
        rows.push_back(to_symplectic_dual(lat_->stabilizer(pl.id), n));
    }
    for (PlaquetteId id : flip) {
        rhs.set(id, true);
    }
    for (const auto &k : keep) {
        rows.push_back(to_symplectic_dual(k, n));
    }
    auto c = gf2_solve(rows, rhs, 2 * n);
    if (!c) {
        fail_invariant("no Pauli correction restores the plaquette signs");
    }
    tab_.apply_pauli(from_symplectic(*c, n));
}

ParityReadout LatticeSimulator::measure_parity_direct(size_t pair, DirectOptions opt) {
    return measure_parity_direct(pair_logicals(pair).z, opt);
}

ParityReadout LatticeSimulator::measure_parity_direct(const PauliString &parity, DirectOptions opt) {
    if (!parity.is_hermitian()) {
        throw DomainError("parity string must be Hermitian");
    }
    if (!in_commutant(*lat_, parity)) {
        throw DomainError("parity string must commute with every plaquette");
    }
    std::vector<PauliString> letters;
    for (const auto &[s, l] : parity.terms()) {
        letters.push_back(PauliString::single(s, l));
    }
    std::vector<PlaquetteId> disabled;
    for (const auto &pl : lat_->plaquettes()) {
        for (const auto &o : letters) {
            if (!commutes(lat_->stabilizer(pl.id), o)) {
                disabled.push_back(pl.id);
                break;
            }
        }
    }
    std::vector<PauliString> keep = protected_representatives(letters);
    keep.push_back(parity);
    for (PlaquetteId id : disabled) {
        active_[id] = false;
    }

    int outcome = parity.phase().sign();
    for (const auto &o : letters) {
        outcome *= tab_.measure(o, rng_).outcome;
    }

    std::vector<int> signs;
    for (PlaquetteId id : disabled) {
        signs.push_back(tab_.measure(lat_->stabilizer(id), rng_).outcome);
        active_[id] = true;
    }

    ParityReadout r{outcome, true, {}, 0};
    if (opt.check_syndrome) {
        for (const auto &pl : lat_->plaquettes()) {
            if (std::binary_search(disabled.begin(), disabled.end(), pl.id)) {
                continue;
            }
            auto v = tab_.peek(lat_->stabilizer(pl.id));
            if (!v || *v != +1) {
                r.flagged.push_back(pl.id);
            }
        }
        std::vector<BitVec> rows;
        for (PlaquetteId id : disabled) {
            BitVec b(letters.size());
            for (size_t i = 0; i < letters.size(); i++) {
                b.set(i, !commutes(lat_->stabilizer(id), letters[i]));
            }
            rows.push_back(std::move(b));
        }
        for (const auto &y : gf2_left_nullspace(rows, letters.size())) {
            int prod = 1;
            for (size_t k = 0; k < disabled.size(); k++) {
                if (y.get(k)) {
                    prod *= signs[k];
                }
            }
            r.failed_checks += prod != +1;
        }
        r.syndrome_clean = r.flagged.empty() && r.failed_checks == 0;
    }

    std::vector<PlaquetteId> flip;
    for (size_t k = 0; k < disabled.size(); k++) {
        if (signs[k] < 0) {
            flip.push_back(disabled[k]);
        }
    }
    if (!flip.empty()) {
        correct(flip, keep);
    }
    return r;
}

HoleLoopResult LatticeSimulator::measure_parity_hole(std::optional<size_t> pair, const std::vector<PlaquetteId> &loop) {
    const TwistLattice &lat = *lat_;
    if (loop.size() < 5 || loop.front() != loop.back()) {
        throw GeometryError("hole loop must be closed and have at least four steps");
    }
    Color col = lat.plaquette(loop[0]).color;
    if (col == Color::None) {
        throw GeometryError("hole loop must stay outside dislocation segments");
    }
    size_t steps = loop.size() - 1;
    std::vector<PauliString> moves;
    std::vector<Point> poly;
    for (size_t i = 0; i < steps; i++) {
        const Plaquette &p = lat.plaquette(loop[i]);
        const Plaquette &q = lat.plaquette(loop[i + 1]);
        if (p.color != col || q.color != col || std::abs(p.row - q.row) != 1 || std::abs(p.col - q.col) != 1) {
            throw GeometryError("hole loop steps must join same-colour diagonal neighbours");
        }
        auto s = shared_site(p, q);
        if (!s) {
            throw GeometryError("hole loop steps must share exactly one site");
        }
        PauliString o = joining_op(lat, p.id, *s);
        auto ex = excitations_of(lat, o);
        std::vector<PlaquetteId> want = {std::min(p.id, q.id), std::max(p.id, q.id)};
        if (ex != want) {
            throw GeometryError("hole loop passes too close to a twist");
        }
        moves.push_back(o);
        poly.push_back(center(p));
    }

    std::vector<TwistId> enclosed;
    for (const auto &t : lat.twists()) {
        Coord c = lat.coord(t.site);
        for (const auto &m : moves) {
            if (m.terms()[0].first == t.site) {
                throw GeometryError("hole loop passes through a twist");
            }
        }
        if (inside(poly, {static_cast<double>(c.row), static_cast<double>(c.col)})) {
            enclosed.push_back(t.id);
        }
    }
    std::optional<size_t> enclosed_pair;
    if (enclosed.size() == 2 && lat.twists()[enclosed[0]].partner == enclosed[1]) {
        enclosed_pair = lat.twists()[enclosed[0]].pair;
    } else if (!enclosed.empty()) {
        throw GeometryError("hole loop must enclose no twist or exactly one twist pair");
    }
    if (pair && enclosed_pair && *pair != *enclosed_pair) {
        throw GeometryError("hole loop encloses a different twist pair");
    }
    if (pair && *pair >= lat.num_pairs()) {
        throw DomainError("unknown twist pair " + std::to_string(*pair));
    }

    // Second hole: a same-colour diagonal neighbour of loop[0] outside the loop.
    const Plaquette &start = lat.plaquette(loop[0]);
    std::optional<PlaquetteId> h1;
    PauliString z_l;
    for (auto [dr, dc] : {std::pair{-1, -1}, std::pair{-1, 1}, std::pair{1, -1}, std::pair{1, 1}}) {
        auto id = lat.plaquette_at(start.row + dr, start.col + dc);
        if (!id || std::find(loop.begin(), loop.end(), *id) != loop.end()) {
            continue;
        }
        const Plaquette &h = lat.plaquette(*id);
        if (h.color != col || inside(poly, center(h))) {
            continue;
        }
        auto s = shared_site(start, h);
        if (!s) {
            continue;
        }
        PauliString o = joining_op(lat, start.id, *s);
        std::vector<PlaquetteId> want = {std::min(start.id, h.id), std::max(start.id, h.id)};
        if (excitations_of(lat, o) != want) {
            continue;
        }
        h1 = h.id;
        z_l = o;
        break;
    }
    if (!h1) {
        throw GeometryError("no room for the second hole next to the loop start");
    }

    // Loop string versus enclosed plaquettes (and the enclosed pair parity).
    PauliString loop_op;
    for (const auto &m : moves) {
        loop_op *= m;
    }
    std::vector<PlaquetteId> interior;
    for (const auto &pl : lat.plaquettes()) {
        if (std::find(loop.begin(), loop.end(), pl.id) == loop.end() && inside(poly, center(pl))) {
            interior.push_back(pl.id);
        }
    }
    PauliString target = loop_op;
    if (enclosed_pair) {
        target *= pair_logicals(*enclosed_pair).z;
    }
    size_t n = lat.num_sites();
    Gf2Basis basis(2 * n, interior.size());
    for (PlaquetteId id : interior) {
        basis.add(to_symplectic(lat.stabilizer(id), n));
    }
    auto combo = basis.express(to_symplectic(target, n));
    if (!combo) {
        fail_invariant("loop string is not generated by the enclosed plaquettes");
    }
    PauliString residue = target;
    for (size_t k : *combo) {
        residue *= lat.stabilizer(interior[k]);
    }
    if (!residue.terms().empty() || !residue.phase().is_real()) {
        fail_invariant("loop string sign is not real");
    }
    int c = residue.phase().sign();

    std::vector<PauliString> ops = moves;
    ops.push_back(z_l);
    std::vector<PauliString> keep = protected_representatives(ops);

    HolePair holes{*h1, loop[0], loop[0], z_l, lat.stabilizer(*h1)};
    active_[*h1] = false;
    active_[loop[0]] = false;
    int z1 = tab_.measure(z_l, rng_).outcome;
    for (size_t i = 0; i < steps; i++) {
        PlaquetteId p = loop[i];
        PlaquetteId q = loop[i + 1];
        active_[q] = false;
        if (tab_.measure(moves[i], rng_).outcome < 0) {
            tab_.apply_pauli(lat.stabilizer(q));
        }
        if (tab_.measure(lat.stabilizer(p), rng_).outcome < 0) {
            tab_.apply_pauli(moves[i]);
        }
        active_[p] = true;
        holes.moving_at = q;
    }
    int z2 = tab_.measure(z_l, rng_).outcome;

    std::vector<PlaquetteId> flip;
    for (PlaquetteId id : {loop[0], *h1}) {
        if (tab_.measure(lat.stabilizer(id), rng_).outcome < 0) {
            flip.push_back(id);
        }
        active_[id] = true;
    }
    if (!flip.empty()) {
        correct(flip, keep);
    }
    return {c * z1 * z2, z1, z2, c, enclosed_pair.has_value(), holes};
}

std::vector<PlaquetteId> rotated_rectangle_loop(const TwistLattice &lat, int row, int col, int a, int b) {
    if (a < 1 || b < 1) {
        throw GeometryError("loop sides must be positive");
    }
    std::vector<PlaquetteId> out;
    auto push = [&](int r, int c) {
        auto id = lat.plaquette_at(r, c);
        if (!id) {
            throw GeometryError("loop leaves the plaquette grid");
        }
        out.push_back(*id);
    };
    int r = row, c = col;
    push(r, c);
    const std::pair<int, int> dirs[4] = {{1, 1}, {1, -1}, {-1, -1}, {-1, 1}};
    const int lens[4] = {a, b, a, b};
    for (int d = 0; d < 4; d++) {
        for (int k = 0; k < lens[d]; k++) {
            r += dirs[d].first;
            c += dirs[d].second;
            push(r, c);
        }
    }
    return out;
}

}  // namespace twistcode
