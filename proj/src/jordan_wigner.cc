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

#include "twistcode/jordan_wigner.h"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>

#include "twistcode/errors.h"

namespace twistcode {

std::string MajoranaMode::str() const {
    return std::string(kind == MajoranaKind::A ? "ga" : "gb") + std::to_string(site);
}

JWPath JWPath::from_order(const TwistLattice &lat, std::vector<SiteId> order) {
    size_t n = lat.num_sites();
    if (order.size() != n) {
        throw DomainError("path must visit every site exactly once");
    }
    JWPath p;
    p.pos_.assign(n, UINT32_MAX);
    for (size_t k = 0; k < n; k++) {
        if (order[k] >= n || p.pos_[order[k]] != UINT32_MAX) {
            throw DomainError("path must visit every site exactly once");
        }
        p.pos_[order[k]] = static_cast<uint32_t>(k);
    }
    p.order_ = std::move(order);
    p.subs_.assign(n, Substitution::None);
    p.boundary_.resize(n);
    for (size_t s = 0; s < n; s++) {
        p.boundary_[s] = lat.on_boundary(static_cast<SiteId>(s));
    }
    return p;
}

JWPath JWPath::bare(std::vector<SiteId> order) {
    size_t n = order.size();
    JWPath p;
    p.pos_.assign(n, UINT32_MAX);
    for (size_t k = 0; k < n; k++) {
        if (order[k] >= n || p.pos_[order[k]] != UINT32_MAX) {
            throw DomainError("path must visit every site exactly once");
        }
        p.pos_[order[k]] = static_cast<uint32_t>(k);
    }
    p.order_ = std::move(order);
    p.subs_.assign(n, Substitution::None);
    p.boundary_.assign(n, false);
    return p;
}

JWPath JWPath::serpentine(const TwistLattice &lat) {
    std::vector<SiteId> order;
    for (int r = 0; r < lat.height(); r++) {
        for (int k = 0; k < lat.width(); k++) {
            int c = (r % 2 == 0) ? k : lat.width() - 1 - k;
            order.push_back(lat.site(r, c));
        }
    }
    return from_order(lat, std::move(order));
}

JWPath &JWPath::substitute(SiteId s, Substitution sub) {
    if (s >= subs_.size()) {
        throw DomainError("site " + std::to_string(s) + " is not on the lattice");
    }
    if (sub != Substitution::None && !boundary_[s]) {
        throw DomainError("substitutions are only allowed on boundary sites");
    }
    subs_[s] = sub;
    return *this;
}

uint32_t JWPath::position(SiteId s) const {
    if (s >= pos_.size()) {
        throw DomainError("site " + std::to_string(s) + " is not on the lattice");
    }
    return pos_[s];
}

Letter JWPath::b_letter(SiteId s) const {
    return subs_[s] == Substitution::SwapXY ? Letter::Y : Letter::X;
}

Letter JWPath::a_letter(SiteId s) const {
    return subs_[s] == Substitution::SwapZY ? Letter::Y : Letter::Z;
}

Letter JWPath::string_letter(SiteId s) const {
    switch (subs_[s]) {
        case Substitution::SwapXY:
            return Letter::X;
        case Substitution::SwapZY:
            return Letter::Z;
        default:
            return Letter::Y;
    }
}

Phase JWPath::string_phase(SiteId s) const {
    // gamma^b gamma^a = B A = ph * S, so S = conj(ph) gamma^b gamma^a.
    return letter_product(b_letter(s), a_letter(s)).first.conj();
}

JWPath turn_substituted_path(const TwistLattice &lat, uint32_t lo, uint32_t hi) {
    JWPath path = JWPath::serpentine(lat);
    int w = lat.width();
    static const std::pair<Substitution, Substitution> options[2] = {
        {Substitution::SwapXY, Substitution::SwapZY},
        {Substitution::SwapZY, Substitution::SwapXY},
    };
    for (int r = 0; r + 1 < lat.height(); r++) {
        int end = (r % 2 == 0) ? w - 1 : 0;
        SiteId p = lat.site(r, end);
        SiteId q = lat.site(r + 1, end);
        if (path.position(p) <= lo || path.position(q) >= hi) {
            continue;
        }
        // Pick the swap whose change to the disorder string is invisible to
        // every plaquette.
        bool done = false;
        for (const auto &[sp, sq] : options) {
            JWPath trial = path;
            trial.substitute(p, sp).substitute(q, sq);
            PauliString delta = PauliString({{p, trial.string_letter(p)}, {q, trial.string_letter(q)}}) *
                                PauliString({{p, Letter::Y}, {q, Letter::Y}});
            if (in_commutant(lat, delta)) {
                path = trial;
                done = true;
                break;
            }
        }
        if (!done) {
            fail_invariant("no boundary substitution at row turn " + std::to_string(r));
        }
    }
    return path;
}

JWPath fully_substituted_path(const TwistLattice &lat) {
    return turn_substituted_path(lat, 0, UINT32_MAX);
}

JWPath pair_path(const TwistLattice &lat, size_t pair) {
    auto [t1, t2] = lat.pair_twists(pair);
    JWPath plain = JWPath::serpentine(lat);
    uint32_t a = plain.position(lat.twists()[t1].site);
    uint32_t b = plain.position(lat.twists()[t2].site);
    return turn_substituted_path(lat, std::min(a, b), std::max(a, b));
}

namespace {

// Sorted set of mode keys with a phase; right-multiplication by single modes.
struct KeyProduct {
    std::vector<uint32_t> keys;
    Phase phase;

    void times_mode(uint32_t k) {
        auto it = std::lower_bound(keys.begin(), keys.end(), k);
        size_t greater = keys.end() - it;
        if (it != keys.end() && *it == k) {
            greater--;
            if (greater & 1) {
                phase *= Phase::minus_one();
            }
            keys.erase(it);
        } else {
            if (greater & 1) {
                phase *= Phase::minus_one();
            }
            keys.insert(it, k);
        }
    }
};

MajoranaMonomial from_keys(const KeyProduct &kp, const JWPath &path) {
    std::vector<MajoranaMode> f;
    f.reserve(kp.keys.size());
    for (uint32_t k : kp.keys) {
        f.push_back(path.mode_of_key(k));
    }
    return MajoranaMonomial::canonical(f, kp.phase, path);
}

}  // namespace

MajoranaMonomial MajoranaMonomial::canonical(const std::vector<MajoranaMode> &factors, Phase phase,
                                             const JWPath &path) {
    KeyProduct kp{{}, phase};
    for (const auto &m : factors) {
        kp.times_mode(path.key(m));
    }
    MajoranaMonomial r;
    r.phase_ = kp.phase;
    for (uint32_t k : kp.keys) {
        r.factors_.push_back(path.mode_of_key(k));
    }
    return r;
}

MajoranaMonomial MajoranaMonomial::times(const MajoranaMonomial &o, const JWPath &path) const {
    std::vector<MajoranaMode> f = factors_;
    f.insert(f.end(), o.factors_.begin(), o.factors_.end());
    return canonical(f, phase_ * o.phase_, path);
}

std::string MajoranaMonomial::str() const {
    std::ostringstream out;
    out << phase_.prefix();
    if (factors_.empty()) {
        out << "1";
    }
    for (size_t k = 0; k < factors_.size(); k++) {
        if (k) {
            out << ' ';
        }
        out << factors_[k].str();
    }
    return out.str();
}

MajoranaMonomial jw_map(const PauliString &p, const JWPath &path) {
    KeyProduct kp{{}, p.phase()};
    for (const auto &[s, l] : p.terms()) {
        if (s >= path.size()) {
            throw DomainError("site " + std::to_string(s) + " is not on the lattice");
        }
        uint32_t pos = path.position(s);
        if (l == path.string_letter(s)) {
            kp.phase *= path.string_phase(s);
            kp.times_mode(2 * pos + 1);
            kp.times_mode(2 * pos);
            continue;
        }
        for (uint32_t q = 0; q < pos; q++) {
            kp.phase *= path.string_phase(path.order()[q]);
            kp.times_mode(2 * q + 1);
            kp.times_mode(2 * q);
        }
        kp.times_mode(l == path.b_letter(s) ? 2 * pos + 1 : 2 * pos);
    }
    return from_keys(kp, path);
}

PauliString majorana_to_spin(const MajoranaMonomial &m, const JWPath &path) {
    PauliString out({}, m.phase());
    for (const auto &mode : m.factors()) {
        uint32_t pos = path.position(mode.site);
        std::vector<PauliString::Term> u;
        for (uint32_t q = 0; q < pos; q++) {
            SiteId s = path.order()[q];
            u.emplace_back(s, path.string_letter(s));
        }
        u.emplace_back(mode.site, mode.kind == MajoranaKind::B ? path.b_letter(mode.site) : path.a_letter(mode.site));
        out *= PauliString(std::move(u));
    }
    return out;
}

ModeClassification classify_modes(const TwistLattice &lat, const JWPath &path) {
    if (path.size() != lat.num_sites()) {
        throw DomainError("path does not cover the lattice");
    }
    std::set<uint32_t> seen;
    for (const auto &pl : lat.plaquettes()) {
        MajoranaMonomial img = jw_map(lat.stabilizer(pl.id), path);
        for (const auto &m : img.factors()) {
            seen.insert(path.key(m));
        }
    }
    ModeClassification c;
    for (uint32_t k = 0; k < 2 * path.size(); k++) {
        MajoranaMode m = path.mode_of_key(k);
        bool hit = seen.count(k) > 0;
        if (lat.on_boundary(m.site)) {
            if (!hit) {
                c.edge.push_back(m);
            } else {
                c.paired.push_back(m);
            }
        } else if (hit) {
            c.paired.push_back(m);
        } else {
            c.unpaired.push_back(m);
        }
    }
    return c;
}

MajoranaMode twist_mode(const TwistLattice &lat, const JWPath &path, TwistId t) {
    if (t >= lat.twists().size()) {
        throw DomainError("unknown twist " + std::to_string(t));
    }
    SiteId s = lat.twists()[t].site;
    std::vector<MajoranaMode> found;
    ModeClassification c = classify_modes(lat, path);
    for (const auto &m : c.unpaired) {
        if (m.site == s) {
            found.push_back(m);
        }
    }
    if (found.size() != 1) {
        fail_invariant("twist " + std::to_string(t) + " does not carry exactly one unpaired mode");
    }
    return found[0];
}

PauliString mode_parity(const MajoranaMode &m1, const MajoranaMode &m2, const JWPath &path) {
    std::vector<MajoranaMode> f = {m1, m2};
    if (path.key(m2) < path.key(m1)) {
        std::swap(f[0], f[1]);
    }
    return majorana_to_spin(MajoranaMonomial::canonical(f, Phase::i(), path), path);
}

PauliString parity_operator(const TwistLattice &lat, const JWPath &path, size_t pair) {
    auto [t1, t2] = lat.pair_twists(pair);
    ModeClassification c = classify_modes(lat, path);
    auto at = [&](TwistId t) {
        SiteId s = lat.twists()[t].site;
        std::vector<MajoranaMode> f;
        for (const auto &m : c.unpaired) {
            if (m.site == s) {
                f.push_back(m);
            }
        }
        if (f.size() != 1) {
            fail_invariant("twist " + std::to_string(t) + " does not carry exactly one unpaired mode");
        }
        return f[0];
    };
    return mode_parity(at(t1), at(t2), path);
}

bool is_pair_product(const MajoranaMonomial &m) {
    if (m.factors().size() != 4 || !m.phase().is_real()) {
        return false;
    }
    for (const auto &f : m.factors()) {
        if (f.kind != m.factors()[0].kind) {
            return false;
        }
    }
    return true;
}

namespace {

struct XZ {
    BitVec x, z;
    XZ &operator^=(const XZ &o) {
        x ^= o.x;
        z ^= o.z;
        return *this;
    }
    size_t weight() const {
        size_t w = 0;
        for (size_t k = 0; k < x.words().size(); k++) {
            w += std::popcount(x.words()[k] | z.words()[k]);
        }
        return w;
    }
};

XZ to_xz(const PauliString &p, size_t n) {
    XZ v{BitVec(n), BitVec(n)};
    for (const auto &[s, l] : p.terms()) {
        v.x.set(s, static_cast<int>(l) & 1);
        v.z.set(s, static_cast<int>(l) & 2);
    }
    return v;
}

}  // namespace

PauliString reduce_by_stabilizers(const PauliString &p, const TwistLattice &lat) {
    if (!in_commutant(lat, p)) {
        throw DomainError("operator does not commute with every plaquette");
    }
    if (p.terms().empty()) {
        return p;
    }
    int r0 = INT32_MAX, r1 = -1, c0 = INT32_MAX, c1 = -1;
    for (const auto &[s, l] : p.terms()) {
        Coord c = lat.coord(s);
        r0 = std::min(r0, c.row);
        r1 = std::max(r1, c.row);
        c0 = std::min(c0, c.col);
        c1 = std::max(c1, c.col);
    }
    std::vector<PlaquetteId> cand;
    for (const auto &pl : lat.plaquettes()) {
        bool inside = true;
        for (SiteId s : pl.sites) {
            Coord c = lat.coord(s);
            inside &= c.row >= r0 && c.row <= r1 && c.col >= c0 && c.col <= c1;
        }
        if (inside) {
            cand.push_back(pl.id);
        }
    }
    size_t n = lat.num_sites();
    XZ base = to_xz(p, n);
    std::vector<XZ> gens;
    for (PlaquetteId id : cand) {
        gens.push_back(to_xz(lat.stabilizer(id), n));
    }

    std::vector<PlaquetteId> chosen;
    constexpr size_t kExactLimit = 20;
    if (cand.size() <= kExactLimit) {
        // Gray-code walk over every subset; ties go to the smaller mask.
        XZ cur = base;
        uint64_t mask = 0;
        uint64_t best_mask = 0;
        size_t best_w = cur.weight();
        uint64_t total = uint64_t{1} << cand.size();
        for (uint64_t g = 1; g < total; g++) {
            int bit = std::countr_zero(g);
            cur ^= gens[bit];
            mask ^= uint64_t{1} << bit;
            size_t w = cur.weight();
            if (w < best_w || (w == best_w && mask < best_mask)) {
                best_w = w;
                best_mask = mask;
            }
        }
        for (size_t k = 0; k < cand.size(); k++) {
            if ((best_mask >> k) & 1) {
                chosen.push_back(cand[k]);
            }
        }
    } else {
        XZ cur = base;
        std::vector<bool> used(cand.size(), false);
        bool improved = true;
        while (improved) {
            improved = false;
            for (size_t k = 0; k < cand.size(); k++) {
                XZ t = cur;
                t ^= gens[k];
                if (t.weight() < cur.weight()) {
                    cur = t;
                    used[k] = !used[k];
                    improved = true;
                }
            }
        }
        for (size_t k = 0; k < cand.size(); k++) {
            if (used[k]) {
                chosen.push_back(cand[k]);
            }
        }
    }
    PauliString out = p;
    for (PlaquetteId id : chosen) {
        out *= lat.stabilizer(id);
    }
    return out;
}

}  // namespace twistcode
