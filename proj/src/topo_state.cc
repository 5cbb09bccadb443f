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

#include "twistcode/topo_state.h"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>

#include "twistcode/errors.h"

namespace twistcode {

namespace {

constexpr double kTiny = 1e-14;

int bit(size_t mask, size_t k) {
    return static_cast<int>((mask >> k) & 1);
}

// Sign picked up when the fermionic factors of the pairs are put in `order`
// (order[j] is the old position now at j).
int reorder_sign(const std::vector<size_t> &order, size_t mask) {
    int s = 1;
    for (size_t j = 0; j < order.size(); j++) {
        for (size_t l = j + 1; l < order.size(); l++) {
            if (order[j] > order[l] && bit(mask, order[j]) && bit(mask, order[l])) {
                s = -s;
            }
        }
    }
    return s;
}

// Relabels two pairs over w<x<y<z to a four-anyon pairing, returning the pair
// holding w first.
Pairing4 classify(AnyonPair p, AnyonPair q, int w) {
    AnyonPair first = p.first == w ? p : q;
    std::array<int, 4> s = {p.first, p.second, q.first, q.second};
    std::sort(s.begin(), s.end());
    if (first.second == s[1]) {
        return Pairing4::P12_34;
    }
    if (first.second == s[2]) {
        return Pairing4::P13_24;
    }
    return Pairing4::P14_23;
}

// Pairs i and j of s.pairing() are replaced by q1 and q2 on the same anyons.
TopoState two_pair_move(const TopoState &s, size_t i, size_t j, AnyonPair q1, AnyonPair q2) {
    const auto &old = s.pairing();
    AnyonPair p1 = old[i];
    AnyonPair p2 = old[j];
    int w = std::min(p1.first, p2.first);
    if (p1.first != w) {
        std::swap(p1, p2);
        std::swap(i, j);
    }
    if (q1.first != w) {
        std::swap(q1, q2);
    }
    Pairing4 from = classify(p1, p2, w);
    Pairing4 to = classify(q1, q2, w);

    std::vector<AnyonPair> next;
    std::vector<size_t> old_order = {i, j};
    for (size_t k = 0; k < old.size(); k++) {
        if (k != i && k != j) {
            old_order.push_back(k);
            next.push_back(old[k]);
        }
    }
    next.push_back(q1);
    next.push_back(q2);
    std::vector<AnyonPair> sorted = make_pairing(s.anyons(), next);
    // Front-first layout of the new pairs, as positions in `sorted`.
    std::vector<size_t> new_order;
    auto pos = [&](AnyonPair p) {
        return static_cast<size_t>(std::find(sorted.begin(), sorted.end(), p) - sorted.begin());
    };
    new_order.push_back(pos(q1));
    new_order.push_back(pos(q2));
    for (size_t k = 0; k + 2 < next.size(); k++) {
        new_order.push_back(pos(next[k]));
    }

    Matrix2 u[2] = {pair_transform(Parity::Even, from, to).conjugate(),
                    pair_transform(Parity::Odd, from, to).conjugate()};
    size_t np = old.size();
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(s.amplitudes().size());
    for (size_t m = 0; m < static_cast<size_t>(s.amplitudes().size()); m++) {
        std::complex<double> a = s.amplitudes()[m];
        if (std::abs(a) < kTiny) {
            continue;
        }
        a *= reorder_sign(old_order, m);
        int x = bit(m, i);
        int par = x ^ bit(m, j);
        // Front-first mask: bits 0, 1 the moved pairs, then the others in order.
        for (int xn = 0; xn < 2; xn++) {
            std::complex<double> c = u[par](xn, x) * a;
            if (std::abs(c) < kTiny) {
                continue;
            }
            size_t front = static_cast<size_t>(xn) | static_cast<size_t>(xn ^ par) << 1;
            for (size_t k = 2; k < np; k++) {
                front |= static_cast<size_t>(bit(m, old_order[k])) << k;
            }
            size_t target = 0;
            for (size_t k = 0; k < np; k++) {
                target |= static_cast<size_t>(bit(front, k)) << new_order[k];
            }
            out[target] += c * static_cast<double>(reorder_sign(new_order, target));
        }
    }
    // unitary up to rounding; keep repeated moves from drifting
    out.normalize();
    return TopoState::from_amplitudes(s.anyons(), sorted, out);
}

}  // namespace

int label_sign(const std::vector<AnyonPair> &pairing, AnyonPair p) {
    if (p.first > p.second) {
        std::swap(p.first, p.second);
    }
    int s = 1;
    for (const auto &q : pairing) {
        if (q.first < p.first && p.first < q.second && q.second < p.second) {
            s = -s;
        }
    }
    return s;
}

std::string sector_name(Sector s) {
    switch (s) {
        case Sector::Even:
            return "even";
        case Sector::Odd:
            return "odd";
        case Sector::Mixed:
            return "mixed";
    }
    return "?";
}

std::vector<AnyonPair> make_pairing(int anyons, std::vector<AnyonPair> pairs) {
    if (anyons != 4 && anyons != 6) {
        throw DomainError("states hold 4 or 6 anyons");
    }
    if (static_cast<int>(pairs.size()) * 2 != anyons) {
        throw DomainError("pairing must cover every anyon exactly once");
    }
    std::vector<bool> seen(anyons + 1, false);
    for (auto &p : pairs) {
        if (p.first > p.second) {
            std::swap(p.first, p.second);
        }
        for (int a : {p.first, p.second}) {
            if (a < 1 || a > anyons || seen[a]) {
                throw DomainError("pairing must cover every anyon exactly once");
            }
            seen[a] = true;
        }
    }
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

std::vector<AnyonPair> standard_pairing(int anyons) {
    std::vector<AnyonPair> out;
    for (int a = 1; a < anyons; a += 2) {
        out.push_back({a, a + 1});
    }
    return make_pairing(anyons, out);
}

TopoState::TopoState(int anyons, std::vector<AnyonPair> pairing, Eigen::VectorXcd amplitudes)
    : n_(anyons), pairing_(std::move(pairing)), amp_(std::move(amplitudes)) {
    bool even = false;
    bool odd = false;
    for (Eigen::Index m = 0; m < amp_.size(); m++) {
        if (std::abs(amp_[m]) > 1e-12) {
            (std::popcount(static_cast<size_t>(m)) % 2 ? odd : even) = true;
        }
    }
    sector_ = even && odd ? Sector::Mixed : (odd ? Sector::Odd : Sector::Even);
}

TopoState TopoState::basis(int anyons, std::vector<AnyonPair> pairing, const std::vector<int> &labels) {
    auto p = make_pairing(anyons, std::move(pairing));
    if (labels.size() != p.size()) {
        throw DomainError("one label per pair expected");
    }
    size_t m = 0;
    for (size_t k = 0; k < labels.size(); k++) {
        if (labels[k] != 0 && labels[k] != 1) {
            throw DomainError("labels are 0 or 1");
        }
        m |= static_cast<size_t>(labels[k]) << k;
    }
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(size_t{1} << p.size());
    v[m] = 1.0;
    return TopoState(anyons, std::move(p), std::move(v));
}

TopoState TopoState::from_amplitudes(int anyons, std::vector<AnyonPair> pairing, Eigen::VectorXcd amplitudes) {
    auto p = make_pairing(anyons, std::move(pairing));
    if (amplitudes.size() != (Eigen::Index{1} << p.size())) {
        throw DomainError("amplitude vector has the wrong length");
    }
    if (std::abs(amplitudes.norm() - 1.0) > 1e-12) {
        throw DomainError("state must have unit norm");
    }
    return TopoState(anyons, std::move(p), std::move(amplitudes));
}

std::complex<double> TopoState::amplitude(const std::vector<int> &labels) const {
    size_t m = 0;
    for (size_t k = 0; k < labels.size(); k++) {
        m |= static_cast<size_t>(labels[k] & 1) << k;
    }
    return amp_[m];
}

int TopoState::pair_index(AnyonPair p) const {
    if (p.first > p.second) {
        std::swap(p.first, p.second);
    }
    auto it = std::find(pairing_.begin(), pairing_.end(), p);
    return it == pairing_.end() ? -1 : static_cast<int>(it - pairing_.begin());
}

namespace {

// One move between pairings that share all but two pairs.
TopoState single_move(const TopoState &s, const std::vector<AnyonPair> &target) {
    std::vector<size_t> differ;
    for (size_t k = 0; k < s.pairing().size(); k++) {
        if (std::find(target.begin(), target.end(), s.pairing()[k]) == target.end()) {
            differ.push_back(k);
        }
    }
    if (differ.empty()) {
        return s;
    }
    std::vector<AnyonPair> fresh;
    for (const auto &q : target) {
        if (s.pair_index(q) < 0) {
            fresh.push_back(q);
        }
    }
    if (differ.size() != 2) {
        fail_invariant("single move between pairings that differ in more than two pairs");
    }
    return two_pair_move(s, differ[0], differ[1], fresh[0], fresh[1]);
}

// Pairings visited from the standard pairing to p. Every basis is defined by
// this route, which keeps all transforms path independent.
std::vector<std::vector<AnyonPair>> route(int anyons, const std::vector<AnyonPair> &p) {
    auto std_p = standard_pairing(anyons);
    size_t shared = 0;
    for (const auto &q : p) {
        shared += std::find(std_p.begin(), std_p.end(), q) != std_p.end();
    }
    if (shared == p.size()) {
        return {};
    }
    if (shared + 2 == p.size()) {
        return {p};
    }
    auto mid = pairing_with(TopoState::basis(anyons, std_p, std::vector<int>(std_p.size(), 0)), p[0]);
    return {mid, p};
}

}  // namespace

TopoState transform_state(const TopoState &s, const std::vector<AnyonPair> &to) {
    auto target = make_pairing(s.anyons(), to);
    if (target == s.pairing()) {
        return s;
    }
    TopoState t = s;
    auto back = route(s.anyons(), s.pairing());
    back.insert(back.begin(), standard_pairing(s.anyons()));
    for (size_t k = back.size() - 1; k-- > 0;) {
        t = single_move(t, back[k]);
    }
    for (const auto &p : route(s.anyons(), target)) {
        t = single_move(t, p);
    }
    return t;
}

std::vector<AnyonPair> pairing_with(const TopoState &s, AnyonPair p) {
    return pairing_with(s.anyons(), s.pairing(), p);
}

std::vector<AnyonPair> pairing_with(int anyons, const std::vector<AnyonPair> &pairing, AnyonPair p) {
    if (p.first > p.second) {
        std::swap(p.first, p.second);
    }
    if (p.first == p.second || p.first < 1 || p.second > anyons) {
        throw DomainError("invalid anyon pair");
    }
    if (std::find(pairing.begin(), pairing.end(), p) != pairing.end()) {
        return pairing;
    }
    std::vector<AnyonPair> out;
    int pa = 0;
    int pb = 0;
    for (const auto &q : pairing) {
        if (q.first == p.first || q.second == p.first) {
            pa = q.first == p.first ? q.second : q.first;
        } else if (q.first == p.second || q.second == p.second) {
            pb = q.first == p.second ? q.second : q.first;
        } else {
            out.push_back(q);
        }
    }
    out.push_back(p);
    out.push_back({std::min(pa, pb), std::max(pa, pb)});
    return make_pairing(anyons, out);
}

PairOutcome measure_pair(const TopoState &s, AnyonPair pair, Rng &rng, int forced) {
    int k = s.pair_index(pair);
    if (k < 0) {
        throw DomainError("pair is not part of the current pairing");
    }
    double p0 = 0.0;
    for (Eigen::Index m = 0; m < s.amplitudes().size(); m++) {
        if (!bit(m, k)) {
            p0 += std::norm(s.amplitudes()[m]);
        }
    }
    p0 = std::clamp(p0, 0.0, 1.0);
    int n = forced >= 0 ? forced : (uniform01(rng) < p0 ? 0 : 1);
    double p = n == 0 ? p0 : 1.0 - p0;
    if (p < 1e-12) {
        throw ZeroProbabilityError("requested pair outcome has zero probability");
    }
    Eigen::VectorXcd v = s.amplitudes();
    for (Eigen::Index m = 0; m < v.size(); m++) {
        if (bit(m, k) != n) {
            v[m] = 0.0;
        }
    }
    v.normalize();
    return {n, p, TopoState::from_amplitudes(s.anyons(), s.pairing(), v)};
}

double pair_probability(const TopoState &s, AnyonPair pair, int n) {
    TopoState t = transform_state(s, pairing_with(s, pair));
    int k = t.pair_index(pair);
    double p = 0.0;
    for (Eigen::Index m = 0; m < t.amplitudes().size(); m++) {
        if (bit(m, k) == n) {
            p += std::norm(t.amplitudes()[m]);
        }
    }
    return p;
}

namespace {

// Applies f(n) to each label n of the pair (a, b) and transforms back.
template <typename F>
TopoState diagonal_on_pair(const TopoState &s, int a, int b, F f) {
    TopoState t = transform_state(s, pairing_with(s, {a, b}));
    int k = t.pair_index({a, b});
    int flip = label_sign(t.pairing(), {a, b}) < 0;
    Eigen::VectorXcd v = t.amplitudes();
    for (Eigen::Index m = 0; m < v.size(); m++) {
        v[m] *= f(bit(m, k) ^ flip);
    }
    return transform_state(TopoState::from_amplitudes(t.anyons(), t.pairing(), v), s.pairing());
}

}  // namespace

TopoState apply_bilinear(const TopoState &s, int a, int b) {
    // i g_a g_b = -(-1)^n for a < b.
    double sgn = a < b ? -1.0 : 1.0;
    return diagonal_on_pair(s, a, b, [sgn](int n) { return std::complex<double>(n ? -sgn : sgn); });
}

TopoState apply_braid(const TopoState &s, int a, int b) {
    // g_b g_a = -i (-1)^n for a < b.
    std::complex<double> g = a < b ? std::complex<double>(0, -1) : std::complex<double>(0, 1);
    return diagonal_on_pair(s, a, b, [g](int n) { return (1.0 + (n ? -g : g)) / std::sqrt(2.0); });
}

std::complex<double> inner(const TopoState &u, const TopoState &v) {
    if (u.anyons() != v.anyons()) {
        throw DomainError("states hold different anyon counts");
    }
    return u.amplitudes().dot(transform_state(v, u.pairing()).amplitudes());
}

double fidelity_up_to_phase(const TopoState &u, const TopoState &v) {
    return std::abs(inner(u, v));
}

Eigen::VectorXcd to_fock(const TopoState &s) {
    return transform_state(s, standard_pairing(s.anyons())).amplitudes();
}

}  // namespace twistcode
