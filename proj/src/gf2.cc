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

#include "twistcode/gf2.h"

#include <bit>

namespace twistcode {

BitVec::BitVec(size_t n) : n_(n), w_((n + 63) / 64, 0) {}

BitVec &BitVec::operator^=(const BitVec &o) {
    for (size_t k = 0; k < w_.size(); k++) {
        w_[k] ^= o.w_[k];
    }
    return *this;
}

BitVec &BitVec::operator&=(const BitVec &o) {
    for (size_t k = 0; k < w_.size(); k++) {
        w_[k] &= o.w_[k];
    }
    return *this;
}

BitVec &BitVec::operator|=(const BitVec &o) {
    for (size_t k = 0; k < w_.size(); k++) {
        w_[k] |= o.w_[k];
    }
    return *this;
}

BitVec operator^(BitVec a, const BitVec &b) {
    a ^= b;
    return a;
}

size_t BitVec::popcount() const {
    size_t c = 0;
    for (uint64_t w : w_) {
        c += std::popcount(w);
    }
    return c;
}

bool BitVec::any() const {
    for (uint64_t w : w_) {
        if (w) {
            return true;
        }
    }
    return false;
}

bool BitVec::dot(const BitVec &o) const {
    uint64_t acc = 0;
    for (size_t k = 0; k < w_.size(); k++) {
        acc ^= w_[k] & o.w_[k];
    }
    return std::popcount(acc) & 1;
}

size_t BitVec::first_set() const {
    for (size_t k = 0; k < w_.size(); k++) {
        if (w_[k]) {
            return k * 64 + std::countr_zero(w_[k]);
        }
    }
    return n_;
}

Gf2Basis::Gf2Basis(size_t width, size_t max_generators) : width_(width), max_gen_(max_generators) {}

bool Gf2Basis::add(const BitVec &v) {
    BitVec cur = v;
    BitVec combo(max_gen_);
    combo.set(added_, true);
    for (const Row &r : rows_) {
        if (cur.get(r.pivot)) {
            cur ^= r.v;
            combo ^= r.combo;
        }
    }
    added_++;
    size_t p = cur.first_set();
    if (p == width_) {
        last_dep_.clear();
        for (size_t k = 0; k < added_; k++) {
            if (combo.get(k)) {
                last_dep_.push_back(k);
            }
        }
        return false;
    }
    rows_.push_back(Row{std::move(cur), std::move(combo), p});
    return true;
}

std::optional<std::vector<size_t>> Gf2Basis::express(const BitVec &v) const {
    BitVec cur = v;
    BitVec combo(max_gen_);
    for (const Row &r : rows_) {
        if (cur.get(r.pivot)) {
            cur ^= r.v;
            combo ^= r.combo;
        }
    }
    if (cur.any()) {
        return std::nullopt;
    }
    std::vector<size_t> out;
    for (size_t k = 0; k < added_; k++) {
        if (combo.get(k)) {
            out.push_back(k);
        }
    }
    return out;
}

size_t gf2_rank(const std::vector<BitVec> &rows) {
    if (rows.empty()) {
        return 0;
    }
    Gf2Basis b(rows[0].size(), rows.size());
    for (const auto &r : rows) {
        b.add(r);
    }
    return b.rank();
}

std::optional<BitVec> gf2_solve(const std::vector<BitVec> &rows, const BitVec &rhs, size_t width) {
    // Augmented rows, bit `width` carries the right hand side.
    std::vector<BitVec> m;
    m.reserve(rows.size());
    for (size_t i = 0; i < rows.size(); i++) {
        BitVec a(width + 1);
        for (size_t k = 0; k < rows[i].words().size(); k++) {
            a.words()[k] = rows[i].words()[k];
        }
        a.set(width, rhs.get(i));
        m.push_back(std::move(a));
    }
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t col = 0; col < width && r < m.size(); col++) {
        size_t sel = r;
        while (sel < m.size() && !m[sel].get(col)) {
            sel++;
        }
        if (sel == m.size()) {
            continue;
        }
        std::swap(m[sel], m[r]);
        for (size_t i = 0; i < m.size(); i++) {
            if (i != r && m[i].get(col)) {
                m[i] ^= m[r];
            }
        }
        pivots.push_back(col);
        r++;
    }
    for (size_t i = r; i < m.size(); i++) {
        if (m[i].get(width)) {
            return std::nullopt;
        }
    }
    BitVec c(width);
    for (size_t i = 0; i < pivots.size(); i++) {
        c.set(pivots[i], m[i].get(width));
    }
    return c;
}

std::vector<BitVec> gf2_left_nullspace(const std::vector<BitVec> &rows, size_t width) {
    Gf2Basis b(width, rows.size());
    std::vector<BitVec> out;
    for (const auto &r : rows) {
        if (!b.add(r)) {
            BitVec y(rows.size());
            for (size_t k : b.last_dependency()) {
                y.set(k, true);
            }
            out.push_back(std::move(y));
        }
    }
    return out;
}

}  // namespace twistcode
