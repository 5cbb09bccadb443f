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

#include "twistcode/tableau.h"

#include <sstream>

#include "twistcode/errors.h"

namespace twistcode {

PauliRow PauliRow::from(const PauliString &p, size_t n) {
    PauliRow r{BitVec(n), BitVec(n), 0};
    int ny = 0;
    for (const auto &[s, l] : p.terms()) {
        if (s >= n) {
            throw DomainError("site " + std::to_string(s) + " outside the tableau");
        }
        r.x.set(s, static_cast<int>(l) & 1);
        r.z.set(s, static_cast<int>(l) & 2);
        ny += l == Letter::Y;
    }
    r.k = static_cast<uint8_t>((p.phase().exponent() + ny) & 3);
    return r;
}

PauliString PauliRow::to_string() const {
    std::vector<PauliString::Term> terms;
    int ny = 0;
    for (size_t s = 0; s < x.size(); s++) {
        int l = (x.get(s) ? 1 : 0) | (z.get(s) ? 2 : 0);
        if (l) {
            terms.emplace_back(static_cast<SiteId>(s), static_cast<Letter>(l));
            ny += l == 3;
        }
    }
    return PauliString(std::move(terms), Phase::from_exponent(k - ny));
}

bool PauliRow::anticommutes(const PauliRow &o) const {
    return x.dot(o.z) != z.dot(o.x);
}

void PauliRow::times(const PauliRow &o) {
    BitVec t = z;
    t &= o.x;
    k = static_cast<uint8_t>((k + o.k + 2 * t.popcount()) & 3);
    x ^= o.x;
    z ^= o.z;
}

Tableau::Tableau(size_t n) : n_(n) {
    rows_.reserve(2 * n);
    for (size_t i = 0; i < n; i++) {
        PauliRow r{BitVec(n), BitVec(n), 0};
        r.x.set(i, true);
        rows_.push_back(std::move(r));
    }
    for (size_t i = 0; i < n; i++) {
        PauliRow r{BitVec(n), BitVec(n), 0};
        r.z.set(i, true);
        rows_.push_back(std::move(r));
    }
}

std::optional<int> Tableau::peek(const PauliString &p) const {
    if (!p.is_hermitian()) {
        throw DomainError("cannot measure a non-Hermitian string");
    }
    PauliRow q = PauliRow::from(p, n_);
    for (size_t i = n_; i < 2 * n_; i++) {
        if (rows_[i].anticommutes(q)) {
            return std::nullopt;
        }
    }
    PauliRow acc{BitVec(n_), BitVec(n_), 0};
    for (size_t i = 0; i < n_; i++) {
        if (rows_[i].anticommutes(q)) {
            acc.times(rows_[n_ + i]);
        }
    }
    if (!(acc.x == q.x) || !(acc.z == q.z)) {
        fail_invariant("commuting string is not generated by the stabilizers");
    }
    return acc.k == q.k ? +1 : -1;
}

Tableau::Measurement Tableau::measure(const PauliString &p, Rng &rng, int forced) {
    if (!p.is_hermitian()) {
        throw DomainError("cannot measure a non-Hermitian string");
    }
    PauliRow q = PauliRow::from(p, n_);
    size_t pivot = 2 * n_;
    for (size_t i = n_; i < 2 * n_; i++) {
        if (rows_[i].anticommutes(q)) {
            pivot = i;
            break;
        }
    }
    if (pivot == 2 * n_) {
        int v = *peek(p);
        if (forced && forced != v) {
            throw ZeroProbabilityError("postselected outcome has zero probability");
        }
        return {v, true};
    }
    for (size_t i = 0; i < 2 * n_; i++) {
        if (i != pivot && i != pivot - n_ && rows_[i].anticommutes(q)) {
            rows_[i].times(rows_[pivot]);
        }
    }
    int outcome = forced ? forced : (coin(rng) ? -1 : +1);
    rows_[pivot - n_] = rows_[pivot];
    q.k = static_cast<uint8_t>((q.k + (outcome < 0 ? 2 : 0)) & 3);
    rows_[pivot] = std::move(q);
    return {outcome, false};
}

void Tableau::apply_pauli(const PauliString &p) {
    PauliRow q = PauliRow::from(p, n_);
    for (auto &r : rows_) {
        if (r.anticommutes(q)) {
            r.k = static_cast<uint8_t>((r.k + 2) & 3);
        }
    }
}

bool Tableau::check_invariants() const {
    for (size_t i = 0; i < 2 * n_; i++) {
        const PauliRow &r = rows_[i];
        BitVec t = r.x;
        t &= r.z;
        if ((r.k & 1) != (t.popcount() & 1)) {
            return false;
        }
        for (size_t j = i + 1; j < 2 * n_; j++) {
            bool expect = (j == i + n_);
            if (rows_[i].anticommutes(rows_[j]) != expect) {
                return false;
            }
        }
    }
    return true;
}

std::string Tableau::serialize() const {
    std::ostringstream out;
    out << "twistcode-tableau 1\n" << n_ << "\n";
    for (const auto &r : rows_) {
        out << static_cast<int>(r.k) << ' ';
        for (size_t s = 0; s < n_; s++) {
            out << "_XZY"[(r.x.get(s) ? 1 : 0) | (r.z.get(s) ? 2 : 0)];
        }
        out << '\n';
    }
    return out.str();
}

Tableau Tableau::deserialize(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string magic;
    int version = 0;
    size_t n = 0;
    if (!(in >> magic >> version >> n) || magic != "twistcode-tableau" || version != 1) {
        throw DomainError("not a version-1 tableau snapshot");
    }
    Tableau t;
    t.n_ = n;
    for (size_t i = 0; i < 2 * n; i++) {
        int k;
        std::string bits;
        if (!(in >> k >> bits) || bits.size() != n || k < 0 || k > 3) {
            throw DomainError("truncated tableau snapshot");
        }
        PauliRow r{BitVec(n), BitVec(n), static_cast<uint8_t>(k)};
        for (size_t s = 0; s < n; s++) {
            size_t code = std::string_view("_XZY").find(bits[s]);
            if (code == std::string_view::npos) {
                throw DomainError("bad tableau symbol");
            }
            r.x.set(s, code & 1);
            r.z.set(s, code & 2);
        }
        t.rows_.push_back(std::move(r));
    }
    if (!t.check_invariants()) {
        throw DomainError("snapshot violates the symplectic invariants");
    }
    return t;
}

}  // namespace twistcode
