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

#include "twistcode/pauli.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "twistcode/errors.h"

namespace twistcode {

std::complex<double> Phase::value() const {
    static const std::complex<double> table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return table[k_];
}

std::string_view Phase::prefix() const {
    static const std::string_view table[4] = {"", "i·", "-", "-i·"};
    return table[k_];
}

char letter_char(Letter l) {
    return "IXZY"[static_cast<int>(l)];
}

Letter letter_from_char(char c) {
    switch (c) {
        case 'I':
            return Letter::I;
        case 'X':
            return Letter::X;
        case 'Y':
            return Letter::Y;
        case 'Z':
            return Letter::Z;
        default:
            throw DomainError(std::string("not a Pauli letter: ") + c);
    }
}

std::pair<Phase, Letter> letter_product(Letter a, Letter b) {
    int x1 = static_cast<int>(a) & 1, z1 = static_cast<int>(a) >> 1;
    int x2 = static_cast<int>(b) & 1, z2 = static_cast<int>(b) >> 1;
    int x3 = x1 ^ x2, z3 = z1 ^ z2;
    int k = x1 * z1 + x2 * z2 + 2 * z1 * x2 - x3 * z3;
    return {Phase::from_exponent(k), static_cast<Letter>(x3 | (z3 << 1))};
}

PauliString::PauliString(std::vector<Term> terms, Phase phase) : phase_(phase) {
    std::stable_sort(terms.begin(), terms.end(), [](const Term &a, const Term &b) { return a.first < b.first; });
    for (const auto &[s, l] : terms) {
        if (l == Letter::I) {
            continue;
        }
        if (!terms_.empty() && terms_.back().first == s) {
            auto [ph, r] = letter_product(terms_.back().second, l);
            phase_ *= ph;
            if (r == Letter::I) {
                terms_.pop_back();
            } else {
                terms_.back().second = r;
            }
        } else {
            terms_.emplace_back(s, l);
        }
    }
}

PauliString PauliString::parse(std::string_view text) {
    std::string t(text);
    Phase ph;
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < t.size() && std::isspace(static_cast<unsigned char>(t[pos]))) {
            pos++;
        }
    };
    skip_ws();
    if (pos < t.size() && (t[pos] == '-' || t[pos] == '+')) {
        if (t[pos] == '-') {
            ph *= Phase::minus_one();
        }
        pos++;
    }
    if (pos < t.size() && t[pos] == 'i') {
        ph *= Phase::i();
        pos++;
        if (t.compare(pos, 2, "·") == 0) {
            pos += 2;
        } else if (pos < t.size() && t[pos] == '*') {
            pos++;
        } else {
            throw DomainError("bad phase prefix in '" + t + "'");
        }
    }
    std::vector<Term> terms;
    skip_ws();
    if (t.substr(pos) == "I") {
        return PauliString({}, ph);
    }
    while (pos < t.size()) {
        Letter l = letter_from_char(t[pos++]);
        size_t start = pos;
        while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) {
            pos++;
        }
        if (start == pos) {
            throw DomainError("missing site id in '" + t + "'");
        }
        auto site = static_cast<SiteId>(std::stoul(t.substr(start, pos - start)));
        for (const auto &[s, _] : terms) {
            if (s == site) {
                throw DomainError("site " + std::to_string(site) + " repeated in '" + t + "'");
            }
        }
        terms.emplace_back(site, l);
        skip_ws();
    }
    return PauliString(std::move(terms), ph);
}

Letter PauliString::at(SiteId s) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), s, [](const Term &a, SiteId v) { return a.first < v; });
    if (it != terms_.end() && it->first == s) {
        return it->second;
    }
    return Letter::I;
}

PauliString PauliString::operator*(const PauliString &o) const {
    PauliString r;
    r.phase_ = phase_ * o.phase_;
    r.terms_.reserve(terms_.size() + o.terms_.size());
    size_t a = 0, b = 0;
    while (a < terms_.size() || b < o.terms_.size()) {
        if (b == o.terms_.size() || (a < terms_.size() && terms_[a].first < o.terms_[b].first)) {
            r.terms_.push_back(terms_[a++]);
        } else if (a == terms_.size() || o.terms_[b].first < terms_[a].first) {
            r.terms_.push_back(o.terms_[b++]);
        } else {
            auto [ph, l] = letter_product(terms_[a].second, o.terms_[b].second);
            r.phase_ *= ph;
            if (l != Letter::I) {
                r.terms_.emplace_back(terms_[a].first, l);
            }
            a++;
            b++;
        }
    }
    return r;
}

PauliString multiply(const PauliString &p, const PauliString &q) {
    return p * q;
}

bool commutes(const PauliString &p, const PauliString &q) {
    const auto &a = p.terms();
    const auto &b = q.terms();
    size_t i = 0, j = 0;
    bool anti = false;
    while (i < a.size() && j < b.size()) {
        if (a[i].first < b[j].first) {
            i++;
        } else if (b[j].first < a[i].first) {
            j++;
        } else {
            anti ^= letters_anticommute(a[i].second, b[j].second);
            i++;
            j++;
        }
    }
    return !anti;
}

std::string PauliString::str() const {
    return str_in_order({});
}

std::string PauliString::str_in_order(const std::vector<SiteId> &order) const {
    std::ostringstream out;
    out << phase_.prefix();
    if (terms_.empty()) {
        out << "I";
        return out.str();
    }
    std::vector<Term> ts = terms_;
    if (!order.empty()) {
        std::map<SiteId, size_t> rank;
        for (size_t k = 0; k < order.size(); k++) {
            rank.emplace(order[k], k);
        }
        auto key = [&](const Term &t) {
            auto it = rank.find(t.first);
            return std::make_pair(it == rank.end() ? order.size() : it->second, t.first);
        };
        std::stable_sort(ts.begin(), ts.end(), [&](const Term &x, const Term &y) { return key(x) < key(y); });
    }
    bool first = true;
    for (const auto &[s, l] : ts) {
        if (!first) {
            out << ' ';
        }
        first = false;
        out << letter_char(l) << s;
    }
    return out.str();
}

size_t PauliStringHash::operator()(const PauliString &p) const {
    size_t h = p.phase().exponent();
    for (const auto &[s, l] : p.terms()) {
        h = h * 1000003u ^ (static_cast<size_t>(s) * 4 + static_cast<size_t>(l));
    }
    return h;
}

}  // namespace twistcode
