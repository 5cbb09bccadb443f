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

#ifndef TWISTCODE_PAULI_H
#define TWISTCODE_PAULI_H

#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace twistcode {

using SiteId = uint32_t;

// i^k for k in Z4.
class Phase {
   public:
    constexpr Phase() = default;
    static constexpr Phase from_exponent(int k) { return Phase(static_cast<uint8_t>(((k % 4) + 4) % 4)); }
    static constexpr Phase one() { return Phase(0); }
    static constexpr Phase i() { return Phase(1); }
    static constexpr Phase minus_one() { return Phase(2); }
    static constexpr Phase minus_i() { return Phase(3); }

    constexpr uint8_t exponent() const { return k_; }
    constexpr bool is_real() const { return (k_ & 1) == 0; }
    // +1 or -1, only meaningful when is_real().
    constexpr int sign() const { return k_ == 0 ? 1 : -1; }
    std::complex<double> value() const;

    constexpr Phase operator*(Phase o) const { return Phase(static_cast<uint8_t>((k_ + o.k_) & 3)); }
    constexpr Phase &operator*=(Phase o) {
        k_ = static_cast<uint8_t>((k_ + o.k_) & 3);
        return *this;
    }
    constexpr Phase conj() const { return Phase(static_cast<uint8_t>((4 - k_) & 3)); }
    constexpr bool operator==(const Phase &) const = default;

    // One of "", "i·", "-", "-i·".
    std::string_view prefix() const;

   private:
    constexpr explicit Phase(uint8_t k) : k_(k) {}
    uint8_t k_ = 0;
};

// Bit 0 is the X part, bit 1 the Z part; Y = i X Z.
enum class Letter : uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

char letter_char(Letter l);
Letter letter_from_char(char c);
// a * b = phase * letter.
std::pair<Phase, Letter> letter_product(Letter a, Letter b);
inline bool letters_anticommute(Letter a, Letter b) {
    return a != Letter::I && b != Letter::I && a != b;
}

class PauliString {
   public:
    using Term = std::pair<SiteId, Letter>;

    PauliString() = default;
    // Terms may be in any order; repeated sites are multiplied left to right.
    PauliString(std::vector<Term> terms, Phase phase = Phase::one());
    static PauliString single(SiteId s, Letter l) { return PauliString({{s, l}}); }
    // Parses "i·X12 Y11 Z9", "-X0 Z3", "I". Accepts "i*" for "i·"; rejects repeated sites.
    static PauliString parse(std::string_view text);

    const std::vector<Term> &terms() const { return terms_; }
    Phase phase() const { return phase_; }
    void set_phase(Phase p) { phase_ = p; }
    size_t weight() const { return terms_.size(); }
    bool is_identity_up_to_phase() const { return terms_.empty(); }
    Letter at(SiteId s) const;
    // Hermitian iff the phase is real.
    bool is_hermitian() const { return phase_.is_real(); }

    PauliString operator*(const PauliString &o) const;
    PauliString &operator*=(const PauliString &o) { return *this = *this * o; }
    bool operator==(const PauliString &) const = default;

    std::string str() const;
    // Renders terms in the given site order; sites not listed go last in id order.
    std::string str_in_order(const std::vector<SiteId> &order) const;

   private:
    std::vector<Term> terms_;
    Phase phase_;
};

PauliString multiply(const PauliString &p, const PauliString &q);
bool commutes(const PauliString &p, const PauliString &q);

struct PauliStringHash {
    size_t operator()(const PauliString &p) const;
};

}  // namespace twistcode

#endif
