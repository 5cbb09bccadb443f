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

#ifndef TWISTCODE_GF2_H
#define TWISTCODE_GF2_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace twistcode {

class BitVec {
   public:
    BitVec() = default;
    explicit BitVec(size_t n);

    size_t size() const { return n_; }
    bool get(size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(size_t i, bool v) {
        uint64_t m = uint64_t{1} << (i & 63);
        if (v) {
            w_[i >> 6] |= m;
        } else {
            w_[i >> 6] &= ~m;
        }
    }
    void flip(size_t i) { w_[i >> 6] ^= uint64_t{1} << (i & 63); }

    BitVec &operator^=(const BitVec &o);
    BitVec &operator&=(const BitVec &o);
    BitVec &operator|=(const BitVec &o);
    bool operator==(const BitVec &o) const { return n_ == o.n_ && w_ == o.w_; }

    size_t popcount() const;
    bool any() const;
    // Parity of the bitwise AND.
    bool dot(const BitVec &o) const;
    // Index of the lowest set bit, or size() when empty.
    size_t first_set() const;

    const std::vector<uint64_t> &words() const { return w_; }
    std::vector<uint64_t> &words() { return w_; }

   private:
    size_t n_ = 0;
    std::vector<uint64_t> w_;
};

BitVec operator^(BitVec a, const BitVec &b);

// Incremental echelon basis that remembers how each row was built.
class Gf2Basis {
   public:
    Gf2Basis(size_t width, size_t max_generators);

    // Adds the next generator. Returns false when it is already in the span;
    // in that case last_dependency() names the generators it equals.
    bool add(const BitVec &v);
    size_t rank() const { return rows_.size(); }
    size_t generators() const { return added_; }
    const std::vector<size_t> &last_dependency() const { return last_dep_; }

    // Indices of added generators whose sum is v, or nullopt.
    std::optional<std::vector<size_t>> express(const BitVec &v) const;

   private:
    struct Row {
        BitVec v;
        BitVec combo;
        size_t pivot;
    };
    size_t width_;
    size_t max_gen_;
    size_t added_ = 0;
    std::vector<Row> rows_;
    std::vector<size_t> last_dep_;
};

size_t gf2_rank(const std::vector<BitVec> &rows);

// Some c with rows[i].dot(c) == rhs.get(i) for every i.
std::optional<BitVec> gf2_solve(const std::vector<BitVec> &rows, const BitVec &rhs, size_t width);

// Basis of the combinations y (over row indices) with sum_i y_i rows[i] == 0.
std::vector<BitVec> gf2_left_nullspace(const std::vector<BitVec> &rows, size_t width);

}  // namespace twistcode

#endif
