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

#include <gtest/gtest.h>

#include "twistcode/gf2.h"
#include "twistcode/rng.h"

using namespace twistcode;

namespace {

BitVec bits(const std::string &s) {
    BitVec v(s.size());
    for (size_t i = 0; i < s.size(); i++) {
        v.set(i, s[i] == '1');
    }
    return v;
}

}  // namespace

TEST(Gf2, RankOfDependentRows) {
    EXPECT_EQ(gf2_rank({bits("1100"), bits("0110"), bits("1010")}), 2u);
    EXPECT_EQ(gf2_rank({bits("1000"), bits("0100"), bits("0010")}), 3u);
    EXPECT_EQ(gf2_rank({}), 0u);
}

TEST(Gf2, SolveFindsCombination) {
    // rows are equations a.x = rhs
    std::vector<BitVec> rows = {bits("110"), bits("011")};
    auto x = gf2_solve(rows, bits("10"), 3);
    ASSERT_TRUE(x);
    EXPECT_TRUE(rows[0].dot(*x));
    EXPECT_FALSE(rows[1].dot(*x));
    EXPECT_FALSE(gf2_solve({bits("11"), bits("11")}, bits("10"), 2));
}

TEST(Gf2, BasisExpressesSpan) {
    Gf2Basis b(5, 4);
    EXPECT_TRUE(b.add(bits("11000")));
    EXPECT_TRUE(b.add(bits("01100")));
    EXPECT_FALSE(b.add(bits("10100")));
    auto e = b.express(bits("10100"));
    ASSERT_TRUE(e);
    BitVec acc(5);
    std::vector<BitVec> gens = {bits("11000"), bits("01100"), bits("10100")};
    for (size_t k : *e) {
        acc ^= gens[k];
    }
    EXPECT_EQ(acc, bits("10100"));
    EXPECT_FALSE(b.express(bits("00001")));
}

TEST(Gf2, LeftNullspaceRandom) {
    Rng rng(3);
    for (int t = 0; t < 50; t++) {
        std::vector<BitVec> rows;
        for (int r = 0; r < 8; r++) {
            BitVec v(6);
            for (int c = 0; c < 6; c++) {
                v.set(c, coin(rng));
            }
            rows.push_back(v);
        }
        auto ns = gf2_left_nullspace(rows, 6);
        EXPECT_EQ(ns.size(), rows.size() - gf2_rank(rows));
        for (const auto &combo : ns) {
            BitVec acc(6);
            for (size_t r = 0; r < rows.size(); r++) {
                if (combo.get(r)) {
                    acc ^= rows[r];
                }
            }
            EXPECT_FALSE(acc.any());
        }
    }
}
